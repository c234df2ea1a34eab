#ifndef DISPONTE_GENERATE_H_
#define DISPONTE_GENERATE_H_

#include <cstddef>
#include <cstdint>
#include <random>

#include "disponte/kb.h"

namespace disponte {

// The layered KB with 2^n justifications for B0 <= Bn. For i = 1..n:
//   0.6 :: B{i-1} <= P{i} and Q{i}
//   0.6 :: P{i} <= B{i}
//   0.6 :: Q{i} <= B{i}
// Throws std::invalid_argument for n < 1.
KnowledgeBase GenerateSynthetic(int n, double p = 0.6);
Query SyntheticQuery(int n);

struct RandomKbOptions {
  std::size_t max_axioms = 10;
  std::size_t max_probabilistic = 8;
  std::size_t concept_names = 4;
  std::size_t role_names = 2;
  std::size_t individuals = 3;
  int max_depth = 2;
};

// Random ALC KB with probabilities drawn from U(0, 1). Deterministic in the
// state of `rng`.
KnowledgeBase GenerateRandomKb(std::mt19937_64& rng, const RandomKbOptions& options = {});
Concept GenerateRandomConcept(std::mt19937_64& rng, const RandomKbOptions& options, int depth);
// Instance queries on atomic or negated-atomic concepts, or subsumptions
// between concept names.
Query GenerateRandomQuery(std::mt19937_64& rng, const RandomKbOptions& options = {});

}  // namespace disponte

#endif  // DISPONTE_GENERATE_H_
