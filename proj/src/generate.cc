#include "disponte/generate.h"

#include <stdexcept>
#include <string>
#include <vector>

namespace disponte {

namespace {

std::string Indexed(const char* prefix, int i) { return prefix + std::to_string(i); }

std::size_t Pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::string ConceptName(std::mt19937_64& rng, const RandomKbOptions& o) {
  return std::string(1, static_cast<char>('A' + Pick(rng, o.concept_names)));
}

std::string RoleName(std::mt19937_64& rng, const RandomKbOptions& o) {
  return std::string(1, static_cast<char>('r' + Pick(rng, o.role_names)));
}

std::string IndividualName(std::mt19937_64& rng, const RandomKbOptions& o) {
  return std::string(1, static_cast<char>('a' + Pick(rng, o.individuals)));
}

}  // namespace

KnowledgeBase GenerateSynthetic(int n, double p) {
  if (n < 1) throw std::invalid_argument("synthetic KB needs n >= 1");
  std::vector<AnnotatedAxiom> axioms;
  axioms.reserve(3 * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Concept prev = Concept::Atomic(Indexed("B", i - 1));
    const Concept b = Concept::Atomic(Indexed("B", i));
    const Concept pi = Concept::Atomic(Indexed("P", i));
    const Concept qi = Concept::Atomic(Indexed("Q", i));
    axioms.push_back({SubClassOf{prev, Concept::And(pi, qi)}, p});
    axioms.push_back({SubClassOf{pi, b}, p});
    axioms.push_back({SubClassOf{qi, b}, p});
  }
  return KnowledgeBase(std::move(axioms));
}

Query SyntheticQuery(int n) {
  return SubsumptionQuery{Concept::Atomic("B0"), Concept::Atomic(Indexed("B", n))};
}

Concept GenerateRandomConcept(std::mt19937_64& rng, const RandomKbOptions& o, int depth) {
  std::uniform_int_distribution<int> pct(0, 99);
  if (depth <= 0 || pct(rng) < 40) {
    const int roll = pct(rng);
    if (roll < 3) return Concept::Top();
    if (roll < 5) return Concept::Bottom();
    return Concept::Atomic(ConceptName(rng, o));
  }
  switch (Pick(rng, 5)) {
    case 0:
      return Concept::Not(GenerateRandomConcept(rng, o, depth - 1));
    case 1: {
      Concept l = GenerateRandomConcept(rng, o, depth - 1);
      return Concept::And(std::move(l), GenerateRandomConcept(rng, o, depth - 1));
    }
    case 2: {
      Concept l = GenerateRandomConcept(rng, o, depth - 1);
      return Concept::Or(std::move(l), GenerateRandomConcept(rng, o, depth - 1));
    }
    case 3: {
      std::string r = RoleName(rng, o);
      return Concept::Exists(std::move(r), GenerateRandomConcept(rng, o, depth - 1));
    }
    default: {
      std::string r = RoleName(rng, o);
      return Concept::Forall(std::move(r), GenerateRandomConcept(rng, o, depth - 1));
    }
  }
}

KnowledgeBase GenerateRandomKb(std::mt19937_64& rng, const RandomKbOptions& o) {
  std::uniform_int_distribution<int> pct(0, 99);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  const std::size_t count = 1 + Pick(rng, o.max_axioms);
  std::size_t probabilistic = 0;
  std::vector<AnnotatedAxiom> axioms;
  for (std::size_t k = 0; k < count; ++k) {
    AnnotatedAxiom a{RoleAssertion{}, std::nullopt};
    const int kind = pct(rng);
    if (kind < 50) {
      Concept sub = GenerateRandomConcept(rng, o, o.max_depth);
      a.axiom = SubClassOf{std::move(sub), GenerateRandomConcept(rng, o, o.max_depth)};
    } else if (kind < 80) {
      std::string ind = IndividualName(rng, o);
      a.axiom = ConceptAssertion{std::move(ind), GenerateRandomConcept(rng, o, o.max_depth)};
    } else {
      std::string s = IndividualName(rng, o);
      std::string t = IndividualName(rng, o);
      a.axiom = RoleAssertion{std::move(s), std::move(t), RoleName(rng, o)};
    }
    if (probabilistic < o.max_probabilistic && pct(rng) < 75) {
      a.probability = weight(rng);
      ++probabilistic;
    }
    axioms.push_back(std::move(a));
  }
  return KnowledgeBase(std::move(axioms));
}

Query GenerateRandomQuery(std::mt19937_64& rng, const RandomKbOptions& o) {
  std::uniform_int_distribution<int> pct(0, 99);
  if (pct(rng) < 70) {
    std::string ind = IndividualName(rng, o);
    Concept c = Concept::Atomic(ConceptName(rng, o));
    if (pct(rng) < 20) c = Concept::Not(std::move(c));
    return InstanceQuery{std::move(ind), std::move(c)};
  }
  Concept sub = Concept::Atomic(ConceptName(rng, o));
  return SubsumptionQuery{std::move(sub), Concept::Atomic(ConceptName(rng, o))};
}

}  // namespace disponte
