#ifndef DISPONTE_SEMANTICS_H_
#define DISPONTE_SEMANTICS_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string_view>
#include <vector>

#include "disponte/bdd.h"
#include "disponte/justify.h"
#include "disponte/kb.h"
#include "disponte/limits.h"
#include "disponte/pinpoint.h"

namespace disponte {

// (beta_i, k): include (k = 1) or exclude (k = 0) probabilistic axiom i.
struct AtomicChoice {
  std::size_t ordinal;
  bool included;
};

// A consistent set of atomic choices, at most one per ordinal.
class CompositeChoice {
 public:
  CompositeChoice() = default;
  // Throws std::invalid_argument if two choices disagree on an ordinal.
  explicit CompositeChoice(const std::vector<AtomicChoice>& choices);

  // Returns false (and leaves the choice unchanged) on a conflicting choice.
  bool Add(AtomicChoice c);
  bool Compatible(const CompositeChoice& other) const;

  const std::map<std::size_t, bool>& choices() const { return choices_; }
  std::size_t size() const { return choices_.size(); }

 private:
  std::map<std::size_t, bool> choices_;
};

// Product of p_i over included and (1 - p_i) over excluded axioms.
// Throws std::out_of_range on an ordinal the KB does not have.
double ChoiceProbability(const CompositeChoice& c, const KnowledgeBase& kb);

// A total selection: bit i says whether probabilistic axiom i is in the world.
struct World {
  std::vector<bool> selection;

  // Certain axioms plus the selected probabilistic ones.
  AxiomSet Axioms(const KnowledgeBase& kb) const;
  CompositeChoice AsChoice() const;
};

struct WeightedWorld {
  World world;
  double probability;
};

inline constexpr std::size_t kDefaultWorldLimit = 20;

// All 2^m worlds in binary-counter order (ordinal 0 is the least significant
// bit). Throws std::length_error if m exceeds `limit`.
std::vector<WeightedWorld> EnumerateWorlds(const KnowledgeBase& kb,
                                           std::size_t limit = kDefaultWorldLimit);
void ForEachWorld(const KnowledgeBase& kb, std::size_t limit,
                  const std::function<void(const World&, double)>& visit);

// Sum of P(w) over the worlds entailing q.
double ProbabilityBruteForce(const KnowledgeBase& kb, const Query& q, const Limits& limits = {},
                             std::size_t world_limit = kDefaultWorldLimit);

enum class Engine { kBdd, kBruteForce };

std::string_view ToString(Engine e);
Engine ParseEngine(std::string_view s);

struct QueryConfig {
  Method method = Method::kGlassBox;
  Engine engine = Engine::kBdd;
  Limits limits;
  std::size_t world_limit = kDefaultWorldLimit;
};

struct QueryResult {
  double probability = 0.0;
  CoveringSet covering;  // empty under the brute-force engine
  MonotoneFormula formula = MonotoneFormula::False();
  std::size_t bdd_nodes = 0;
  std::chrono::duration<double> elapsed{};
  // The diagram the probability was read from (null under brute force).
  std::shared_ptr<const BddManager> bdd;
  BddRef root;
};

// Justifications -> pinpointing formula -> BDD -> probability, or the
// world-enumeration oracle when config.engine is kBruteForce.
QueryResult ProbabilityQuery(const KnowledgeBase& kb, const Query& q, const QueryConfig& config);

}  // namespace disponte

#endif  // DISPONTE_SEMANTICS_H_
