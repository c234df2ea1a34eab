#ifndef DISPONTE_BDD_H_
#define DISPONTE_BDD_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "disponte/pinpoint.h"

namespace disponte {

// Handle to a node of one BddManager. Refs 0 and 1 are the terminals.
struct BddRef {
  std::uint32_t id = 0;
  friend bool operator==(BddRef, BddRef) = default;
  friend auto operator<=>(BddRef, BddRef) = default;
};

struct BddRefHash {
  std::size_t operator()(BddRef r) const { return std::hash<std::uint32_t>{}(r.id); }
};

// Reduced ordered BDDs with a unique table. The level of a variable is its
// ordinal; terminals sit at level num_vars().
class BddManager {
 public:
  explicit BddManager(std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }

  BddRef Zero() const { return BddRef{0}; }
  BddRef One() const { return BddRef{1}; }
  // Throws std::out_of_range unless ordinal < num_vars().
  BddRef Var(std::size_t ordinal);

  BddRef And(BddRef a, BddRef b);
  BddRef Or(BddRef a, BddRef b);
  BddRef Not(BddRef a);
  BddRef Build(const MonotoneFormula& f);

  bool Equivalent(BddRef a, BddRef b) const { return a == b; }

  bool IsTerminal(BddRef r) const { return r.id <= 1; }
  std::size_t Level(BddRef r) const { return nodes_[r.id].level; }
  BddRef Low(BddRef r) const { return BddRef{nodes_[r.id].low}; }
  BddRef High(BddRef r) const { return BddRef{nodes_[r.id].high}; }

  // Internal nodes reachable from r.
  std::size_t NodeCount(BddRef r) const;
  // Nodes allocated in the unique table, terminals excluded.
  std::size_t TableSize() const { return nodes_.size() - 2; }

  bool Evaluate(BddRef r, const std::vector<bool>& assignment) const;

  // P(n) = p * P(high) + (1 - p) * P(low) with P(1) = 1, P(0) = 0. `probs` is
  // indexed by ordinal; throws std::invalid_argument if a reachable level has
  // no probability. When `memo` is given it receives the value of every
  // reachable node.
  double Probability(BddRef r, std::span<const double> probs,
                     std::unordered_map<BddRef, double, BddRefHash>* memo = nullptr) const;

  // Every root-to-1 path as (ordinal, branch) decisions, high branch first.
  std::vector<std::vector<std::pair<std::size_t, bool>>> Paths(BddRef r) const;

  // Graphviz rendering; 0-edges dashed.
  void WriteDot(std::ostream& os, BddRef r) const;

 private:
  struct Node {
    std::uint32_t level;
    std::uint32_t low;
    std::uint32_t high;
  };
  enum class Op : std::uint8_t { kAnd, kOr, kNot };

  BddRef Make(std::uint32_t level, BddRef low, BddRef high);
  BddRef Apply(Op op, BddRef a, BddRef b);

  std::size_t num_vars_;
  std::vector<Node> nodes_;
  // One unique table per level, keyed on (low, high).
  std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> unique_;
  // Apply cache keyed on (op, min ref, max ref).
  std::unordered_map<std::uint64_t, std::uint32_t> cache_;
};

}  // namespace disponte

#endif  // DISPONTE_BDD_H_
