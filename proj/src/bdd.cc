#include "disponte/bdd.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace disponte {

BddManager::BddManager(std::size_t num_vars) : num_vars_(num_vars), unique_(num_vars) {
  const auto terminal = static_cast<std::uint32_t>(num_vars);
  nodes_.push_back({terminal, 0, 0});
  nodes_.push_back({terminal, 1, 1});
}

BddRef BddManager::Make(std::uint32_t level, BddRef low, BddRef high) {
  if (low == high) return low;
  const std::uint64_t key = (std::uint64_t{low.id} << 32) | high.id;
  auto [it, inserted] =
      unique_[level].try_emplace(key, static_cast<std::uint32_t>(nodes_.size()));
  if (inserted) nodes_.push_back({level, low.id, high.id});
  return BddRef{it->second};
}

BddRef BddManager::Var(std::size_t ordinal) {
  if (ordinal >= num_vars_) {
    throw std::out_of_range("variable " + std::to_string(ordinal) + " outside manager of " +
                            std::to_string(num_vars_) + " variables");
  }
  return Make(static_cast<std::uint32_t>(ordinal), Zero(), One());
}

BddRef BddManager::Apply(Op op, BddRef a, BddRef b) {
  switch (op) {
    case Op::kAnd:
      if (a == Zero() || b == Zero()) return Zero();
      if (a == One()) return b;
      if (b == One() || a == b) return a;
      break;
    case Op::kOr:
      if (a == One() || b == One()) return One();
      if (a == Zero()) return b;
      if (b == Zero() || a == b) return a;
      break;
    case Op::kNot:
      if (a == Zero()) return One();
      if (a == One()) return Zero();
      break;
  }
  if (op != Op::kNot && b < a) std::swap(a, b);
  // Refs fit in 31 bits long before memory runs out; two bits hold the op.
  const std::uint64_t key = (std::uint64_t{static_cast<std::uint8_t>(op)} << 62) |
                            (std::uint64_t{a.id} << 31) | b.id;
  if (auto it = cache_.find(key); it != cache_.end()) return BddRef{it->second};

  const std::uint32_t la = nodes_[a.id].level;
  const std::uint32_t lb = op == Op::kNot ? la : nodes_[b.id].level;
  const std::uint32_t level = std::min(la, lb);
  const BddRef a_low = la == level ? Low(a) : a;
  const BddRef a_high = la == level ? High(a) : a;
  const BddRef b_low = lb == level ? Low(b) : b;
  const BddRef b_high = lb == level ? High(b) : b;

  BddRef result;
  if (op == Op::kNot) {
    const BddRef low = Apply(op, a_low, a_low);
    const BddRef high = Apply(op, a_high, a_high);
    result = Make(level, low, high);
  } else {
    const BddRef low = Apply(op, a_low, b_low);
    const BddRef high = Apply(op, a_high, b_high);
    result = Make(level, low, high);
  }
  cache_.emplace(key, result.id);
  return result;
}

BddRef BddManager::And(BddRef a, BddRef b) { return Apply(Op::kAnd, a, b); }
BddRef BddManager::Or(BddRef a, BddRef b) { return Apply(Op::kOr, a, b); }
BddRef BddManager::Not(BddRef a) { return Apply(Op::kNot, a, a); }

BddRef BddManager::Build(const MonotoneFormula& f) {
  using Kind = MonotoneFormula::Kind;
  switch (f.kind()) {
    case Kind::kVar:
      return Var(f.ordinal());
    case Kind::kTrue:
      return One();
    case Kind::kFalse:
      return Zero();
    case Kind::kAnd: {
      BddRef acc = One();
      for (const MonotoneFormula& g : f.operands()) acc = And(acc, Build(g));
      return acc;
    }
    case Kind::kOr: {
      BddRef acc = Zero();
      for (const MonotoneFormula& g : f.operands()) acc = Or(acc, Build(g));
      return acc;
    }
  }
  return Zero();
}

std::size_t BddManager::NodeCount(BddRef r) const {
  std::vector<bool> visited(nodes_.size(), false);
  std::vector<std::uint32_t> stack{r.id};
  std::size_t count = 0;
  while (!stack.empty()) {
    const std::uint32_t id = stack.back();
    stack.pop_back();
    if (id <= 1 || visited[id]) continue;
    visited[id] = true;
    ++count;
    stack.push_back(nodes_[id].low);
    stack.push_back(nodes_[id].high);
  }
  return count;
}

bool BddManager::Evaluate(BddRef r, const std::vector<bool>& assignment) const {
  while (!IsTerminal(r)) {
    const std::size_t level = Level(r);
    r = level < assignment.size() && assignment[level] ? High(r) : Low(r);
  }
  return r == One();
}

double BddManager::Probability(BddRef r, std::span<const double> probs,
                               std::unordered_map<BddRef, double, BddRefHash>* memo) const {
  std::unordered_map<BddRef, double, BddRefHash> local;
  auto& values = memo ? *memo : local;
  values[Zero()] = 0.0;
  values[One()] = 1.0;
  // Post-order without recursion.
  std::vector<std::pair<BddRef, bool>> stack{{r, false}};
  while (!stack.empty()) {
    auto [node, expanded] = stack.back();
    stack.pop_back();
    if (values.count(node)) continue;
    if (!expanded) {
      stack.push_back({node, true});
      stack.push_back({High(node), false});
      stack.push_back({Low(node), false});
      continue;
    }
    const std::size_t level = Level(node);
    if (level >= probs.size()) {
      throw std::invalid_argument("no probability for variable " + std::to_string(level));
    }
    const double p = probs[level];
    values[node] = p * values.at(High(node)) + (1.0 - p) * values.at(Low(node));
  }
  return values.at(r);
}

std::vector<std::vector<std::pair<std::size_t, bool>>> BddManager::Paths(BddRef r) const {
  std::vector<std::vector<std::pair<std::size_t, bool>>> out;
  std::vector<std::pair<std::size_t, bool>> prefix;
  auto walk = [&](auto&& self, BddRef n) -> void {
    if (n == Zero()) return;
    if (n == One()) {
      out.push_back(prefix);
      return;
    }
    prefix.push_back({Level(n), true});
    self(self, High(n));
    prefix.back().second = false;
    self(self, Low(n));
    prefix.pop_back();
  };
  walk(walk, r);
  return out;
}

void BddManager::WriteDot(std::ostream& os, BddRef r) const {
  os << "digraph bdd {\n";
  os << "  t0 [shape=box,label=\"0\"];\n";
  os << "  t1 [shape=box,label=\"1\"];\n";
  auto name = [](BddRef n) {
    return n.id <= 1 ? "t" + std::to_string(n.id) : "n" + std::to_string(n.id);
  };
  std::vector<bool> visited(nodes_.size(), false);
  std::vector<BddRef> stack{r};
  while (!stack.empty()) {
    const BddRef n = stack.back();
    stack.pop_back();
    if (IsTerminal(n) || visited[n.id]) continue;
    visited[n.id] = true;
    os << "  " << name(n) << " [label=\"x" << Level(n) + 1 << "\"];\n";
    os << "  " << name(n) << " -> " << name(High(n)) << ";\n";
    os << "  " << name(n) << " -> " << name(Low(n)) << " [style=dashed];\n";
    stack.push_back(High(n));
    stack.push_back(Low(n));
  }
  os << "}\n";
}

}  // namespace disponte
