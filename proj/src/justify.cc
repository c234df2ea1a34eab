#include "disponte/justify.h"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace disponte {

std::string_view ToString(Method m) {
  return m == Method::kGlassBox ? "glassbox" : "blackbox";
}

Method ParseMethod(std::string_view s) {
  if (s == "glassbox") return Method::kGlassBox;
  if (s == "blackbox") return Method::kBlackBox;
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

JustificationFinder::JustificationFinder(const KnowledgeBase& kb, Query q, Method method,
                                         Limits limits)
    : kb_(&kb), query_(std::move(q)), method_(method), limits_(limits), tableau_(kb, limits) {}

void JustificationFinder::CheckDeadline() const {
  if (limits_.deadline.Expired()) {
    SearchStats s = stats_;
    s.tableau_calls = tableau_.calls();
    throw ResourceLimitError("justification search: deadline exceeded", s);
  }
}

Justification JustificationFinder::Minimize(const AxiomSet& candidate) {
  if (!tableau_.Entails(candidate, query_)) {
    throw NotEntailedError("candidate does not entail the query");
  }
  AxiomSet current = candidate;
  for (AxiomIndex i : candidate) {
    CheckDeadline();
    current.erase(i);
    if (!tableau_.Entails(current, query_)) current.insert(i);
  }
  return current;
}

Justification JustificationFinder::Expand(const AxiomSet& available) {
  std::set<std::string> signature = Signature(query_);
  AxiomSet working;
  AxiomSet rest = available;
  while (!rest.empty()) {
    CheckDeadline();
    std::vector<AxiomIndex> wave;
    for (AxiomIndex i : rest) {
      const std::set<std::string> sig = Signature((*kb_)[i].axiom);
      const bool connected = std::any_of(sig.begin(), sig.end(), [&](const std::string& s) {
        return signature.count(s) > 0;
      });
      if (connected) wave.push_back(i);
    }
    // Nothing connected is left: axioms such as "Top <= Bottom" share no
    // names with anything, so fall back to the whole remainder.
    if (wave.empty()) wave.assign(rest.begin(), rest.end());
    for (AxiomIndex i : wave) {
      rest.erase(i);
      working.insert(i);
      const std::set<std::string> sig = Signature((*kb_)[i].axiom);
      signature.insert(sig.begin(), sig.end());
    }
    if (tableau_.Entails(working, query_)) return Minimize(working);
  }
  throw NotEntailedError("query is not entailed");
}

Justification JustificationFinder::Single(const AxiomSet& available) {
  if (method_ == Method::kGlassBox) {
    return Minimize(tableau_.TraceEntailment(available, query_));
  }
  return Expand(available);
}

namespace {

// Fixed-width bitset over axiom indices.
class IndexBits {
 public:
  explicit IndexBits(std::size_t n) : words_((n + 63) / 64, 0) {}

  static IndexBits Of(const AxiomSet& s, std::size_t n) {
    IndexBits b(n);
    for (AxiomIndex i : s) b.Set(i);
    return b;
  }

  void Set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool Test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

  bool Disjoint(const IndexBits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & o.words_[w]) return false;
    }
    return true;
  }

  bool SubsetOf(const IndexBits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~o.words_[w]) return false;
    }
    return true;
  }

  bool operator==(const IndexBits&) const = default;

  std::size_t Hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : words_) h = (h ^ w) * 0x100000001b3ULL;
    return h;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct IndexBitsHash {
  std::size_t operator()(const IndexBits& b) const { return b.Hash(); }
};

}  // namespace

CoveringSet JustificationFinder::All() {
  stats_ = {};
  const std::size_t n = kb_->size();
  const AxiomSet all = kb_->all_indices();
  std::vector<Justification> found;
  std::vector<IndexBits> found_bits;

  auto snapshot = [&] {
    SearchStats s = stats_;
    s.tableau_calls = tableau_.calls();
    s.justifications = found.size();
    return s;
  };

  try {
    if (!tableau_.Entails(all, query_)) return CoveringSet{{}, snapshot()};

    auto add_justification = [&](Justification j) {
      found_bits.push_back(IndexBits::Of(j, n));
      found.push_back(std::move(j));
      return found.size() - 1;
    };

    struct HstNode {
      IndexBits path;
      AxiomSet removed;
      std::size_t label;
    };
    std::deque<HstNode> queue;
    std::unordered_set<IndexBits, IndexBitsHash> seen;
    std::vector<IndexBits> closed;

    stats_.hst_nodes = 1;
    queue.push_back({IndexBits(n), {}, add_justification(Single(all))});
    seen.insert(queue.back().path);

    while (!queue.empty()) {
      HstNode node = std::move(queue.front());
      queue.pop_front();
      const Justification label = found[node.label];
      for (AxiomIndex a : label) {
        CheckDeadline();
        IndexBits path = node.path;
        path.Set(a);
        if (!seen.insert(path).second) continue;
        const bool subsumed = std::any_of(closed.begin(), closed.end(),
                                          [&](const IndexBits& c) { return c.SubsetOf(path); });
        if (subsumed) continue;

        if (++stats_.hst_nodes > limits_.hst_node_budget) {
          throw ResourceLimitError("justification search: HST node budget exceeded",
                                   snapshot());
        }
        AxiomSet removed = node.removed;
        removed.insert(a);

        std::size_t reuse = found.size();
        for (std::size_t j = 0; j < found_bits.size(); ++j) {
          if (found_bits[j].Disjoint(path)) {
            reuse = j;
            break;
          }
        }
        if (reuse < found.size()) {
          queue.push_back({std::move(path), std::move(removed), reuse});
          continue;
        }

        AxiomSet available;
        std::set_difference(all.begin(), all.end(), removed.begin(), removed.end(),
                            std::inserter(available, available.end()));
        if (!tableau_.Entails(available, query_)) {
          closed.push_back(std::move(path));
          continue;
        }
        const std::size_t label_index = add_justification(Single(available));
        queue.push_back({std::move(path), std::move(removed), label_index});
      }
    }
  } catch (const ResourceLimitError& e) {
    if (e.stats().tableau_calls != 0 || e.stats().hst_nodes != 0) throw;
    throw ResourceLimitError(e.what(), snapshot());
  }

  std::sort(found.begin(), found.end(), [](const Justification& a, const Justification& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return CoveringSet{std::move(found), snapshot()};
}

Justification Minimize(const KnowledgeBase& kb, const Query& q, const AxiomSet& candidate,
                       const Limits& limits) {
  return JustificationFinder(kb, q, Method::kBlackBox, limits).Minimize(candidate);
}

Justification SingleJustification(const KnowledgeBase& kb, const Query& q, Method method,
                                  const Limits& limits) {
  return JustificationFinder(kb, q, method, limits).Single();
}

CoveringSet AllJustifications(const KnowledgeBase& kb, const Query& q, Method method,
                              const Limits& limits) {
  return JustificationFinder(kb, q, method, limits).All();
}

}  // namespace disponte
