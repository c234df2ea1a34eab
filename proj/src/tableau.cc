#include "disponte/tableau.h"

#include <algorithm>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

namespace disponte {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Immutable sorted index set shared between label entries; null is empty.
template <class T>
using SetRef = std::shared_ptr<const std::vector<T>>;

template <class T>
SetRef<T> Singleton(T i) {
  return std::make_shared<const std::vector<T>>(1, i);
}

template <class T>
SetRef<T> Union(const SetRef<T>& a, const SetRef<T>& b) {
  if (!a || a == b) return b ? b : a;
  if (!b) return a;
  if (std::includes(a->begin(), a->end(), b->begin(), b->end())) return a;
  if (std::includes(b->begin(), b->end(), a->begin(), a->end())) return b;
  auto out = std::make_shared<std::vector<T>>();
  out->reserve(a->size() + b->size());
  std::set_union(a->begin(), a->end(), b->begin(), b->end(), std::back_inserter(*out));
  return out;
}

template <class T>
bool Contains(const SetRef<T>& s, T v) {
  return s && std::binary_search(s->begin(), s->end(), v);
}

template <class T>
SetRef<T> Without(const SetRef<T>& s, T v) {
  if (!Contains(s, v)) return s;
  auto out = std::make_shared<std::vector<T>>();
  for (T x : *s) {
    if (x != v) out->push_back(x);
  }
  return out;
}

// Axiom indices responsible for a fact.
using TraceRef = SetRef<AxiomIndex>;
// Or-branch points a fact depends on, identified by branching depth.
using DepRef = SetRef<std::uint32_t>;

constexpr std::int32_t kNone = -1;

// NNF concepts interned to dense ids for the duration of one reasoning call.
class ConceptTable {
 public:
  struct Entry {
    ConceptKind kind;
    std::uint32_t name;  // concept name or role id
    std::int32_t a = kNone;
    std::int32_t b = kNone;
    std::int32_t complement = kNone;
  };

  std::int32_t Intern(const Concept& c) {
    Entry e{c.kind(), 0};
    switch (c.kind()) {
      case ConceptKind::kAtomic:
        e.name = NameId(concepts_, c.name());
        break;
      case ConceptKind::kTop:
      case ConceptKind::kBottom:
        break;
      case ConceptKind::kNot:
        e.a = Intern(c.operand());
        break;
      case ConceptKind::kAnd:
      case ConceptKind::kOr:
        e.a = Intern(c.left());
        e.b = Intern(c.right());
        break;
      case ConceptKind::kExists:
      case ConceptKind::kForall:
        e.name = RoleId(c.name());
        e.a = Intern(c.filler());
        break;
    }
    const Key key{static_cast<int>(e.kind), e.name, e.a, e.b};
    auto [it, inserted] = index_.try_emplace(key, static_cast<std::int32_t>(entries_.size()));
    if (inserted) {
      entries_.push_back(e);
      if (e.kind == ConceptKind::kNot) {
        entries_[e.a].complement = it->second;
        entries_.back().complement = e.a;
      }
    }
    return it->second;
  }

  std::uint32_t RoleId(const std::string& role) { return NameId(roles_, role); }

  const Entry& operator[](std::int32_t id) const { return entries_[id]; }
  std::size_t size() const { return entries_.size(); }

 private:
  struct Key {
    int kind;
    std::uint32_t name;
    std::int32_t a, b;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = static_cast<std::size_t>(k.kind);
      h = h * 1000003u ^ k.name;
      h = h * 1000003u ^ static_cast<std::uint32_t>(k.a);
      h = h * 1000003u ^ static_cast<std::uint32_t>(k.b);
      return h;
    }
  };

  static std::uint32_t NameId(std::unordered_map<std::string, std::uint32_t>& m,
                              const std::string& s) {
    return m.try_emplace(s, static_cast<std::uint32_t>(m.size())).first->second;
  }

  std::vector<Entry> entries_;
  std::unordered_map<Key, std::int32_t, KeyHash> index_;
  std::unordered_map<std::string, std::uint32_t> concepts_;
  std::unordered_map<std::string, std::uint32_t> roles_;
};

// Why a fact holds: the axioms it was derived from and the or-branches it
// depends on.
struct Why {
  TraceRef trace;
  DepRef deps;
};

struct Edge {
  std::uint32_t role;
  std::uint32_t target;
  Why why;
};

struct GraphNode {
  std::int32_t parent = kNone;  // kNone for named (and anonymous) roots
  std::vector<std::int32_t> position;  // concept id -> index in label
  std::vector<std::int32_t> label;     // insertion order
  std::vector<Why> whys;               // parallel to label
  std::vector<Edge> out;
  std::size_t and_cursor = 0;
  std::size_t or_cursor = 0;
  bool gcis_added = false;

  bool Has(std::int32_t c) const { return position[c] != kNone; }
  const Why& WhyOf(std::int32_t c) const { return whys[position[c]]; }
};

struct Graph {
  std::vector<GraphNode> nodes;
  bool clash = false;
  Why clash_why;
};

struct Seed {
  std::uint32_t node;
  std::int32_t concept_id;
  TraceRef trace;
};

struct Gci {
  std::int32_t concept_id;
  TraceRef trace;
};

class Run {
 public:
  Run(const KnowledgeBase& kb, const AxiomSet& subset, const Refutation* refutation,
      bool tracing, const Limits& limits)
      : tracing_(tracing), limits_(limits) {
    std::vector<Seed> seeds;
    std::vector<std::pair<std::uint32_t, Edge>> edges;
    for (AxiomIndex i : subset) {
      if (i >= kb.size()) throw std::out_of_range("axiom index out of range");
      TraceRef t = tracing_ ? Singleton(i) : nullptr;
      std::visit(
          Overloaded{
              [&](const SubClassOf& s) {
                gcis_.push_back(
                    {table_.Intern(Nnf(Concept::Or(Concept::Not(s.sub), s.sup))), t});
              },
              [&](const ConceptAssertion& c) {
                seeds.push_back({Individual(c.individual), table_.Intern(Nnf(c.expr)), t});
              },
              [&](const RoleAssertion& r) {
                const std::uint32_t from = Individual(r.subject);
                const std::uint32_t to = Individual(r.object);
                edges.push_back({from, Edge{table_.RoleId(r.role), to, Why{t, nullptr}}});
              },
          },
          kb[i].axiom);
    }
    if (refutation) {
      for (const ConceptAssertion& c : refutation->assertions) {
        seeds.push_back({Individual(c.individual), table_.Intern(Nnf(c.expr)), nullptr});
      }
    }
    // The domain is never empty; a TBox alone still needs one element.
    if (individuals_.empty()) Individual("$anonymous");

    Graph g;
    g.nodes.resize(individuals_.size());
    for (GraphNode& n : g.nodes) n.position.assign(table_.size(), kNone);
    created_ = g.nodes.size();
    for (auto& [from, e] : edges) g.nodes[from].out.push_back(std::move(e));
    for (const Seed& s : seeds) Add(g, s.node, s.concept_id, Why{s.trace, nullptr});
    initial_ = std::move(g);
  }

  // Returns true if a clash-free complete graph exists. Otherwise
  // closed_trace() holds the union of the clash traces of every branch that
  // was explored.
  //
  // Depth-first, left disjunct first. When a branch closes with a clash that
  // does not depend on the innermost open or-branch, the untried alternative
  // of that branch would close the same way and is skipped (backjumping).
  bool Satisfiable() {
    struct Frame {
      Graph right;  // state before the left disjunct was added
      std::uint32_t node;
      std::int32_t disjunct;
      Why why;
      bool left_done = false;
    };
    std::vector<Frame> frames;
    Graph g = std::move(initial_);
    for (;;) {
      CheckDeadline();
      if (g.clash) {
        closed_trace_ = Union(closed_trace_, g.clash_why.trace);
        DepRef deps = g.clash_why.deps;
        bool resumed = false;
        while (!frames.empty()) {
          Frame& f = frames.back();
          const auto id = static_cast<std::uint32_t>(frames.size() - 1);
          if (f.left_done || !Contains(deps, id)) {
            frames.pop_back();
            continue;
          }
          f.left_done = true;
          g = std::move(f.right);
          Add(g, f.node, f.disjunct,
              Why{f.why.trace, Union(f.why.deps, Without(deps, id))});
          resumed = true;
          break;
        }
        if (!resumed) return false;
        continue;
      }
      if (ApplyAnd(g) || ApplyForall(g) || ApplyGcis(g)) continue;
      if (auto branch = FindOr(g)) {
        const auto [node, disjunction] = *branch;
        const ConceptTable::Entry& e = table_[disjunction];
        const Why why = g.nodes[node].WhyOf(disjunction);
        const auto id = static_cast<std::uint32_t>(frames.size());
        frames.push_back(Frame{g, node, e.b, why});
        Add(g, node, e.a, Why{why.trace, Union(why.deps, Singleton(id))});
        continue;
      }
      if (ApplyExists(g)) continue;
      return true;
    }
  }

  AxiomSet closed_trace() const {
    if (!closed_trace_) return {};
    return AxiomSet(closed_trace_->begin(), closed_trace_->end());
  }

 private:
  void CheckDeadline() {
    if ((steps_++ & 0xff) == 0 && limits_.deadline.Expired()) {
      throw ResourceLimitError("tableau: deadline exceeded");
    }
  }

  std::uint32_t Individual(const std::string& name) {
    return individuals_.try_emplace(name, static_cast<std::uint32_t>(individuals_.size()))
        .first->second;
  }

  Why Join(const Why& a, const Why& b) const {
    return Why{tracing_ ? Union(a.trace, b.trace) : nullptr, Union(a.deps, b.deps)};
  }

  void Add(Graph& g, std::uint32_t node, std::int32_t c, Why why) {
    GraphNode& n = g.nodes[node];
    if (n.Has(c)) return;
    n.position[c] = static_cast<std::int32_t>(n.label.size());
    n.label.push_back(c);
    n.whys.push_back(why);
    if (g.clash) return;
    const ConceptTable::Entry& e = table_[c];
    if (e.kind == ConceptKind::kBottom) {
      g.clash = true;
      g.clash_why = std::move(why);
    } else if (e.complement != kNone && n.Has(e.complement)) {
      g.clash = true;
      g.clash_why = Join(why, n.WhyOf(e.complement));
    }
  }

  bool ApplyAnd(Graph& g) {
    for (std::uint32_t x = 0; x < g.nodes.size(); ++x) {
      GraphNode& n = g.nodes[x];
      while (n.and_cursor < n.label.size()) {
        const std::int32_t c = n.label[n.and_cursor];
        const ConceptTable::Entry& e = table_[c];
        if (e.kind == ConceptKind::kAnd && (!n.Has(e.a) || !n.Has(e.b))) {
          const Why why = n.WhyOf(c);
          Add(g, x, e.a, why);
          Add(g, x, e.b, why);
          return true;
        }
        ++n.and_cursor;
      }
    }
    return false;
  }

  bool ApplyForall(Graph& g) {
    for (std::uint32_t x = 0; x < g.nodes.size(); ++x) {
      const GraphNode& n = g.nodes[x];
      if (n.out.empty()) continue;
      for (std::size_t i = 0; i < n.label.size(); ++i) {
        const ConceptTable::Entry& e = table_[n.label[i]];
        if (e.kind != ConceptKind::kForall) continue;
        for (const Edge& edge : n.out) {
          if (edge.role != e.name || g.nodes[edge.target].Has(e.a)) continue;
          Add(g, edge.target, e.a, Join(n.whys[i], edge.why));
          return true;
        }
      }
    }
    return false;
  }

  bool ApplyGcis(Graph& g) {
    for (std::uint32_t x = 0; x < g.nodes.size(); ++x) {
      if (g.nodes[x].gcis_added) continue;
      g.nodes[x].gcis_added = true;
      for (const Gci& gci : gcis_) Add(g, x, gci.concept_id, Why{gci.trace, nullptr});
      if (!gcis_.empty()) return true;
    }
    return false;
  }

  std::optional<std::pair<std::uint32_t, std::int32_t>> FindOr(Graph& g) const {
    for (std::uint32_t x = 0; x < g.nodes.size(); ++x) {
      GraphNode& n = g.nodes[x];
      while (n.or_cursor < n.label.size()) {
        const std::int32_t c = n.label[n.or_cursor];
        const ConceptTable::Entry& e = table_[c];
        if (e.kind == ConceptKind::kOr && !n.Has(e.a) && !n.Has(e.b)) {
          return std::make_pair(x, c);
        }
        ++n.or_cursor;
      }
    }
    return std::nullopt;
  }

  bool LabelSubset(const GraphNode& inner, const GraphNode& outer) const {
    if (inner.label.size() > outer.label.size()) return false;
    for (std::int32_t c : inner.label) {
      if (!outer.Has(c)) return false;
    }
    return true;
  }

  bool Blocked(const Graph& g, std::uint32_t x) const {
    const GraphNode& n = g.nodes[x];
    if (n.parent == kNone) return false;
    if (Blocked(g, static_cast<std::uint32_t>(n.parent))) return true;
    for (std::int32_t a = n.parent; a != kNone; a = g.nodes[a].parent) {
      if (LabelSubset(n, g.nodes[a])) return true;
    }
    return false;
  }

  bool ApplyExists(Graph& g) {
    for (std::uint32_t x = 0; x < g.nodes.size(); ++x) {
      for (std::size_t i = 0; i < g.nodes[x].label.size(); ++i) {
        const std::int32_t c = g.nodes[x].label[i];
        const ConceptTable::Entry& e = table_[c];
        if (e.kind != ConceptKind::kExists) continue;
        bool satisfied = false;
        for (const Edge& edge : g.nodes[x].out) {
          if (edge.role == e.name && g.nodes[edge.target].Has(e.a)) {
            satisfied = true;
            break;
          }
        }
        if (satisfied || Blocked(g, x)) continue;
        if (++created_ > limits_.tableau_node_budget) {
          throw ResourceLimitError("tableau: node budget exceeded");
        }
        const auto y = static_cast<std::uint32_t>(g.nodes.size());
        const Why why = g.nodes[x].whys[i];
        GraphNode fresh;
        fresh.parent = static_cast<std::int32_t>(x);
        fresh.position.assign(table_.size(), kNone);
        g.nodes.push_back(std::move(fresh));
        g.nodes[x].out.push_back(Edge{e.name, y, why});
        Add(g, y, e.a, why);
        return true;
      }
    }
    return false;
  }

  bool tracing_;
  const Limits& limits_;
  ConceptTable table_;
  std::vector<Gci> gcis_;
  std::unordered_map<std::string, std::uint32_t> individuals_;
  Graph initial_;
  TraceRef closed_trace_;
  std::size_t created_ = 0;
  std::uint64_t steps_ = 0;
};

}  // namespace

Tableau::Tableau(const KnowledgeBase& kb, Limits limits) : kb_(&kb), limits_(limits) {}

bool Tableau::IsConsistent(const AxiomSet& subset) const {
  ++calls_;
  return Run(*kb_, subset, nullptr, false, limits_).Satisfiable();
}

bool Tableau::Entails(const AxiomSet& subset, const Query& q) const {
  ++calls_;
  const Refutation r = RefutationAssertions(q);
  return !Run(*kb_, subset, &r, false, limits_).Satisfiable();
}

AxiomSet Tableau::TraceEntailment(const AxiomSet& subset, const Query& q) const {
  ++calls_;
  const Refutation r = RefutationAssertions(q);
  Run run(*kb_, subset, &r, true, limits_);
  if (run.Satisfiable()) throw NotEntailedError("query is not entailed");
  return run.closed_trace();
}

namespace {

KnowledgeBase CertainKb(const std::vector<Axiom>& axioms) {
  std::vector<AnnotatedAxiom> annotated;
  annotated.reserve(axioms.size());
  for (const Axiom& a : axioms) annotated.push_back({a, std::nullopt});
  return KnowledgeBase(std::move(annotated));
}

}  // namespace

bool IsConsistent(const std::vector<Axiom>& axioms, const Limits& limits) {
  const KnowledgeBase kb = CertainKb(axioms);
  return Tableau(kb, limits).IsConsistent(kb.all_indices());
}

bool Entails(const std::vector<Axiom>& axioms, const Query& q, const Limits& limits) {
  const KnowledgeBase kb = CertainKb(axioms);
  return Tableau(kb, limits).Entails(kb.all_indices(), q);
}

}  // namespace disponte
