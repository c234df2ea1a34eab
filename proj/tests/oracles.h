// Reference computations for tests. Each works from first principles and
// shares no code path with the library routine it is used to check, except
// where the check is defined in terms of the entailment decision itself.
#ifndef DISPONTE_TESTS_ORACLES_H_
#define DISPONTE_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "disponte/kb.h"
#include "disponte/pinpoint.h"
#include "disponte/tableau.h"

namespace disponte::testing {

// Truth value of a quantifier-free concept under an assignment of the
// concept names.
inline bool EvalPropositional(const Concept& c, const std::map<std::string, bool>& v) {
  switch (c.kind()) {
    case ConceptKind::kAtomic:
      return v.at(c.name());
    case ConceptKind::kTop:
      return true;
    case ConceptKind::kBottom:
      return false;
    case ConceptKind::kNot:
      return !EvalPropositional(c.operand(), v);
    case ConceptKind::kAnd:
      return EvalPropositional(c.left(), v) && EvalPropositional(c.right(), v);
    case ConceptKind::kOr:
      return EvalPropositional(c.left(), v) || EvalPropositional(c.right(), v);
    default:
      throw std::logic_error("quantifier in propositional oracle");
  }
}

// Consistency of a KB made of quantifier-free GCIs and concept assertions.
// Without roles every domain element is an independent truth assignment:
// each named individual needs an assignment satisfying its assertions and
// every GCI, and the domain needs at least one element satisfying the GCIs.
inline bool PropositionalConsistent(const std::vector<Axiom>& axioms,
                                    const std::vector<std::string>& names) {
  std::vector<std::pair<Concept, Concept>> gcis;
  std::map<std::string, std::vector<Concept>> assertions;
  for (const Axiom& a : axioms) {
    if (const auto* s = std::get_if<SubClassOf>(&a)) gcis.push_back({s->sub, s->sup});
    if (const auto* c = std::get_if<ConceptAssertion>(&a)) {
      assertions[c->individual].push_back(c->expr);
    }
  }
  auto satisfiable = [&](const std::vector<Concept>& required) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << names.size()); ++bits) {
      std::map<std::string, bool> v;
      for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = (bits >> i) & 1u;
      bool ok = true;
      for (const auto& [sub, sup] : gcis) {
        if (EvalPropositional(sub, v) && !EvalPropositional(sup, v)) ok = false;
      }
      for (const Concept& c : required) {
        if (!EvalPropositional(c, v)) ok = false;
      }
      if (ok) return true;
    }
    return false;
  };
  if (!satisfiable({})) return false;
  for (const auto& [ind, required] : assertions) {
    if (!satisfiable(required)) return false;
  }
  return true;
}

// Every subset-minimal entailing subset, by enumerating the powerset.
inline std::vector<AxiomSet> MinimalEntailingSubsets(const KnowledgeBase& kb, const Query& q) {
  const Tableau tableau(kb);
  const std::size_t n = kb.size();
  std::vector<bool> entails(std::size_t{1} << n, false);
  for (std::uint64_t bits = 0; bits < entails.size(); ++bits) {
    AxiomSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if ((bits >> i) & 1u) s.insert(i);
    }
    entails[bits] = tableau.Entails(s, q);
  }
  std::vector<AxiomSet> out;
  for (std::uint64_t bits = 0; bits < entails.size(); ++bits) {
    if (!entails[bits]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i) {
      if (((bits >> i) & 1u) && entails[bits & ~(std::uint64_t{1} << i)]) minimal = false;
    }
    if (!minimal) continue;
    AxiomSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if ((bits >> i) & 1u) s.insert(i);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const AxiomSet& a, const AxiomSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

inline Valuation ValuationOf(std::uint64_t bits, std::size_t vars) {
  Valuation v;
  for (std::size_t i = 0; i < vars; ++i) {
    if ((bits >> i) & 1u) v.insert(i);
  }
  return v;
}

// Sum over all valuations of weight * [satisfies].
inline double EnumeratedProbability(const MonotoneFormula& f, const std::vector<double>& p) {
  double total = 0.0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << p.size()); ++bits) {
    double w = 1.0;
    for (std::size_t i = 0; i < p.size(); ++i) w *= ((bits >> i) & 1u) ? p[i] : 1.0 - p[i];
    if (Satisfies(f, ValuationOf(bits, p.size()))) total += w;
  }
  return total;
}

// Random negation-free formula over ordinals [0, vars).
inline MonotoneFormula RandomMonotoneFormula(std::mt19937_64& rng, std::size_t vars, int depth) {
  std::uniform_int_distribution<int> pct(0, 99);
  std::uniform_int_distribution<std::size_t> var(0, vars - 1);
  if (depth <= 0 || pct(rng) < 30) return MonotoneFormula::Var(var(rng));
  std::vector<MonotoneFormula> ops;
  const int width = 2 + pct(rng) % 2;
  for (int i = 0; i < width; ++i) ops.push_back(RandomMonotoneFormula(rng, vars, depth - 1));
  return pct(rng) < 50 ? MonotoneFormula::And(std::move(ops)) : MonotoneFormula::Or(std::move(ops));
}

}  // namespace disponte::testing

#endif  // DISPONTE_TESTS_ORACLES_H_
