#ifndef DISPONTE_TABLEAU_H_
#define DISPONTE_TABLEAU_H_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "disponte/kb.h"
#include "disponte/limits.h"

namespace disponte {

// Raised by TraceEntailment when the query does not follow.
class NotEntailedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ALC tableau over a subset of one KB's axioms. The subset is given by axiom
// index so that traces can name the axioms responsible for a clash.
//
// Rules fire in the order clash > and > forall > GCI > or > exists, over nodes
// in creation order. The or-rule tries the left disjunct first and backtracks
// chronologically. Fresh nodes are blocked by an ancestor whose label
// contains theirs.
class Tableau {
 public:
  explicit Tableau(const KnowledgeBase& kb, Limits limits = {});

  bool IsConsistent(const AxiomSet& subset) const;
  bool Entails(const AxiomSet& subset, const Query& q) const;

  // Axioms of `subset` used by the clashes closing every branch of the
  // refutation of q. Entails q but need not be minimal. Throws
  // NotEntailedError if subset does not entail q.
  AxiomSet TraceEntailment(const AxiomSet& subset, const Query& q) const;

  std::uint64_t calls() const { return calls_; }
  const KnowledgeBase& kb() const { return *kb_; }
  const Limits& limits() const { return limits_; }

 private:
  const KnowledgeBase* kb_;
  Limits limits_;
  mutable std::uint64_t calls_ = 0;
};

// Convenience forms over a plain axiom list, all axioms taken as certain.
bool IsConsistent(const std::vector<Axiom>& axioms, const Limits& limits = {});
bool Entails(const std::vector<Axiom>& axioms, const Query& q, const Limits& limits = {});

}  // namespace disponte

#endif  // DISPONTE_TABLEAU_H_
