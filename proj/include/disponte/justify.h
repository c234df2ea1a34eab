#ifndef DISPONTE_JUSTIFY_H_
#define DISPONTE_JUSTIFY_H_

#include <string_view>
#include <vector>

#include "disponte/kb.h"
#include "disponte/limits.h"
#include "disponte/tableau.h"

namespace disponte {

enum class Method { kGlassBox, kBlackBox };

std::string_view ToString(Method m);
// Accepts "glassbox" / "blackbox"; throws std::invalid_argument otherwise.
Method ParseMethod(std::string_view s);

// A subset-minimal set of axiom indices entailing the query.
using Justification = AxiomSet;

struct CoveringSet {
  // Sorted lexicographically by index sequence.
  std::vector<Justification> justifications;
  SearchStats stats;
};

class JustificationFinder {
 public:
  JustificationFinder(const KnowledgeBase& kb, Query q, Method method, Limits limits = {});

  // Single-pass deletion in ascending index order. Throws NotEntailedError if
  // the candidate does not entail the query.
  Justification Minimize(const AxiomSet& candidate);

  // One justification drawn from `available`. Glass-box minimizes the tableau
  // trace; black-box grows a working set by signature-connected waves until
  // it entails the query and then minimizes it. Throws NotEntailedError.
  Justification Single(const AxiomSet& available);
  Justification Single() { return Single(kb_->all_indices()); }

  // Every justification, via Reiter's hitting set tree with path-repetition
  // pruning, closed-path pruning and reuse of justifications disjoint from
  // the current path. Empty when the query is not entailed.
  CoveringSet All();

  const Tableau& tableau() const { return tableau_; }

 private:
  Justification Expand(const AxiomSet& available);
  void CheckDeadline() const;

  const KnowledgeBase* kb_;
  Query query_;
  Method method_;
  Limits limits_;
  Tableau tableau_;
  SearchStats stats_;
};

Justification Minimize(const KnowledgeBase& kb, const Query& q, const AxiomSet& candidate,
                       const Limits& limits = {});
Justification SingleJustification(const KnowledgeBase& kb, const Query& q, Method method,
                                  const Limits& limits = {});
CoveringSet AllJustifications(const KnowledgeBase& kb, const Query& q, Method method,
                              const Limits& limits = {});

}  // namespace disponte

#endif  // DISPONTE_JUSTIFY_H_
