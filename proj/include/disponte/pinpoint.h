#ifndef DISPONTE_PINPOINT_H_
#define DISPONTE_PINPOINT_H_

#include <cstddef>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "disponte/justify.h"
#include "disponte/kb.h"

namespace disponte {

// Negation-free Boolean formula over probabilistic-axiom ordinals (0-based;
// rendered 1-based as x1, x2, ...).
class MonotoneFormula {
 public:
  enum class Kind { kVar, kAnd, kOr, kTrue, kFalse };

  static MonotoneFormula Var(std::size_t ordinal);
  static MonotoneFormula And(std::vector<MonotoneFormula> operands);
  static MonotoneFormula Or(std::vector<MonotoneFormula> operands);
  static MonotoneFormula True();
  static MonotoneFormula False();

  Kind kind() const { return kind_; }
  std::size_t ordinal() const { return ordinal_; }
  const std::vector<MonotoneFormula>& operands() const { return operands_; }

  friend bool operator==(const MonotoneFormula&, const MonotoneFormula&) = default;

 private:
  MonotoneFormula(Kind kind, std::size_t ordinal, std::vector<MonotoneFormula> operands)
      : kind_(kind), ordinal_(ordinal), operands_(std::move(operands)) {}

  Kind kind_;
  std::size_t ordinal_;
  std::vector<MonotoneFormula> operands_;
};

// The ordinals set to true.
using Valuation = std::set<std::size_t>;

// Or over justifications of And over each justification's probabilistic
// axioms; certain axioms are dropped.
MonotoneFormula FormulaFromJustifications(const CoveringSet& cs, const KnowledgeBase& kb);

bool Satisfies(const MonotoneFormula& f, const Valuation& v);

// Highest ordinal mentioned plus one (0 for constant formulas).
std::size_t VariableBound(const MonotoneFormula& f);

// "(x1 & x2) | (x1 & x3)", "true", "false".
std::string ToText(const MonotoneFormula& f);
std::ostream& operator<<(std::ostream& os, const MonotoneFormula& f);

}  // namespace disponte

#endif  // DISPONTE_PINPOINT_H_
