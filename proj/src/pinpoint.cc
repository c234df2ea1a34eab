#include "disponte/pinpoint.h"

#include <algorithm>
#include <sstream>

namespace disponte {

MonotoneFormula MonotoneFormula::Var(std::size_t ordinal) { return {Kind::kVar, ordinal, {}}; }
MonotoneFormula MonotoneFormula::And(std::vector<MonotoneFormula> operands) {
  return {Kind::kAnd, 0, std::move(operands)};
}
MonotoneFormula MonotoneFormula::Or(std::vector<MonotoneFormula> operands) {
  return {Kind::kOr, 0, std::move(operands)};
}
MonotoneFormula MonotoneFormula::True() { return {Kind::kTrue, 0, {}}; }
MonotoneFormula MonotoneFormula::False() { return {Kind::kFalse, 0, {}}; }

MonotoneFormula FormulaFromJustifications(const CoveringSet& cs, const KnowledgeBase& kb) {
  if (cs.justifications.empty()) return MonotoneFormula::False();
  std::vector<MonotoneFormula> disjuncts;
  for (const Justification& j : cs.justifications) {
    std::vector<MonotoneFormula> vars;
    for (AxiomIndex i : j) {
      if (auto ord = kb.ordinal_of(i)) vars.push_back(MonotoneFormula::Var(*ord));
    }
    if (vars.empty()) {
      disjuncts.push_back(MonotoneFormula::True());
    } else {
      disjuncts.push_back(MonotoneFormula::And(std::move(vars)));
    }
  }
  if (disjuncts.size() == 1 && disjuncts.front().kind() == MonotoneFormula::Kind::kTrue) {
    return MonotoneFormula::True();
  }
  return MonotoneFormula::Or(std::move(disjuncts));
}

bool Satisfies(const MonotoneFormula& f, const Valuation& v) {
  using Kind = MonotoneFormula::Kind;
  switch (f.kind()) {
    case Kind::kVar:
      return v.count(f.ordinal()) > 0;
    case Kind::kTrue:
      return true;
    case Kind::kFalse:
      return false;
    case Kind::kAnd:
      return std::all_of(f.operands().begin(), f.operands().end(),
                         [&](const MonotoneFormula& g) { return Satisfies(g, v); });
    case Kind::kOr:
      return std::any_of(f.operands().begin(), f.operands().end(),
                         [&](const MonotoneFormula& g) { return Satisfies(g, v); });
  }
  return false;
}

std::size_t VariableBound(const MonotoneFormula& f) {
  if (f.kind() == MonotoneFormula::Kind::kVar) return f.ordinal() + 1;
  std::size_t bound = 0;
  for (const MonotoneFormula& g : f.operands()) bound = std::max(bound, VariableBound(g));
  return bound;
}

namespace {

void Render(const MonotoneFormula& f, bool nested, std::ostream& os) {
  using Kind = MonotoneFormula::Kind;
  switch (f.kind()) {
    case Kind::kVar:
      os << 'x' << f.ordinal() + 1;
      return;
    case Kind::kTrue:
      os << "true";
      return;
    case Kind::kFalse:
      os << "false";
      return;
    case Kind::kAnd:
    case Kind::kOr: {
      const auto& ops = f.operands();
      if (ops.empty()) {
        os << (f.kind() == Kind::kAnd ? "true" : "false");
        return;
      }
      if (ops.size() == 1) {
        Render(ops.front(), nested, os);
        return;
      }
      if (nested) os << '(';
      const char* sep = f.kind() == Kind::kAnd ? " & " : " | ";
      for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i) os << sep;
        Render(ops[i], true, os);
      }
      if (nested) os << ')';
      return;
    }
  }
}

}  // namespace

std::string ToText(const MonotoneFormula& f) {
  std::ostringstream os;
  Render(f, false, os);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MonotoneFormula& f) {
  Render(f, false, os);
  return os;
}

}  // namespace disponte
