#include "disponte/kb.h"

#include <array>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace disponte {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string FormatProbability(double p) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), p,
                                 std::chars_format::fixed);
  if (ec != std::errc()) throw std::runtime_error("cannot format probability");
  return std::string(buf.data(), end);
}

void CheckName(const std::string& name, const char* what) {
  if (name.empty()) throw std::invalid_argument(std::string("empty ") + what + " name");
}

}  // namespace

KnowledgeBase::KnowledgeBase(std::vector<AnnotatedAxiom> axioms)
    : axioms_(std::move(axioms)) {
  ordinal_.resize(axioms_.size());
  for (AxiomIndex i = 0; i < axioms_.size(); ++i) {
    const AnnotatedAxiom& a = axioms_[i];
    std::visit(Overloaded{
                   [](const SubClassOf&) {},
                   [](const ConceptAssertion& c) { CheckName(c.individual, "individual"); },
                   [](const RoleAssertion& r) {
                     CheckName(r.subject, "individual");
                     CheckName(r.object, "individual");
                     CheckName(r.role, "role");
                   },
               },
               a.axiom);
    if (a.probability) {
      const double p = *a.probability;
      if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("probability of axiom " + std::to_string(i) +
                                    " outside [0, 1]");
      }
      ordinal_[i] = probabilistic_.size();
      probabilistic_.push_back(i);
    } else {
      certain_.insert(i);
    }
  }
}

std::optional<std::size_t> KnowledgeBase::ordinal_of(AxiomIndex i) const {
  if (i >= ordinal_.size()) return std::nullopt;
  return ordinal_[i];
}

double KnowledgeBase::probability_of_ordinal(std::size_t ordinal) const {
  return *axioms_.at(probabilistic_.at(ordinal)).probability;
}

std::vector<double> KnowledgeBase::probabilities() const {
  std::vector<double> out;
  out.reserve(probabilistic_.size());
  for (AxiomIndex i : probabilistic_) out.push_back(*axioms_[i].probability);
  return out;
}

AxiomSet KnowledgeBase::all_indices() const {
  AxiomSet out;
  for (AxiomIndex i = 0; i < axioms_.size(); ++i) out.insert(out.end(), i);
  return out;
}

Refutation RefutationAssertions(const Query& q) {
  return std::visit(
      Overloaded{
          [](const InstanceQuery& iq) {
            return Refutation{{ConceptAssertion{iq.individual, Complement(iq.expr)}}, {}};
          },
          [](const SubsumptionQuery& sq) {
            return Refutation{
                {ConceptAssertion{kFreshIndividual,
                                  Nnf(Concept::And(sq.sub, Concept::Not(sq.sup)))}},
                {kFreshIndividual}};
          },
      },
      q);
}

std::set<std::string> Signature(const Axiom& a) {
  std::set<std::string> out;
  std::visit(Overloaded{
                 [&](const SubClassOf& s) {
                   CollectSignature(s.sub, out);
                   CollectSignature(s.sup, out);
                 },
                 [&](const ConceptAssertion& c) {
                   out.insert(c.individual);
                   CollectSignature(c.expr, out);
                 },
                 [&](const RoleAssertion& r) {
                   out.insert(r.subject);
                   out.insert(r.object);
                   out.insert(r.role);
                 },
             },
             a);
  return out;
}

std::set<std::string> Signature(const Query& q) {
  std::set<std::string> out;
  std::visit(Overloaded{
                 [&](const InstanceQuery& iq) {
                   out.insert(iq.individual);
                   CollectSignature(iq.expr, out);
                 },
                 [&](const SubsumptionQuery& sq) {
                   CollectSignature(sq.sub, out);
                   CollectSignature(sq.sup, out);
                 },
             },
             q);
  return out;
}

std::string ToText(const Axiom& a) {
  return std::visit(
      Overloaded{
          [](const SubClassOf& s) { return ToText(s.sub) + " <= " + ToText(s.sup); },
          [](const ConceptAssertion& c) { return c.individual + " : " + ToText(c.expr); },
          [](const RoleAssertion& r) {
            return "(" + r.subject + ", " + r.object + ") : " + r.role;
          },
      },
      a);
}

std::string ToText(const AnnotatedAxiom& a) {
  if (!a.probability) return ToText(a.axiom);
  return FormatProbability(*a.probability) + " :: " + ToText(a.axiom);
}

std::string ToText(const Query& q) {
  return std::visit(
      Overloaded{
          [](const InstanceQuery& iq) { return iq.individual + " : " + ToText(iq.expr); },
          [](const SubsumptionQuery& sq) { return ToText(sq.sub) + " <= " + ToText(sq.sup); },
      },
      q);
}

std::ostream& operator<<(std::ostream& os, const Axiom& a) { return os << ToText(a); }
std::ostream& operator<<(std::ostream& os, const Query& q) { return os << ToText(q); }

}  // namespace disponte
