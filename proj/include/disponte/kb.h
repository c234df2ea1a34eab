#ifndef DISPONTE_KB_H_
#define DISPONTE_KB_H_

#include <cstddef>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "disponte/concept.h"

namespace disponte {

struct SubClassOf {
  Concept sub;
  Concept sup;
  friend bool operator==(const SubClassOf&, const SubClassOf&) = default;
};

struct ConceptAssertion {
  std::string individual;
  Concept expr;
  friend bool operator==(const ConceptAssertion&, const ConceptAssertion&) = default;
};

struct RoleAssertion {
  std::string subject;
  std::string object;
  std::string role;
  friend bool operator==(const RoleAssertion&, const RoleAssertion&) = default;
};

using Axiom = std::variant<SubClassOf, ConceptAssertion, RoleAssertion>;

// An axiom with an optional DISPONTE annotation "p :: E". Without a
// probability the axiom is certain.
struct AnnotatedAxiom {
  Axiom axiom;
  std::optional<double> probability;
  friend bool operator==(const AnnotatedAxiom&, const AnnotatedAxiom&) = default;
};

// Axiom indices are 0-based positions in the KB listing.
using AxiomIndex = std::size_t;
using AxiomSet = std::set<AxiomIndex>;

class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  // Throws std::invalid_argument on a probability outside [0, 1] or an empty
  // individual/role name.
  explicit KnowledgeBase(std::vector<AnnotatedAxiom> axioms);

  const std::vector<AnnotatedAxiom>& axioms() const { return axioms_; }
  const AnnotatedAxiom& operator[](AxiomIndex i) const { return axioms_[i]; }
  std::size_t size() const { return axioms_.size(); }
  bool empty() const { return axioms_.empty(); }

  const AxiomSet& certain() const { return certain_; }
  // Axiom indices of the probabilistic axioms in listing order. Position in
  // this list is the axiom's probabilistic ordinal (and its BDD level).
  const std::vector<AxiomIndex>& probabilistic() const { return probabilistic_; }
  std::size_t probabilistic_count() const { return probabilistic_.size(); }
  std::optional<std::size_t> ordinal_of(AxiomIndex i) const;
  double probability_of_ordinal(std::size_t ordinal) const;
  std::vector<double> probabilities() const;

  AxiomSet all_indices() const;

  friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
    return a.axioms_ == b.axioms_;
  }

 private:
  std::vector<AnnotatedAxiom> axioms_;
  AxiomSet certain_;
  std::vector<AxiomIndex> probabilistic_;
  std::vector<std::optional<std::size_t>> ordinal_;
};

struct InstanceQuery {
  std::string individual;
  Concept expr;
  friend bool operator==(const InstanceQuery&, const InstanceQuery&) = default;
};

struct SubsumptionQuery {
  Concept sub;
  Concept sup;
  friend bool operator==(const SubsumptionQuery&, const SubsumptionQuery&) = default;
};

using Query = std::variant<InstanceQuery, SubsumptionQuery>;

// Name of the fresh individual used to refute subsumption queries. It is not
// a valid identifier of the KB grammar and so never clashes with KB names.
inline constexpr const char* kFreshIndividual = "$x0";

struct Refutation {
  std::vector<ConceptAssertion> assertions;
  std::vector<std::string> fresh_individuals;
};

// K entails q iff K plus the returned assertions is inconsistent.
Refutation RefutationAssertions(const Query& q);

std::set<std::string> Signature(const Axiom& a);
std::set<std::string> Signature(const Query& q);

std::string ToText(const Axiom& a);
std::string ToText(const AnnotatedAxiom& a);
std::string ToText(const Query& q);

std::ostream& operator<<(std::ostream& os, const Axiom& a);
std::ostream& operator<<(std::ostream& os, const Query& q);

}  // namespace disponte

#endif  // DISPONTE_KB_H_
