#ifndef DISPONTE_CONCEPT_H_
#define DISPONTE_CONCEPT_H_

#include <cstddef>
#include <functional>
#include <memory>
#include <ostream>
#include <set>
#include <string>

namespace disponte {

enum class ConceptKind { kAtomic, kTop, kBottom, kNot, kAnd, kOr, kExists, kForall };

// Immutable ALC concept expression. Copies share structure; equality is
// structural.
class Concept {
 public:
  static Concept Atomic(std::string name);
  static Concept Top();
  static Concept Bottom();
  static Concept Not(Concept operand);
  static Concept And(Concept left, Concept right);
  static Concept Or(Concept left, Concept right);
  static Concept Exists(std::string role, Concept filler);
  static Concept Forall(std::string role, Concept filler);

  ConceptKind kind() const;
  // Concept name for kAtomic, role name for kExists/kForall, empty otherwise.
  const std::string& name() const;
  // Operand of kNot, filler of a quantifier, or left side of kAnd/kOr.
  Concept left() const;
  Concept right() const;
  Concept operand() const { return left(); }
  Concept filler() const { return left(); }

  std::size_t hash() const;
  bool is_literal() const;

  friend bool operator==(const Concept& a, const Concept& b);
  friend bool operator!=(const Concept& a, const Concept& b) { return !(a == b); }

 private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Concept Make(ConceptKind kind, std::string name,
                      std::shared_ptr<const Node> l, std::shared_ptr<const Node> r);

  std::shared_ptr<const Node> node_;
};

// Negation normal form: negation only directly above atomic concepts,
// negated Top/Bottom resolved.
Concept Nnf(const Concept& c);

// nnf(not c).
Concept Complement(const Concept& c);

// Concept names and role names occurring in c.
void CollectSignature(const Concept& c, std::set<std::string>& out);

// Rendering in the textual KB grammar, minimally parenthesized.
std::string ToText(const Concept& c);

std::ostream& operator<<(std::ostream& os, const Concept& c);

struct ConceptHash {
  std::size_t operator()(const Concept& c) const { return c.hash(); }
};

}  // namespace disponte

#endif  // DISPONTE_CONCEPT_H_
