#include "disponte/concept.h"

#include <cassert>
#include <sstream>
#include <utility>

namespace disponte {

struct Concept::Node {
  ConceptKind kind;
  std::string name;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
  std::size_t hash;
};

namespace {

std::size_t Mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Concept Concept::Make(ConceptKind kind, std::string name,
                      std::shared_ptr<const Node> l,
                      std::shared_ptr<const Node> r) {
  std::size_t h = Mix(static_cast<std::size_t>(kind) * 0x100000001b3ULL,
                      std::hash<std::string>{}(name));
  if (l) h = Mix(h, l->hash);
  if (r) h = Mix(h, r->hash);
  return Concept(std::make_shared<const Node>(
      Node{kind, std::move(name), std::move(l), std::move(r), h}));
}

Concept Concept::Atomic(std::string name) {
  return Make(ConceptKind::kAtomic, std::move(name), nullptr, nullptr);
}
Concept Concept::Top() {
  static const Concept top = Make(ConceptKind::kTop, "", nullptr, nullptr);
  return top;
}
Concept Concept::Bottom() {
  static const Concept bottom = Make(ConceptKind::kBottom, "", nullptr, nullptr);
  return bottom;
}
Concept Concept::Not(Concept operand) {
  return Make(ConceptKind::kNot, "", std::move(operand.node_), nullptr);
}
Concept Concept::And(Concept left, Concept right) {
  return Make(ConceptKind::kAnd, "", std::move(left.node_), std::move(right.node_));
}
Concept Concept::Or(Concept left, Concept right) {
  return Make(ConceptKind::kOr, "", std::move(left.node_), std::move(right.node_));
}
Concept Concept::Exists(std::string role, Concept filler) {
  return Make(ConceptKind::kExists, std::move(role), std::move(filler.node_), nullptr);
}
Concept Concept::Forall(std::string role, Concept filler) {
  return Make(ConceptKind::kForall, std::move(role), std::move(filler.node_), nullptr);
}

ConceptKind Concept::kind() const { return node_->kind; }
const std::string& Concept::name() const { return node_->name; }

Concept Concept::left() const {
  assert(node_->left);
  return Concept(node_->left);
}

Concept Concept::right() const {
  assert(node_->right);
  return Concept(node_->right);
}

std::size_t Concept::hash() const { return node_->hash; }

bool Concept::is_literal() const {
  return kind() == ConceptKind::kAtomic ||
         (kind() == ConceptKind::kNot && left().kind() == ConceptKind::kAtomic);
}

bool operator==(const Concept& a, const Concept& b) {
  const Concept::Node* x = a.node_.get();
  const Concept::Node* y = b.node_.get();
  if (x == y) return true;
  if (x->hash != y->hash || x->kind != y->kind || x->name != y->name) return false;
  if (x->left && !(Concept(x->left) == Concept(y->left))) return false;
  if (x->right && !(Concept(x->right) == Concept(y->right))) return false;
  return true;
}

Concept Nnf(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::kAtomic:
    case ConceptKind::kTop:
    case ConceptKind::kBottom:
      return c;
    case ConceptKind::kAnd:
      return Concept::And(Nnf(c.left()), Nnf(c.right()));
    case ConceptKind::kOr:
      return Concept::Or(Nnf(c.left()), Nnf(c.right()));
    case ConceptKind::kExists:
      return Concept::Exists(c.name(), Nnf(c.filler()));
    case ConceptKind::kForall:
      return Concept::Forall(c.name(), Nnf(c.filler()));
    case ConceptKind::kNot:
      return Complement(c.operand());
  }
  return c;
}

Concept Complement(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::kAtomic:
      return Concept::Not(c);
    case ConceptKind::kTop:
      return Concept::Bottom();
    case ConceptKind::kBottom:
      return Concept::Top();
    case ConceptKind::kNot:
      return Nnf(c.operand());
    case ConceptKind::kAnd:
      return Concept::Or(Complement(c.left()), Complement(c.right()));
    case ConceptKind::kOr:
      return Concept::And(Complement(c.left()), Complement(c.right()));
    case ConceptKind::kExists:
      return Concept::Forall(c.name(), Complement(c.filler()));
    case ConceptKind::kForall:
      return Concept::Exists(c.name(), Complement(c.filler()));
  }
  return c;
}

void CollectSignature(const Concept& c, std::set<std::string>& out) {
  switch (c.kind()) {
    case ConceptKind::kAtomic:
      out.insert(c.name());
      return;
    case ConceptKind::kTop:
    case ConceptKind::kBottom:
      return;
    case ConceptKind::kNot:
      CollectSignature(c.operand(), out);
      return;
    case ConceptKind::kAnd:
    case ConceptKind::kOr:
      CollectSignature(c.left(), out);
      CollectSignature(c.right(), out);
      return;
    case ConceptKind::kExists:
    case ConceptKind::kForall:
      out.insert(c.name());
      CollectSignature(c.filler(), out);
      return;
  }
}

namespace {

// Binding strength: 0 = or, 1 = and, 2 = unary (not, quantifiers, atoms).
void Render(const Concept& c, int context, std::ostream& os) {
  int own = 2;
  if (c.kind() == ConceptKind::kOr) own = 0;
  if (c.kind() == ConceptKind::kAnd) own = 1;
  const bool parens = own < context;
  if (parens) os << '(';
  switch (c.kind()) {
    case ConceptKind::kAtomic:
      os << c.name();
      break;
    case ConceptKind::kTop:
      os << "Top";
      break;
    case ConceptKind::kBottom:
      os << "Bottom";
      break;
    case ConceptKind::kNot:
      os << "not ";
      Render(c.operand(), 2, os);
      break;
    case ConceptKind::kAnd:
      // Right-nested chains print flat; a nested left side needs parentheses.
      Render(c.left(), 2, os);
      os << " and ";
      Render(c.right(), 1, os);
      break;
    case ConceptKind::kOr:
      Render(c.left(), 1, os);
      os << " or ";
      Render(c.right(), 0, os);
      break;
    case ConceptKind::kExists:
    case ConceptKind::kForall:
      os << (c.kind() == ConceptKind::kExists ? "exists " : "forall ") << c.name() << ". ";
      Render(c.filler(), 2, os);
      break;
  }
  if (parens) os << ')';
}

}  // namespace

std::string ToText(const Concept& c) {
  std::ostringstream os;
  Render(c, 0, os);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Concept& c) {
  Render(c, 0, os);
  return os;
}

}  // namespace disponte
