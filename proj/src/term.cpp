#include "scop/term.hpp"

#include <ostream>

#include "scop/errors.hpp"

namespace scop::lattice {

Term Term::bottom() {
  static Term t = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::bottom;
    return Term(n);
  }();
  return t;
}

Term Term::top() {
  static Term t = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::top;
    return Term(n);
  }();
  return t;
}

Term Term::generator(const std::string& name) { return literal(name, false); }

Term Term::literal(const std::string& name, bool negated) {
  if (name.empty()) throw InputError("generator name must be non-empty");
  if (name.back() == '\'')
    throw InputError("generator name must not end with ': " + name);
  auto n = std::make_shared<Node>();
  n->kind = Kind::literal;
  n->name = name;
  n->negated = negated;
  return Term(n);
}

Term Term::parse_literal(const std::string& text) {
  if (text.empty()) throw InputError("empty literal");
  if (text.back() == '\'')
    return literal(text.substr(0, text.size() - 1), true);
  return literal(text, false);
}

Term Term::complement_of(const Term& t) {
  switch (t.kind()) {
    case Kind::bottom:
      return top();
    case Kind::top:
      return bottom();
    case Kind::literal:
      return literal(t.generator_name(), !t.negated());
    case Kind::meet:
      return join_of(complement_of(t.left()), complement_of(t.right()));
    case Kind::join:
      return meet_of(complement_of(t.left()), complement_of(t.right()));
  }
  throw Error("unreachable term kind");
}

Term Term::meet_of(const Term& a, const Term& b) {
  if (a == b) return a;
  if (a == complement_of(b)) return bottom();
  if (a.is_bottom() || b.is_bottom()) return bottom();
  if (a.is_top()) return b;
  if (b.is_top()) return a;
  const Term& lo = a < b ? a : b;
  const Term& hi = a < b ? b : a;
  auto n = std::make_shared<Node>();
  n->kind = Kind::meet;
  n->left = lo.node_;
  n->right = hi.node_;
  return Term(n);
}

Term Term::join_of(const Term& a, const Term& b) {
  if (a == b) return a;
  if (a == complement_of(b)) return top();
  if (a.is_top() || b.is_top()) return top();
  if (a.is_bottom()) return b;
  if (b.is_bottom()) return a;
  const Term& lo = a < b ? a : b;
  const Term& hi = a < b ? b : a;
  auto n = std::make_shared<Node>();
  n->kind = Kind::join;
  n->left = lo.node_;
  n->right = hi.node_;
  return Term(n);
}

int Term::compare(const Term& other) const {
  return compare_nodes(*node_, *other.node_);
}

int Term::compare_nodes(const Node& a, const Node& b) {
  auto rank = [](Kind k) {
    switch (k) {
      case Kind::bottom: return 0;
      case Kind::top: return 1;
      case Kind::literal: return 2;
      case Kind::meet: return 3;
      case Kind::join: return 4;
    }
    return 5;
  };
  if (rank(a.kind) != rank(b.kind)) return rank(a.kind) < rank(b.kind) ? -1 : 1;
  switch (a.kind) {
    case Kind::bottom:
    case Kind::top:
      return 0;
    case Kind::literal: {
      int c = a.name.compare(b.name);
      if (c != 0) return c < 0 ? -1 : 1;
      if (a.negated != b.negated) return a.negated ? 1 : -1;
      return 0;
    }
    case Kind::meet:
    case Kind::join: {
      int c = compare_nodes(*a.left, *b.left);
      if (c != 0) return c;
      return compare_nodes(*a.right, *b.right);
    }
  }
  return 0;
}

std::string Term::str() const {
  auto operand = [](const Term& t) {
    std::string s = t.str();
    if (!t.is_literal() && !t.is_bottom() && !t.is_top()) return "(" + s + ")";
    return s;
  };
  switch (kind()) {
    case Kind::bottom:
      return "0";
    case Kind::top:
      return "1";
    case Kind::literal:
      return negated() ? generator_name() + "'" : generator_name();
    case Kind::meet:
      return operand(left()) + " ^ " + operand(right());
    case Kind::join:
      return operand(left()) + " v " + operand(right());
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  return os << t.str();
}

}  // namespace scop::lattice
