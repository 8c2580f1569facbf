#pragma once

#include <memory>
#include <string>
#include <vector>

namespace scop::lattice {

// A symbolic element of an orthocomplemented lattice, kept in canonical
// form:
//   - complements are pushed down to generators (De Morgan), so a
//     complement node never appears above a meet/join and double
//     complements cancel;
//   - complement of bottom is top and dually;
//   - meet/join operands are sorted by the canonical term order, with a
//     complemented literal sorting directly after its base literal;
//   - meet/join of a term with itself collapses to the term, and with its
//     complement collapses to bottom/top.
//
// Terms are immutable values; copying is cheap (shared nodes).
class Term {
 public:
  enum class Kind { bottom, top, literal, meet, join };

  Term() : Term(bottom()) {}

  static Term bottom();
  static Term top();
  static Term generator(const std::string& name);
  static Term literal(const std::string& name, bool negated);
  static Term complement_of(const Term& t);
  static Term meet_of(const Term& a, const Term& b);
  static Term join_of(const Term& a, const Term& b);

  // Parses "e1" or "e1'" (trailing apostrophe marks the complement).
  static Term parse_literal(const std::string& text);

  Kind kind() const { return node_->kind; }
  bool is_bottom() const { return kind() == Kind::bottom; }
  bool is_top() const { return kind() == Kind::top; }
  bool is_literal() const { return kind() == Kind::literal; }

  // literal accessors (valid only when is_literal())
  const std::string& generator_name() const { return node_->name; }
  bool negated() const { return node_->negated; }

  // meet/join accessors
  Term left() const { return Term(node_->left); }
  Term right() const { return Term(node_->right); }

  // Canonical rendering: "0", "1", "e1", "e1'", "e1 ^ e2", "e1 v e2";
  // non-literal operands are parenthesized.
  std::string str() const;

  bool operator==(const Term& other) const { return compare(other) == 0; }
  bool operator!=(const Term& other) const { return compare(other) != 0; }
  bool operator<(const Term& other) const { return compare(other) < 0; }

  // Total order: bottom < top < literals < meets < joins, then
  // lexicographic on components (generator name, then complement flag).
  int compare(const Term& other) const;

 private:
  struct Node {
    Kind kind;
    std::string name;  // literal only
    bool negated = false;
    std::shared_ptr<const Node> left, right;  // meet/join only
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static int compare_nodes(const Node& a, const Node& b);

  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Term& t);

}  // namespace scop::lattice
