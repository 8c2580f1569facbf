#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scop/errors.hpp"
#include "scop/term.hpp"

namespace scop::lattice {

// Thrown when a pair of elements has no unique greatest lower / least upper
// bound inside the element set. Carries the frontier of candidates (the
// maximal lower bounds or minimal upper bounds).
class NoUniqueBoundError : public Error {
 public:
  enum class Which { meet, join };
  NoUniqueBoundError(Which which, Term x, Term y, std::vector<Term> candidates);

  Which which;
  Term x, y;
  std::vector<Term> candidates;
};

// A finite poset of canonical terms, closed under orthocomplementation.
// The order relation is fixed at construction; all queries are const.
class OrthoPoset {
 public:
  // Builds a poset from explicit elements. Canonical complements of all
  // elements plus the bounds 0 and 1 are added automatically. The order
  // is the reflexive-transitive closure of
  //   - 0 <= x <= 1,
  //   - meet(x, y) <= x, y and x, y <= join(x, y) for operands that are
  //     themselves elements,
  //   - every declared pair together with its antitone image
  //     (x <= y gives y' <= x').
  // Antisymmetry is not enforced here; verify_axioms reports violations.
  static OrthoPoset from_elements(
      std::vector<Term> elements,
      const std::vector<std::pair<Term, Term>>& declared_leq = {},
      std::vector<std::pair<Term, Term>> zero_meets = {});

  const std::vector<Term>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<std::pair<Term, Term>>& zero_meets() const {
    return zero_meets_;
  }

  bool contains(const Term& t) const;
  std::size_t index_of(const Term& t) const;  // IdentifierError when absent
  const Term& element(std::size_t i) const { return elements_[i]; }

  bool leq(const Term& x, const Term& y) const;
  bool leq_by_index(std::size_t i, std::size_t j) const { return leq_[i][j]; }

  // Greatest lower / least upper bound within the element set.
  // Throws NoUniqueBoundError when the bound is not unique.
  Term meet(const Term& x, const Term& y) const;
  Term join(const Term& x, const Term& y) const;

  // Frontier scans backing meet()/join(); exposed for verification.
  std::vector<std::size_t> maximal_lower_bounds(std::size_t i,
                                                std::size_t j) const;
  std::vector<std::size_t> minimal_upper_bounds(std::size_t i,
                                                std::size_t j) const;

  // The canonical complement, checked for membership.
  Term orthocomplement(const Term& x) const;
  std::size_t complement_index(std::size_t i) const;

  // Minimal non-zero elements.
  std::vector<Term> atoms() const;

  std::size_t bottom_index() const { return bottom_; }
  std::size_t top_index() const { return top_; }

 private:
  OrthoPoset() = default;
  void finish(const std::vector<std::pair<Term, Term>>& declared_leq);

  std::vector<Term> elements_;
  std::map<Term, std::size_t> index_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::pair<Term, Term>> zero_meets_;
  std::size_t bottom_ = 0, top_ = 0;

  friend OrthoPoset generate_context_lattice(
      const std::vector<std::string>&,
      const std::vector<std::pair<Term, Term>>&);
};

// Builds the depth-two lattice spanned by the generators: bounds, the
// literals g and g', every pairwise meet of distinct literals whose pair is
// neither complementary nor declared zero, and the complements of those
// meets as pairwise joins. Declaring meet(x, y) = 0 removes the meet
// element and identifies the join of the complements with 1.
OrthoPoset generate_context_lattice(
    const std::vector<std::string>& generators,
    const std::vector<std::pair<Term, Term>>& zero_meets = {});

struct AxiomWitness {
  std::string axiom;
  std::vector<Term> terms;
};

// Outcome of the exhaustive axiom scan. The four booleans are consistent
// with the counterexample list: a flag is true iff no counterexample for
// its axiom group was recorded. Pairs lacking a unique bound are report
// content, not failures.
struct VerificationReport {
  bool partial_order_ok = true;
  bool involution_ok = true;
  bool antitone_ok = true;
  bool complement_laws_ok = true;
  std::vector<std::pair<Term, Term>> missing_meets;
  std::vector<std::pair<Term, Term>> missing_joins;
  std::vector<AxiomWitness> counterexamples;

  bool all_ok() const {
    return partial_order_ok && involution_ok && antitone_ok &&
           complement_laws_ok;
  }
};

VerificationReport verify_axioms(const OrthoPoset& p);

}  // namespace scop::lattice
