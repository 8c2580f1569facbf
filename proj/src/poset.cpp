#include "scop/poset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace scop::lattice {

namespace {

std::string describe_candidates(const std::vector<Term>& ts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) os << ", ";
    os << ts[i].str();
  }
  return os.str();
}

std::pair<Term, Term> normalize_pair(const Term& a, const Term& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

NoUniqueBoundError::NoUniqueBoundError(Which w, Term x_, Term y_,
                                       std::vector<Term> cands)
    : Error("no unique " +
            std::string(w == Which::meet ? "greatest lower" : "least upper") +
            " bound for " + x_.str() + " and " + y_.str() +
            "; frontier: {" + describe_candidates(cands) + "}"),
      which(w),
      x(std::move(x_)),
      y(std::move(y_)),
      candidates(std::move(cands)) {}

OrthoPoset OrthoPoset::from_elements(
    std::vector<Term> elements,
    const std::vector<std::pair<Term, Term>>& declared_leq,
    std::vector<std::pair<Term, Term>> zero_meets) {
  OrthoPoset p;
  std::set<Term> all(elements.begin(), elements.end());
  all.insert(Term::bottom());
  all.insert(Term::top());
  for (const Term& t : elements) all.insert(Term::complement_of(t));
  p.elements_.assign(all.begin(), all.end());
  p.zero_meets_ = std::move(zero_meets);
  p.finish(declared_leq);
  return p;
}

void OrthoPoset::finish(const std::vector<std::pair<Term, Term>>& declared_leq) {
  const std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i) index_[elements_[i]] = i;
  bottom_ = index_.at(Term::bottom());
  top_ = index_.at(Term::top());

  leq_.assign(n, std::vector<bool>(n, false));
  auto relate = [&](const Term& lo, const Term& hi) {
    auto li = index_.find(lo);
    auto hi_it = index_.find(hi);
    if (li != index_.end() && hi_it != index_.end())
      leq_[li->second][hi_it->second] = true;
  };

  for (std::size_t i = 0; i < n; ++i) {
    leq_[i][i] = true;
    leq_[bottom_][i] = true;
    leq_[i][top_] = true;
    const Term& t = elements_[i];
    if (t.kind() == Term::Kind::meet) {
      relate(t, t.left());
      relate(t, t.right());
    } else if (t.kind() == Term::Kind::join) {
      relate(t.left(), t);
      relate(t.right(), t);
    }
  }
  for (const auto& [lo, hi] : declared_leq) {
    if (!contains(lo) || !contains(hi))
      throw InputError("declared relation references a term outside the poset: " +
                       lo.str() + " <= " + hi.str());
    relate(lo, hi);
    relate(Term::complement_of(hi), Term::complement_of(lo));
  }

  // Warshall transitive closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k][j]) leq_[i][j] = true;
}

OrthoPoset generate_context_lattice(
    const std::vector<std::string>& generators,
    const std::vector<std::pair<Term, Term>>& zero_meets) {
  std::set<std::string> seen;
  for (const std::string& g : generators) {
    if (g.empty()) throw InputError("generator name must be non-empty");
    if (g.find_first_of("'^, \t") != std::string::npos)
      throw InputError("generator name contains reserved characters: " + g);
    if (!seen.insert(g).second)
      throw InputError("duplicate generator name: " + g);
  }

  std::vector<Term> literals;
  for (const std::string& g : generators) {
    literals.push_back(Term::literal(g, false));
    literals.push_back(Term::literal(g, true));
  }
  std::set<Term> literal_set(literals.begin(), literals.end());

  // Zero pairs: declared ones plus every complementary pair.
  std::set<std::pair<Term, Term>> zero;
  std::vector<std::pair<Term, Term>> kept_zero;
  for (const auto& [a, b] : zero_meets) {
    if (!literal_set.count(a) || !literal_set.count(b))
      throw InputError("zero-meet pair names an unknown literal: " + a.str() +
                       " ^ " + b.str());
    if (a == b)
      throw InputError("zero-meet pair must name two distinct literals: " +
                       a.str());
    auto norm = normalize_pair(a, b);
    if (zero.insert(norm).second) kept_zero.push_back(norm);
  }
  std::set<std::pair<Term, Term>> excluded = zero;
  for (const Term& l : literals)
    excluded.insert(normalize_pair(l, Term::complement_of(l)));

  OrthoPoset p;
  std::set<Term> all;
  all.insert(Term::bottom());
  all.insert(Term::top());
  for (const Term& l : literals) all.insert(l);
  for (std::size_t i = 0; i < literals.size(); ++i)
    for (std::size_t j = i + 1; j < literals.size(); ++j) {
      auto pair = normalize_pair(literals[i], literals[j]);
      if (excluded.count(pair)) continue;
      all.insert(Term::meet_of(pair.first, pair.second));
      all.insert(Term::join_of(Term::complement_of(pair.first),
                               Term::complement_of(pair.second)));
    }
  p.elements_.assign(all.begin(), all.end());
  p.zero_meets_ = kept_zero;
  p.finish({});
  return p;
}

bool OrthoPoset::contains(const Term& t) const { return index_.count(t) > 0; }

std::size_t OrthoPoset::index_of(const Term& t) const {
  auto it = index_.find(t);
  if (it == index_.end())
    throw IdentifierError("term is not an element of the poset: " + t.str());
  return it->second;
}

bool OrthoPoset::leq(const Term& x, const Term& y) const {
  return leq_[index_of(x)][index_of(y)];
}

std::vector<std::size_t> OrthoPoset::maximal_lower_bounds(std::size_t i,
                                                          std::size_t j) const {
  const std::size_t n = size();
  std::vector<std::size_t> lower;
  for (std::size_t k = 0; k < n; ++k)
    if (leq_[k][i] && leq_[k][j]) lower.push_back(k);
  std::vector<std::size_t> maximal;
  for (std::size_t k : lower) {
    bool dominated = false;
    for (std::size_t m : lower)
      if (m != k && leq_[k][m] && !leq_[m][k]) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(k);
  }
  return maximal;
}

std::vector<std::size_t> OrthoPoset::minimal_upper_bounds(std::size_t i,
                                                          std::size_t j) const {
  const std::size_t n = size();
  std::vector<std::size_t> upper;
  for (std::size_t k = 0; k < n; ++k)
    if (leq_[i][k] && leq_[j][k]) upper.push_back(k);
  std::vector<std::size_t> minimal;
  for (std::size_t k : upper) {
    bool dominated = false;
    for (std::size_t m : upper)
      if (m != k && leq_[m][k] && !leq_[k][m]) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(k);
  }
  return minimal;
}

Term OrthoPoset::meet(const Term& x, const Term& y) const {
  auto frontier = maximal_lower_bounds(index_of(x), index_of(y));
  if (frontier.size() == 1) return elements_[frontier[0]];
  std::vector<Term> cands;
  for (std::size_t k : frontier) cands.push_back(elements_[k]);
  throw NoUniqueBoundError(NoUniqueBoundError::Which::meet, x, y,
                           std::move(cands));
}

Term OrthoPoset::join(const Term& x, const Term& y) const {
  auto frontier = minimal_upper_bounds(index_of(x), index_of(y));
  if (frontier.size() == 1) return elements_[frontier[0]];
  std::vector<Term> cands;
  for (std::size_t k : frontier) cands.push_back(elements_[k]);
  throw NoUniqueBoundError(NoUniqueBoundError::Which::join, x, y,
                           std::move(cands));
}

Term OrthoPoset::orthocomplement(const Term& x) const {
  index_of(x);
  Term c = Term::complement_of(x);
  index_of(c);  // complements are elements by construction
  return c;
}

std::size_t OrthoPoset::complement_index(std::size_t i) const {
  return index_of(Term::complement_of(elements_[i]));
}

std::vector<Term> OrthoPoset::atoms() const {
  std::vector<Term> result;
  for (std::size_t c = 0; c < size(); ++c) {
    if (c == bottom_) continue;
    bool atom = true;
    for (std::size_t a = 0; a < size(); ++a) {
      if (a == bottom_ || a == c) continue;
      if (leq_[a][c] && !leq_[c][a]) {
        atom = false;
        break;
      }
    }
    if (atom) result.push_back(elements_[c]);
  }
  return result;
}

VerificationReport verify_axioms(const OrthoPoset& p) {
  VerificationReport report;
  const std::size_t n = p.size();
  auto note = [&](const std::string& axiom, std::vector<Term> ts) {
    report.counterexamples.push_back({axiom, std::move(ts)});
  };

  for (std::size_t i = 0; i < n; ++i)
    if (!p.leq_by_index(i, i)) {
      report.partial_order_ok = false;
      note("reflexivity", {p.element(i)});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.leq_by_index(i, j) && p.leq_by_index(j, i)) {
        report.partial_order_ok = false;
        note("antisymmetry", {p.element(i), p.element(j)});
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.leq_by_index(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (p.leq_by_index(j, k) && !p.leq_by_index(i, k)) {
          report.partial_order_ok = false;
          note("transitivity", {p.element(i), p.element(j), p.element(k)});
        }
    }

  for (std::size_t i = 0; i < n; ++i) {
    Term c = Term::complement_of(p.element(i));
    if (!p.contains(c)) {
      report.involution_ok = false;
      note("involution", {p.element(i)});
      continue;
    }
    if (Term::complement_of(c) != p.element(i)) {
      report.involution_ok = false;
      note("involution", {p.element(i), c});
    }
  }

  auto has_complement = [&](std::size_t i) {
    return p.contains(Term::complement_of(p.element(i)));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.leq_by_index(i, j) && has_complement(i) && has_complement(j)) {
        std::size_t ci = p.complement_index(i);
        std::size_t cj = p.complement_index(j);
        if (!p.leq_by_index(cj, ci)) {
          report.antitone_ok = false;
          note("antitone", {p.element(i), p.element(j)});
        }
      }

  for (std::size_t i = 0; i < n; ++i) {
    if (!has_complement(i)) continue;
    std::size_t ci = p.complement_index(i);
    auto glb = p.maximal_lower_bounds(i, ci);
    if (glb.size() != 1 || glb[0] != p.bottom_index()) {
      report.complement_laws_ok = false;
      note("complement-meet", {p.element(i)});
    }
    auto lub = p.minimal_upper_bounds(i, ci);
    if (lub.size() != 1 || lub[0] != p.top_index()) {
      report.complement_laws_ok = false;
      note("complement-join", {p.element(i)});
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p.maximal_lower_bounds(i, j).size() != 1)
        report.missing_meets.emplace_back(p.element(i), p.element(j));
      if (p.minimal_upper_bounds(i, j).size() != 1)
        report.missing_joins.emplace_back(p.element(i), p.element(j));
    }

  return report;
}

}  // namespace scop::lattice
