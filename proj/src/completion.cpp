#include "scop/completion.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace scop::lattice {

namespace {

std::size_t popcount(const CutLattice::Bits& b) {
  std::size_t c = 0;
  for (std::uint64_t w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool subset(const CutLattice::Bits& a, const CutLattice::Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

CutLattice::Bits intersect(const CutLattice::Bits& a,
                           const CutLattice::Bits& b) {
  CutLattice::Bits r(a.size());
  for (std::size_t w = 0; w < a.size(); ++w) r[w] = a[w] & b[w];
  return r;
}

}  // namespace

CutLattice dedekind_macneille(const OrthoPoset& p) {
  CutLattice L;
  const std::size_t n = p.size();
  L.ground_size_ = n;
  L.words_ = (n + 63) / 64;

  L.down_.assign(n, CutLattice::Bits(L.words_, 0));
  L.up_.assign(n, CutLattice::Bits(L.words_, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.leq_by_index(i, j)) {
        L.down_[j][i / 64] |= std::uint64_t(1) << (i % 64);
        L.up_[i][j / 64] |= std::uint64_t(1) << (j % 64);
      }

  CutLattice::Bits full(L.words_, 0);
  for (std::size_t i = 0; i < n; ++i)
    full[i / 64] |= std::uint64_t(1) << (i % 64);

  // Cut lower sets are exactly P plus the intersections of principal
  // ideals; saturate the principal ideals under pairwise intersection.
  std::map<CutLattice::Bits, bool> family;
  std::vector<CutLattice::Bits> work;
  auto add = [&](const CutLattice::Bits& b) {
    if (family.emplace(b, true).second) work.push_back(b);
  };
  add(full);
  for (std::size_t i = 0; i < n; ++i) add(L.down_[i]);
  for (std::size_t w = 0; w < work.size(); ++w) {
    CutLattice::Bits current = work[w];
    for (std::size_t i = 0; i < n; ++i) add(intersect(current, L.down_[i]));
  }

  L.cuts_.reserve(family.size());
  for (const auto& [bits, _] : family) L.cuts_.push_back(bits);
  std::sort(L.cuts_.begin(), L.cuts_.end(),
            [](const CutLattice::Bits& a, const CutLattice::Bits& b) {
              std::size_t pa = popcount(a), pb = popcount(b);
              if (pa != pb) return pa < pb;
              return a < b;
            });

  L.embedding_.resize(n);
  for (std::size_t i = 0; i < n; ++i) L.embedding_[i] = L.index_of(L.down_[i]);
  return L;
}

std::size_t CutLattice::index_of(const Bits& b) const {
  std::size_t pc = popcount(b);
  auto it = std::lower_bound(cuts_.begin(), cuts_.end(), b,
                             [pc](const Bits& x, const Bits& key) {
                               std::size_t px = popcount(x);
                               if (px != pc) return px < pc;
                               return x < key;
                             });
  if (it == cuts_.end() || *it != b)
    throw Error("internal: set is not a cut of the completion");
  return static_cast<std::size_t>(it - cuts_.begin());
}

bool CutLattice::leq(std::size_t a, std::size_t b) const {
  return subset(cuts_[a], cuts_[b]);
}

std::size_t CutLattice::meet(std::size_t a, std::size_t b) const {
  return index_of(intersect(cuts_[a], cuts_[b]));
}

std::size_t CutLattice::join(std::size_t a, std::size_t b) const {
  // upper bounds of the union in the original poset, then their lower set
  Bits unioned(words_, 0);
  for (std::size_t w = 0; w < words_; ++w)
    unioned[w] = cuts_[a][w] | cuts_[b][w];
  Bits upper(words_, ~std::uint64_t(0));
  // trim to ground size
  if (ground_size_ % 64 != 0)
    upper[words_ - 1] = (std::uint64_t(1) << (ground_size_ % 64)) - 1;
  bool any = false;
  for (std::size_t i = 0; i < ground_size_; ++i)
    if (unioned[i / 64] & (std::uint64_t(1) << (i % 64))) {
      any = true;
      for (std::size_t w = 0; w < words_; ++w) upper[w] &= up_[i][w];
    }
  Bits lower(words_, 0);
  bool upper_nonempty = false;
  for (std::size_t w = 0; w < words_; ++w)
    if (upper[w]) upper_nonempty = true;
  if (!any || !upper_nonempty) {
    // empty union joins to the bottom cut; unbounded union joins to top
    if (!any) return bottom();
    for (std::size_t i = 0; i < ground_size_; ++i)
      lower[i / 64] |= std::uint64_t(1) << (i % 64);
    return index_of(lower);
  }
  for (std::size_t w = 0; w < words_; ++w) lower[w] = ~std::uint64_t(0);
  if (ground_size_ % 64 != 0)
    lower[words_ - 1] = (std::uint64_t(1) << (ground_size_ % 64)) - 1;
  for (std::size_t i = 0; i < ground_size_; ++i)
    if (upper[i / 64] & (std::uint64_t(1) << (i % 64)))
      for (std::size_t w = 0; w < words_; ++w) lower[w] &= down_[i][w];
  return index_of(lower);
}

bool CutLattice::cut_contains(std::size_t cut, std::size_t original_index) const {
  return (cuts_[cut][original_index / 64] >>
          (original_index % 64)) & 1;
}

}  // namespace scop::lattice
