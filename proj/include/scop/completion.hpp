#pragma once

#include <cstdint>
#include <vector>

#include "scop/poset.hpp"

namespace scop::lattice {

// The Dedekind-MacNeille completion of a finite poset: the lattice of cuts,
// each represented by its lower set as a bitset over the original elements.
// Every pair of cuts has a meet (set intersection) and a join (the cut
// closure of the union), so the result is a complete lattice. Original
// elements embed as principal cuts.
class CutLattice {
 public:
  using Bits = std::vector<std::uint64_t>;

  std::size_t size() const { return cuts_.size(); }
  std::size_t ground_size() const { return ground_size_; }
  const std::vector<Bits>& cuts() const { return cuts_; }

  bool leq(std::size_t a, std::size_t b) const;  // lower-set inclusion
  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;

  std::size_t embed(std::size_t original_index) const {
    return embedding_.at(original_index);
  }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return cuts_.size() - 1; }

  bool cut_contains(std::size_t cut, std::size_t original_index) const;

 private:
  friend CutLattice dedekind_macneille(const OrthoPoset& p);

  std::size_t index_of(const Bits& b) const;

  std::size_t ground_size_ = 0;
  std::size_t words_ = 0;
  std::vector<Bits> cuts_;                // sorted: popcount, then bits
  std::vector<std::size_t> embedding_;    // original index -> cut index
  std::vector<Bits> up_;                  // up-sets of original elements
  std::vector<Bits> down_;                // down-sets of original elements
};

CutLattice dedekind_macneille(const OrthoPoset& p);

}  // namespace scop::lattice
