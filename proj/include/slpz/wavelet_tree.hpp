#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "slpz/bit_vector.hpp"

namespace slpz {

/*
    Static balanced wavelet tree over the alphabet [1, sigma].

    A node over [a, b] sends S_v[k] to the right child iff
    S_v[k] > floor((a + b) / 2). Nodes are laid out level by level: level l
    is one bit string of length n holding the bit strings of every node at
    depth l, left to right. Children are found arithmetically from the
    parent's interval and a rank, so no per-node pointers are stored.

    Symbols whose leaf sits above the deepest level (sigma not a power of
    two) carry 0 bits through the remaining levels, which keeps every level
    exactly n bits long: the tree stores n * ceil(log2 sigma) bits.
*/
class WaveletTree {
 public:
  using Symbol = std::uint64_t;

  WaveletTree() = default;
  /// Every element of seq must lie in [1, alphabet_size].
  WaveletTree(std::span<const Symbol> seq, Symbol alphabet_size);

  /// Rebuilds from the concatenated level bit strings (breadth-first order).
  static WaveletTree from_levels(Symbol alphabet_size, std::size_t length, const BitVector& levels);

  std::size_t size() const noexcept { return size_; }
  Symbol alphabet_size() const noexcept { return sigma_; }
  std::size_t height() const noexcept { return levels_.size(); }
  const BitVector& level(std::size_t l) const { return levels_.at(l); }

  Symbol access(std::size_t i) const;
  std::size_t rank(Symbol c, std::size_t i) const;
  std::size_t select(Symbol c, std::size_t j) const;

  /// All level bits concatenated, level 0 first.
  BitVector concatenated_levels() const;

  std::size_t payload_bits() const noexcept;
  /// Rank directories of every level plus the stored sigma and length.
  std::size_t directory_bits() const noexcept;
  std::size_t size_in_bits() const noexcept { return payload_bits() + directory_bits(); }

  static std::size_t height_for(Symbol alphabet_size) noexcept;

 private:
  Symbol sigma_ = 1;
  std::size_t size_ = 0;
  std::vector<BitVector> levels_;
};

}  // namespace slpz
