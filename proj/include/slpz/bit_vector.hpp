#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slpz {

/*
    Bit string with rank/select support that can only grow at the end.

    Positions are 1-based: access(i) reads B[i], rank(c, i) counts c in
    B[1..i], and select(c, j) returns the position of the j-th c.

    The directory keeps one absolute 1-count per complete 512-bit block;
    a rank query adds the popcount of at most eight words inside the
    block. select is a binary search over the block counts followed by a
    word scan, O(log m).
*/
class AppendableBitVector {
 public:
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kBlockBits = 512;
  static constexpr std::size_t kWordsPerBlock = kBlockBits / kWordBits;

  AppendableBitVector() = default;

  /// Adopts packed words (bit i of the string is bit i % 64 of word i / 64).
  static AppendableBitVector from_words(std::vector<std::uint64_t> words, std::size_t size);

  void push_back(bool bit) {
    if (size_ % kWordBits == 0) words_.push_back(0);
    if (bit) {
      words_.back() |= std::uint64_t{1} << (size_ % kWordBits);
      ++ones_;
    }
    ++size_;
    if (size_ % kBlockBits == 0) block_ones_.push_back(ones_);
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  std::size_t count(bool c) const noexcept { return c ? ones_ : size_ - ones_; }

  bool access(std::size_t i) const {
    if (i == 0 || i > size_) throw std::out_of_range("bit vector access: position out of range");
    return get(i - 1);
  }

  std::size_t rank(bool c, std::size_t i) const {
    if (i > size_) throw std::out_of_range("bit vector rank: position out of range");
    const std::size_t ones = rank1(i);
    return c ? ones : i - ones;
  }

  std::size_t select(bool c, std::size_t j) const;

  // 0-based read without bounds checks.
  bool get(std::size_t pos) const noexcept {
    return (words_[pos / kWordBits] >> (pos % kWordBits)) & 1u;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  std::size_t payload_bits() const noexcept { return size_; }
  std::size_t rank_directory_bits() const noexcept { return 64 * block_ones_.size(); }
  /// Block counters plus the stored length and popcount.
  std::size_t directory_bits() const noexcept { return rank_directory_bits() + 128; }
  /// Heap bytes held by words and counters.
  std::size_t heap_bytes() const noexcept {
    return 8 * (words_.capacity() + block_ones_.capacity());
  }

 private:
  std::size_t rank1(std::size_t i) const noexcept {
    const std::size_t block = i / kBlockBits;
    std::size_t r = block ? block_ones_[block - 1] : 0;
    const std::size_t last_word = i / kWordBits;
    for (std::size_t w = block * kWordsPerBlock; w < last_word; ++w) r += std::popcount(words_[w]);
    if (const std::size_t rem = i % kWordBits; rem != 0) {
      r += std::popcount(words_[last_word] & ((std::uint64_t{1} << rem) - 1));
    }
    return r;
  }

  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> block_ones_;
  std::size_t size_ = 0;
  std::size_t ones_ = 0;
};

/// Immutable rank/select bit string.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(AppendableBitVector bits) : bits_(std::move(bits)) {}
  /// From a string of '0' and '1' characters.
  explicit BitVector(std::string_view bits);
  explicit BitVector(const std::vector<bool>& bits);

  static BitVector from_words(std::vector<std::uint64_t> words, std::size_t size) {
    return BitVector(AppendableBitVector::from_words(std::move(words), size));
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::size_t count(bool c) const noexcept { return bits_.count(c); }
  bool access(std::size_t i) const { return bits_.access(i); }
  std::size_t rank(bool c, std::size_t i) const { return bits_.rank(c, i); }
  std::size_t select(bool c, std::size_t j) const { return bits_.select(c, j); }
  bool get(std::size_t pos) const noexcept { return bits_.get(pos); }

  std::span<const std::uint64_t> words() const noexcept { return bits_.words(); }
  std::size_t payload_bits() const noexcept { return bits_.payload_bits(); }
  std::size_t directory_bits() const noexcept { return bits_.directory_bits(); }
  std::size_t size_in_bits() const noexcept { return payload_bits() + directory_bits(); }

  std::string to_string() const;

  /// Length as 8-byte little-endian, then the packed words little-endian.
  void write(std::ostream& out) const;
  static BitVector read(std::istream& in);

 private:
  AppendableBitVector bits_;
};

}  // namespace slpz
