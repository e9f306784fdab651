#include "slpz/bit_vector.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "slpz/errors.hpp"

namespace slpz {

namespace {

// Position (0-based) of the k-th (1-based) set bit of w.
unsigned select_in_word(std::uint64_t w, std::size_t k) {
  for (std::size_t i = 1; i < k; ++i) w &= w - 1;
  return static_cast<unsigned>(std::countr_zero(w));
}

void put_u64(std::ostream& out, std::uint64_t v) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(buf, 8);
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char buf[8];
  if (!in.read(reinterpret_cast<char*>(buf), 8)) throw TruncatedError("bit vector: truncated input");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{buf[i]} << (8 * i);
  return v;
}

}  // namespace

AppendableBitVector AppendableBitVector::from_words(std::vector<std::uint64_t> words, std::size_t size) {
  const std::size_t needed = (size + kWordBits - 1) / kWordBits;
  if (words.size() < needed) throw std::invalid_argument("bit vector: not enough words for size");
  words.resize(needed);
  if (const std::size_t rem = size % kWordBits; rem != 0) words.back() &= (std::uint64_t{1} << rem) - 1;

  AppendableBitVector bv;
  bv.words_ = std::move(words);
  bv.size_ = size;
  const std::size_t full_blocks = size / kBlockBits;
  bv.block_ones_.reserve(full_blocks);
  std::size_t ones = 0;
  for (std::size_t w = 0; w < bv.words_.size(); ++w) {
    ones += std::popcount(bv.words_[w]);
    if ((w + 1) % kWordsPerBlock == 0 && (w + 1) / kWordsPerBlock <= full_blocks) bv.block_ones_.push_back(ones);
  }
  bv.ones_ = ones;
  return bv;
}

std::size_t AppendableBitVector::select(bool c, std::size_t j) const {
  if (j == 0 || j > count(c)) throw NoSuchOccurrence("bit vector select: no such occurrence");

  // Occurrences of c in the first (b + 1) complete blocks.
  auto before_end_of = [&](std::size_t b) {
    const std::size_t ones = block_ones_[b];
    return c ? ones : (b + 1) * kBlockBits - ones;
  };
  std::size_t lo = 0, hi = block_ones_.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (before_end_of(mid) < j) lo = mid + 1;
    else hi = mid;
  }
  const std::size_t block = lo;
  std::size_t seen = block ? before_end_of(block - 1) : 0;

  for (std::size_t w = block * kWordsPerBlock; w < words_.size(); ++w) {
    const std::uint64_t word = c ? words_[w] : ~words_[w];
    const std::size_t pc = std::popcount(word);
    if (seen + pc >= j) return w * kWordBits + select_in_word(word, j - seen) + 1;
    seen += pc;
  }
  throw NoSuchOccurrence("bit vector select: directory inconsistent");
}

BitVector::BitVector(std::string_view bits) {
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("bit vector: expected only '0' and '1'");
    bits_.push_back(ch == '1');
  }
}

BitVector::BitVector(const std::vector<bool>& bits) {
  for (bool b : bits) bits_.push_back(b);
}

std::string BitVector::to_string() const {
  std::string s(size(), '0');
  for (std::size_t i = 0; i < size(); ++i)
    if (get(i)) s[i] = '1';
  return s;
}

void BitVector::write(std::ostream& out) const {
  put_u64(out, size());
  for (std::uint64_t w : words()) put_u64(out, w);
}

BitVector BitVector::read(std::istream& in) {
  const std::uint64_t size = get_u64(in);
  const std::uint64_t n_words = (size + 63) / 64;
  std::vector<std::uint64_t> words;
  for (std::uint64_t i = 0; i < n_words; ++i) words.push_back(get_u64(in));
  return from_words(std::move(words), size);
}

}  // namespace slpz
