#include "slpz/wavelet_tree.hpp"

#include <bit>
#include <stdexcept>

#include "slpz/errors.hpp"

namespace slpz {

namespace {

using Symbol = WaveletTree::Symbol;

Symbol midpoint(Symbol a, Symbol b) { return a + (b - a) / 2; }

// Routing bit of c in a node over [a, b]; narrows [a, b] to the child.
bool route(Symbol c, Symbol& a, Symbol& b) {
  if (a == b) return false;
  const Symbol mid = midpoint(a, b);
  if (c > mid) {
    a = mid + 1;
    return true;
  }
  b = mid;
  return false;
}

// Node interval [begin, end) within one level (0-based offsets).
struct Interval {
  std::size_t begin;
  std::size_t end;
};

// Child interval on the next level for the given routing bit.
Interval descend(const BitVector& level, Interval node, bool bit) {
  const std::size_t zeros_before = level.rank(false, node.begin);
  const std::size_t zeros = level.rank(false, node.end) - zeros_before;
  if (bit) return {node.begin + zeros, node.end};
  return {node.begin, node.begin + zeros};
}

}  // namespace

std::size_t WaveletTree::height_for(Symbol alphabet_size) noexcept {
  return alphabet_size <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(alphabet_size - 1));
}

WaveletTree::WaveletTree(std::span<const Symbol> seq, Symbol alphabet_size)
    : sigma_(alphabet_size), size_(seq.size()) {
  if (alphabet_size == 0) throw std::invalid_argument("wavelet tree: alphabet size must be at least 1");
  struct Item {
    Symbol value, lo, hi;
  };
  std::vector<Item> cur;
  cur.reserve(seq.size());
  for (Symbol v : seq) {
    if (v == 0 || v > alphabet_size) throw std::out_of_range("wavelet tree: symbol outside [1, sigma]");
    cur.push_back({v, 1, alphabet_size});
  }

  const std::size_t h = height_for(alphabet_size);
  levels_.reserve(h);
  std::vector<Item> next(cur.size());
  std::vector<bool> bits(cur.size());
  for (std::size_t l = 0; l < h; ++l) {
    // cur is grouped by node; a node at one depth is identified by its low bound.
    AppendableBitVector level;
    std::size_t out = 0;
    for (std::size_t run = 0; run < cur.size();) {
      std::size_t run_end = run;
      while (run_end < cur.size() && cur[run_end].lo == cur[run].lo) ++run_end;
      for (std::size_t k = run; k < run_end; ++k) {
        bits[k] = route(cur[k].value, cur[k].lo, cur[k].hi);
        level.push_back(bits[k]);
      }
      for (std::size_t k = run; k < run_end; ++k)
        if (!bits[k]) next[out++] = cur[k];
      for (std::size_t k = run; k < run_end; ++k)
        if (bits[k]) next[out++] = cur[k];
      run = run_end;
    }
    levels_.emplace_back(std::move(level));
    cur.swap(next);
  }
}

WaveletTree WaveletTree::from_levels(Symbol alphabet_size, std::size_t length, const BitVector& levels) {
  if (alphabet_size == 0) throw std::invalid_argument("wavelet tree: alphabet size must be at least 1");
  const std::size_t h = height_for(alphabet_size);
  if (levels.size() != h * length) throw std::invalid_argument("wavelet tree: level bits do not match n * height");
  WaveletTree wt;
  wt.sigma_ = alphabet_size;
  wt.size_ = length;
  for (std::size_t l = 0; l < h; ++l) {
    AppendableBitVector level;
    for (std::size_t k = 0; k < length; ++k) level.push_back(levels.get(l * length + k));
    wt.levels_.emplace_back(std::move(level));
  }
  return wt;
}

WaveletTree::Symbol WaveletTree::access(std::size_t i) const {
  if (i == 0 || i > size_) throw std::out_of_range("wavelet tree access: position out of range");
  Symbol a = 1, b = sigma_;
  Interval node{0, size_};
  std::size_t pos = i - 1;  // offset inside node
  for (const auto& level : levels_) {
    const bool bit = level.get(node.begin + pos);
    pos = level.rank(bit, node.begin + pos) - level.rank(bit, node.begin);
    node = descend(level, node, bit);
    if (a != b) {
      const Symbol mid = midpoint(a, b);
      if (bit) a = mid + 1;
      else b = mid;
    }
  }
  return a;
}

std::size_t WaveletTree::rank(Symbol c, std::size_t i) const {
  if (c == 0 || c > sigma_) throw std::out_of_range("wavelet tree rank: symbol outside alphabet");
  if (i > size_) throw std::out_of_range("wavelet tree rank: position out of range");
  Symbol a = 1, b = sigma_;
  Interval node{0, size_};
  std::size_t count = i;  // prefix length inside node
  for (const auto& level : levels_) {
    const bool bit = route(c, a, b);
    count = level.rank(bit, node.begin + count) - level.rank(bit, node.begin);
    node = descend(level, node, bit);
  }
  return count;
}

std::size_t WaveletTree::select(Symbol c, std::size_t j) const {
  if (c == 0 || c > sigma_) throw std::out_of_range("wavelet tree select: symbol outside alphabet");
  Symbol a = 1, b = sigma_;
  std::vector<Interval> path;
  std::vector<bool> bits;
  path.reserve(levels_.size());
  Interval node{0, size_};
  for (const auto& level : levels_) {
    const bool bit = route(c, a, b);
    path.push_back(node);
    bits.push_back(bit);
    node = descend(level, node, bit);
  }
  if (j == 0 || j > node.end - node.begin) throw NoSuchOccurrence("wavelet tree select: no such occurrence");

  std::size_t pos = j;  // 1-based inside the current node
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const auto& level = levels_[l];
    const std::size_t begin = path[l].begin;
    pos = level.select(bits[l], level.rank(bits[l], begin) + pos) - begin;
  }
  return pos;
}

BitVector WaveletTree::concatenated_levels() const {
  AppendableBitVector all;
  for (const auto& level : levels_)
    for (std::size_t k = 0; k < level.size(); ++k) all.push_back(level.get(k));
  return BitVector(std::move(all));
}

std::size_t WaveletTree::payload_bits() const noexcept {
  std::size_t bits = 0;
  for (const auto& level : levels_) bits += level.payload_bits();
  return bits;
}

std::size_t WaveletTree::directory_bits() const noexcept {
  std::size_t bits = 128;
  for (const auto& level : levels_) bits += level.directory_bits();
  return bits;
}

}  // namespace slpz
