#include "slpz/naming_index.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace slpz {

namespace {

// Routing bit of c in a node over [a, b]; narrows [a, b] to the child.
bool route(std::uint64_t c, std::uint64_t& a, std::uint64_t& b) {
  const std::uint64_t mid = a + (b - a) / 2;
  if (c > mid) {
    a = mid + 1;
    return true;
  }
  b = mid;
  return false;
}

// Internal levels between [a, b] and the leaf of c.
std::size_t levels_below(std::uint64_t c, std::uint64_t a, std::uint64_t b) {
  std::size_t d = 0;
  while (a < b) {
    route(c, a, b);
    ++d;
  }
  return d;
}

}  // namespace

std::uint64_t digram_code(SymbolId x, SymbolId y, std::uint64_t capacity) {
  if (x == 0 || y == 0 || x > capacity || y > capacity) throw std::out_of_range("digram_code: symbol exceeds capacity");
  return (std::uint64_t{x} - 1) * capacity + y;
}

NamingIndex::NamingIndex(SymbolId sigma, std::uint64_t capacity) : sigma_(sigma), capacity_(capacity) {
  if (capacity == 0 || capacity > kMaxCapacity) throw std::invalid_argument("naming index: capacity out of range");
  if (capacity < sigma) throw std::invalid_argument("naming index: capacity below alphabet size");
}

std::size_t NamingIndex::height() const noexcept {
  const std::uint64_t range = capacity_ * capacity_;
  return range <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(range - 1));
}

void NamingIndex::check_symbols(SymbolId x, SymbolId y) const {
  if (x == 0 || y == 0 || x > symbol_count() || y > symbol_count())
    throw std::out_of_range("naming index: symbol id not defined yet");
}

NamingIndex::Descent NamingIndex::descend(std::uint64_t code) const {
  Descent d;
  d.lo = 1;
  d.hi = capacity_ * capacity_;
  std::uint32_t node = root_;
  while (node != kNone) {
    const Node& nd = nodes_[node];
    if (nd.single()) {
      d.stop = node;
      d.found = nd.code == code;
      return d;
    }
    const bool bit = route(code, d.lo, d.hi);
    d.path.push_back({node, bit});
    node = nd.child[bit];
  }
  return d;
}

std::optional<SymbolId> NamingIndex::lookup(SymbolId x, SymbolId y, NamingTrace* trace) const {
  check_symbols(x, y);
  // A digram over a symbol beyond capacity cannot have been named yet.
  if (x > capacity_ || y > capacity_) return std::nullopt;
  const Descent d = descend(digram_code(x, y, capacity_));
  if (trace) trace->nodes_visited = d.path.size() + (d.stop != kNone && d.lo < d.hi ? 1 : 0);
  if (!d.found) return std::nullopt;
  std::size_t pos = 1;
  for (auto it = d.path.rbegin(); it != d.path.rend(); ++it) pos = nodes_[it->node].bits.select(it->bit, pos);
  return static_cast<SymbolId>(sigma_ + pos);
}

std::uint32_t NamingIndex::new_single(std::uint64_t code) {
  if (nodes_.size() >= kNone) throw std::length_error("naming index: too many nodes");
  nodes_.emplace_back();
  nodes_.back().code = code;
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

SymbolId NamingIndex::append(std::uint64_t code, Descent& d, NamingTrace* trace) {
  if (symbol_count() >= kMaxCapacity) throw std::length_error("naming index: symbol ids exhausted");
  std::size_t visited = d.path.size();
  for (const Step& s : d.path) nodes_[s.node].bits.push_back(s.bit);

  if (root_ == kNone) {
    root_ = new_single(code);
  } else if (d.stop == kNone) {
    const Step& last = d.path.back();
    const std::uint32_t leaf = new_single(code);
    nodes_[last.node].child[last.bit] = leaf;
  } else {
    // Expand single-code nodes until the old and the new code part ways.
    std::uint32_t node = d.stop;
    std::uint64_t lo = d.lo, hi = d.hi;
    for (;;) {
      const std::uint64_t old_code = nodes_[node].code;
      std::uint64_t a = lo, b = hi;
      const bool old_bit = route(old_code, a, b);
      std::uint64_t a2 = lo, b2 = hi;
      const bool new_bit = route(code, a2, b2);
      ++visited;
      const std::uint32_t moved = new_single(old_code);
      Node& nd = nodes_[node];
      nd.bits.push_back(old_bit);
      nd.bits.push_back(new_bit);
      nd.child[old_bit] = moved;
      if (old_bit != new_bit) {
        const std::uint32_t leaf = new_single(code);
        nodes_[node].child[new_bit] = leaf;
        break;
      }
      node = moved;
      lo = a;
      hi = b;
    }
  }
  if (trace) trace->nodes_visited = visited;
  ++size_;
  return static_cast<SymbolId>(sigma_ + size_);
}

SymbolId NamingIndex::insert(SymbolId x, SymbolId y, NamingTrace* trace) {
  check_symbols(x, y);
  if (std::max(x, y) > capacity_) grow(std::max(x, y));
  const std::uint64_t code = digram_code(x, y, capacity_);
  Descent d = descend(code);
  if (d.found) throw std::invalid_argument("naming index: digram already named");
  return append(code, d, trace);
}

std::pair<SymbolId, bool> NamingIndex::lookup_or_insert(SymbolId x, SymbolId y, NamingTrace* trace) {
  check_symbols(x, y);
  if (std::max(x, y) > capacity_) grow(std::max(x, y));
  const std::uint64_t code = digram_code(x, y, capacity_);
  Descent d = descend(code);
  if (!d.found) return {append(code, d, trace), true};
  if (trace) trace->nodes_visited = d.path.size() + (d.lo < d.hi ? 1 : 0);
  std::size_t pos = 1;
  for (auto it = d.path.rbegin(); it != d.path.rend(); ++it) pos = nodes_[it->node].bits.select(it->bit, pos);
  return {static_cast<SymbolId>(sigma_ + pos), false};
}

std::uint64_t NamingIndex::code_at(std::size_t t) const {
  if (t == 0 || t > size_) throw std::out_of_range("naming index: position out of range");
  std::uint32_t node = root_;
  std::size_t pos = t;
  for (;;) {
    const Node& nd = nodes_[node];
    if (nd.single()) return nd.code;
    const bool bit = nd.bits.get(pos - 1);
    pos = nd.bits.rank(bit, pos);
    node = nd.child[bit];
  }
}

Rule NamingIndex::digram_at(std::size_t t) const {
  const std::uint64_t c = code_at(t) - 1;
  return Rule{static_cast<SymbolId>(c / capacity_ + 1), static_cast<SymbolId>(c % capacity_ + 1)};
}

void NamingIndex::grow(std::uint64_t needed) {
  std::uint64_t cap = capacity_;
  while (cap < needed) cap = std::min(cap * 2, kMaxCapacity);
  std::vector<Rule> digrams;
  digrams.reserve(size_);
  for (std::size_t t = 1; t <= size_; ++t) digrams.push_back(digram_at(t));

  NamingIndex rebuilt(sigma_, cap);
  for (const Rule& r : digrams) rebuilt.insert(r.left, r.right);
  *this = std::move(rebuilt);
}

NamingSpace NamingIndex::space() const {
  NamingSpace s;
  s.node_count = nodes_.size();
  s.structure_bytes = sizeof(*this) + sizeof(Node) * nodes_.capacity();
  if (root_ == kNone) return s;
  struct Item {
    std::uint32_t node;
    std::uint64_t lo, hi;
  };
  std::vector<Item> stack{{root_, 1, capacity_ * capacity_}};
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    const Node& nd = nodes_[it.node];
    s.structure_bytes += nd.bits.heap_bytes();
    if (nd.single()) {
      s.payload_bits += levels_below(nd.code, it.lo, it.hi);
      continue;
    }
    s.payload_bits += nd.bits.size();
    s.directory_bits += nd.bits.rank_directory_bits();
    const std::uint64_t mid = it.lo + (it.hi - it.lo) / 2;
    if (nd.child[0] != kNone) stack.push_back({nd.child[0], it.lo, mid});
    if (nd.child[1] != kNone) stack.push_back({nd.child[1], mid + 1, it.hi});
  }
  return s;
}

}  // namespace slpz
