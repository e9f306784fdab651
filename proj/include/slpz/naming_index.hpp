#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "slpz/bit_vector.hpp"
#include "slpz/slp.hpp"

namespace slpz {

/// Rank of (x, y) in the lexicographic order of [1, capacity]^2: (x - 1) * capacity + y.
std::uint64_t digram_code(SymbolId x, SymbolId y, std::uint64_t capacity);

/// Filled by an operation: tree nodes whose bit string was read or written.
struct NamingTrace {
  std::size_t nodes_visited = 0;
};

struct NamingSpace {
  /// Bits of the node bit strings (singleton chains counted at one bit per level).
  std::size_t payload_bits = 0;
  /// Block rank counters of the materialized bit strings.
  std::size_t directory_bits = 0;
  std::size_t node_count = 0;
  /// In-memory bytes of node records and word storage.
  std::size_t structure_bytes = 0;

  std::size_t stored_bits() const noexcept { return payload_bits + directory_bits; }
};

/*
    Reverse dictionary as an append-only wavelet tree.

    The digrams named so far form a sequence S of digram codes over
    [1, N^2]; the t-th digram is variable sigma + t. A lookup descends from
    the root along the code's path and, if the digram exists, climbs back
    with select to recover its position t. An insert appends one bit to each
    node on the path.

    Nodes are created lazily. A subtree holding a single code is kept as
    one node storing that code, so leaves never carry bits; it is expanded
    when a second code arrives. Capacity N doubles (with a full rebuild)
    when a symbol id exceeds it.
*/
class NamingIndex {
 public:
  static constexpr std::uint64_t kMaxCapacity = std::numeric_limits<std::uint32_t>::max();

  NamingIndex(SymbolId sigma, std::uint64_t capacity);

  std::optional<SymbolId> lookup(SymbolId x, SymbolId y, NamingTrace* trace = nullptr) const;
  /// Names a digram that is not present yet; throws std::invalid_argument on a duplicate.
  SymbolId insert(SymbolId x, SymbolId y, NamingTrace* trace = nullptr);
  /// Existing name, or a fresh one (second member true).
  std::pair<SymbolId, bool> lookup_or_insert(SymbolId x, SymbolId y, NamingTrace* trace = nullptr);

  std::size_t size() const noexcept { return size_; }
  SymbolId sigma() const noexcept { return sigma_; }
  std::uint64_t symbol_count() const noexcept { return std::uint64_t{sigma_} + size_; }
  std::uint64_t capacity() const noexcept { return capacity_; }
  /// Levels of internal nodes in the tree over [1, N^2].
  std::size_t height() const noexcept;

  /// The digram named sigma + t, 1 <= t <= size().
  Rule digram_at(std::size_t t) const;
  std::uint64_t code_at(std::size_t t) const;

  NamingSpace space() const;

 private:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  struct Node {
    AppendableBitVector bits;  // empty while the node holds a single code
    std::uint64_t code = 0;    // that code
    std::uint32_t child[2] = {kNone, kNone};

    bool single() const noexcept { return bits.empty(); }
  };

  struct Step {
    std::uint32_t node;
    bool bit;
  };

  struct Descent {
    std::vector<Step> path;     // expanded nodes passed through
    std::uint32_t stop = kNone; // single-code node reached, if any
    std::uint64_t lo = 0, hi = 0;  // range of the stop node
    bool found = false;
  };

  Descent descend(std::uint64_t code) const;
  SymbolId append(std::uint64_t code, Descent& d, NamingTrace* trace);
  std::uint32_t new_single(std::uint64_t code);
  void check_symbols(SymbolId x, SymbolId y) const;
  void grow(std::uint64_t needed);

  SymbolId sigma_;
  std::uint64_t capacity_;
  std::size_t size_ = 0;
  std::uint32_t root_ = kNone;
  std::vector<Node> nodes_;
};

}  // namespace slpz
