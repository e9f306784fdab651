#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "slpz/bit_vector.hpp"
#include "slpz/monotone.hpp"
#include "slpz/slp.hpp"
#include "slpz/wavelet_tree.hpp"

namespace slpz {

/*
    Directly addressable encoding of an integer sequence D[1..m] given a
    monotonic decomposition of its positions:

      assignment  D_rho[p] = k iff p belongs to subsequence k
      permuted    D_pi = D_rho[l_1] .. D_rho[l_m], where (l_t) orders the
                  positions stably by D value
      values      B = 0^{D[l_1]} 1 0^{D[l_2] - D[l_1]} 1 ... 1
      directions  b[k] = 1 iff subsequence k is non-increasing

    D[p] = rank_0(B, select_1(B, l)) with
      l = select_k(D_pi, rank_k(D_rho, p))                      b[k] = 0
      l = select_k(D_pi, rank_k(D_rho, m) + 1 - rank_k(D_rho, p)) b[k] = 1
*/
class MonotoneSequenceCode {
 public:
  MonotoneSequenceCode() = default;
  MonotoneSequenceCode(std::span<const std::uint32_t> values, const MonotoneDecomposition& dec);

  /// Reassembles from stored parts; throws std::invalid_argument if they disagree.
  MonotoneSequenceCode(WaveletTree assignment, WaveletTree permuted, BitVector values, std::vector<bool> decreasing);

  std::size_t size() const noexcept { return assignment_.size(); }
  std::size_t rho() const noexcept { return decreasing_.size(); }

  /// D[p], 1 <= p <= size().
  std::uint32_t access(std::size_t p) const;
  /// D[1..m] in one pass, O(m log rho).
  std::vector<std::uint32_t> decode_all() const;

  const WaveletTree& assignment() const noexcept { return assignment_; }
  const WaveletTree& permuted() const noexcept { return permuted_; }
  const BitVector& values() const noexcept { return values_; }
  const std::vector<bool>& decreasing() const noexcept { return decreasing_; }

 private:
  WaveletTree assignment_;  // D_rho
  WaveletTree permuted_;    // D_pi
  BitVector values_;        // B
  std::vector<bool> decreasing_;
};

/// Bit counts of one stored component.
struct ComponentBits {
  std::size_t payload = 0;
  std::size_t directory = 0;

  std::size_t total() const noexcept { return payload + directory; }
};

struct SizeReport {
  std::size_t sigma = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t rho = 0;

  ComponentBits left_bits;
  ComponentBits d_rho;
  ComponentBits d_pi;
  ComponentBits big_b;
  ComponentBits dirs;

  /// Fixed-length plain dictionary: 2n * ceil(log2 n).
  std::size_t plain_bits = 0;
  /// Information-theoretic floor 2n + log2(n!).
  double lower_bound_bits = 0;

  std::size_t payload_bits() const noexcept;
  std::size_t directory_bits() const noexcept;
  std::size_t total_bits() const noexcept { return payload_bits() + directory_bits(); }
};

/*
    Phrase dictionary of a canonical SLP (left children non-decreasing):
    the lefts as a unary gap bit string, the rights as a
    MonotoneSequenceCode. The all-zero entries of terminals are not stored;
    variable k lives at position k - sigma.
*/
class EncodedDictionary {
 public:
  EncodedDictionary() = default;

  /// Throws std::invalid_argument unless has_monotone_lefts(g).
  explicit EncodedDictionary(const Slp& g);

  /// Reassembles from stored parts; throws std::invalid_argument if they disagree.
  EncodedDictionary(std::vector<std::uint8_t> terminals, SymbolId start, BitVector left_bits,
                    MonotoneSequenceCode rights);

  SymbolId sigma() const noexcept { return static_cast<SymbolId>(terminals_.size()); }
  SymbolId num_symbols() const noexcept { return sigma() + static_cast<SymbolId>(num_rules()); }
  std::size_t num_rules() const noexcept { return rights_.size(); }
  std::size_t rho() const noexcept { return rights_.rho(); }
  SymbolId start() const noexcept { return start_; }
  const std::vector<std::uint8_t>& terminals() const noexcept { return terminals_; }

  SymbolId left_access(SymbolId k) const;
  SymbolId right_access(SymbolId k) const;
  Rule access_rule(SymbolId k) const;

  /// Every rule decoded into an explicit grammar.
  Slp decode() const;

  SizeReport measured_bits() const;

  const BitVector& left_bits() const noexcept { return left_bits_; }
  const MonotoneSequenceCode& rights() const noexcept { return rights_; }

 private:
  void check_variable(SymbolId k) const;

  std::vector<std::uint8_t> terminals_;
  SymbolId start_ = 0;
  BitVector left_bits_;
  MonotoneSequenceCode rights_;
};

/// Unary gap code 0^{v_1} 1 0^{v_2 - v_1} 1 ... of a non-decreasing sequence.
BitVector gap_encode(std::span<const std::uint32_t> sorted_values);

/// bfs_rename, decompose and encode in one step.
EncodedDictionary encode_grammar(const Slp& g);

}  // namespace slpz
