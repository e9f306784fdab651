#include "slpz/encoded_dictionary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "slpz/canonical.hpp"

namespace slpz {

BitVector gap_encode(std::span<const std::uint32_t> sorted_values) {
  AppendableBitVector bits;
  std::uint32_t prev = 0;
  for (std::uint32_t v : sorted_values) {
    if (v < prev) throw std::invalid_argument("gap_encode: sequence is not non-decreasing");
    for (std::uint32_t z = prev; z < v; ++z) bits.push_back(false);
    bits.push_back(true);
    prev = v;
  }
  return BitVector(std::move(bits));
}

MonotoneSequenceCode::MonotoneSequenceCode(std::span<const std::uint32_t> values, const MonotoneDecomposition& dec) {
  if (!is_valid_decomposition(values, dec))
    throw std::invalid_argument("monotone code: decomposition does not match the sequence");
  const std::size_t m = values.size();
  const WaveletTree::Symbol alphabet = std::max<std::size_t>(dec.rho(), 1);

  std::vector<WaveletTree::Symbol> membership(dec.assignment.begin(), dec.assignment.end());
  assignment_ = WaveletTree(membership, alphabet);

  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return values[a] < values[b]; });

  std::vector<WaveletTree::Symbol> permuted(m);
  std::vector<std::uint32_t> sorted(m);
  for (std::size_t t = 0; t < m; ++t) {
    permuted[t] = membership[order[t]];
    sorted[t] = values[order[t]];
  }
  permuted_ = WaveletTree(permuted, alphabet);
  values_ = gap_encode(sorted);
  decreasing_ = dec.decreasing;
}

MonotoneSequenceCode::MonotoneSequenceCode(WaveletTree assignment, WaveletTree permuted, BitVector values,
                                           std::vector<bool> decreasing)
    : assignment_(std::move(assignment)),
      permuted_(std::move(permuted)),
      values_(std::move(values)),
      decreasing_(std::move(decreasing)) {
  const std::size_t m = assignment_.size();
  const WaveletTree::Symbol alphabet = std::max<std::size_t>(decreasing_.size(), 1);
  if (permuted_.size() != m) throw std::invalid_argument("monotone code: D_rho and D_pi lengths differ");
  if (m > 0 && decreasing_.empty()) throw std::invalid_argument("monotone code: rho is zero for a non-empty sequence");
  if (assignment_.alphabet_size() != alphabet || permuted_.alphabet_size() != alphabet)
    throw std::invalid_argument("monotone code: alphabet does not match rho");
  if (values_.count(true) != m) throw std::invalid_argument("monotone code: B must contain exactly m ones");
  if (m > 0 && !values_.get(values_.size() - 1)) throw std::invalid_argument("monotone code: B must end with a one");
  for (WaveletTree::Symbol k = 1; k <= decreasing_.size(); ++k) {
    const std::size_t count = assignment_.rank(k, m);
    if (count == 0 || count != permuted_.rank(k, m))
      throw std::invalid_argument("monotone code: D_pi is not a permutation of D_rho");
  }
}

std::uint32_t MonotoneSequenceCode::access(std::size_t p) const {
  const std::size_t m = size();
  if (p == 0 || p > m) throw std::out_of_range("monotone code access: position out of range");
  const WaveletTree::Symbol k = assignment_.access(p);
  std::size_t t = assignment_.rank(k, p);
  if (decreasing_[k - 1]) t = assignment_.rank(k, m) + 1 - t;
  const std::size_t l = permuted_.select(k, t);
  return static_cast<std::uint32_t>(values_.rank(false, values_.select(true, l)));
}

std::vector<std::uint32_t> MonotoneSequenceCode::decode_all() const {
  const std::size_t m = size();
  std::vector<std::uint32_t> sorted;
  sorted.reserve(m);
  std::uint32_t zeros = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_.get(i)) sorted.push_back(zeros);
    else ++zeros;
  }

  // Pair the j-th occurrence of k in D_pi with the j-th (or, for a
  // non-increasing part, the j-th from last) occurrence of k in D_rho.
  const std::size_t rho_w = std::max<std::size_t>(rho(), 1);
  std::vector<std::size_t> start(rho_w + 2, 0);
  std::vector<WaveletTree::Symbol> member(m);
  for (std::size_t p = 0; p < m; ++p) {
    member[p] = assignment_.access(p + 1);
    ++start[member[p] + 1];
  }
  for (std::size_t k = 1; k <= rho_w + 1; ++k) start[k] += start[k - 1];
  std::vector<std::uint32_t> positions(m);
  std::vector<std::size_t> fill(start.begin(), start.end() - 1);
  for (std::size_t p = 0; p < m; ++p) positions[fill[member[p]]++] = static_cast<std::uint32_t>(p);

  std::vector<std::uint32_t> out(m);
  std::vector<std::size_t> seen(rho_w + 1, 0);
  for (std::size_t l = 0; l < m; ++l) {
    const WaveletTree::Symbol k = permuted_.access(l + 1);
    const std::size_t j = seen[k]++;
    const std::size_t count = start[k + 1] - start[k];
    const std::size_t idx = decreasing_[k - 1] ? count - 1 - j : j;
    out[positions[start[k] + idx]] = sorted[l];
  }
  return out;
}

EncodedDictionary::EncodedDictionary(const Slp& g) : terminals_(g.terminals), start_(g.start) {
  if (!has_monotone_lefts(g)) throw std::invalid_argument("encode: left children are not non-decreasing");
  if (g.start == 0 || g.start > g.num_symbols()) throw std::invalid_argument("encode: start symbol out of range");
  std::vector<std::uint32_t> lefts, rights;
  lefts.reserve(g.rules.size());
  rights.reserve(g.rules.size());
  for (const Rule& r : g.rules) {
    lefts.push_back(r.left);
    rights.push_back(r.right);
  }
  left_bits_ = gap_encode(lefts);
  rights_ = MonotoneSequenceCode(rights, decompose(rights));
}

EncodedDictionary::EncodedDictionary(std::vector<std::uint8_t> terminals, SymbolId start, BitVector left_bits,
                                     MonotoneSequenceCode rights)
    : terminals_(std::move(terminals)), start_(start), left_bits_(std::move(left_bits)), rights_(std::move(rights)) {
  const std::size_t m = rights_.size();
  const std::size_t n = terminals_.size() + m;
  if (terminals_.empty()) throw std::invalid_argument("encoded dictionary: empty alphabet");
  if (start_ == 0 || start_ > n) throw std::invalid_argument("encoded dictionary: start symbol out of range");
  if (left_bits_.count(true) != m) throw std::invalid_argument("encoded dictionary: left bits must hold m ones");
  if (m > 0) {
    // Symbol ids are >= 1 and <= n on both sides.
    if (left_bits_.get(0) || left_bits_.count(false) > n || !left_bits_.get(left_bits_.size() - 1))
      throw std::invalid_argument("encoded dictionary: left child out of range");
    const BitVector& b = rights_.values();
    if (b.get(0) || b.count(false) > n) throw std::invalid_argument("encoded dictionary: right child out of range");
  }
}

void EncodedDictionary::check_variable(SymbolId k) const {
  if (k == 0 || k > num_symbols()) throw std::out_of_range("symbol id out of range");
  if (k <= sigma()) throw std::out_of_range("terminal has no rule");
}

SymbolId EncodedDictionary::left_access(SymbolId k) const {
  check_variable(k);
  return static_cast<SymbolId>(left_bits_.rank(false, left_bits_.select(true, k - sigma())));
}

SymbolId EncodedDictionary::right_access(SymbolId k) const {
  check_variable(k);
  return rights_.access(k - sigma());
}

Rule EncodedDictionary::access_rule(SymbolId k) const { return Rule{left_access(k), right_access(k)}; }

Slp EncodedDictionary::decode() const {
  Slp g;
  g.terminals = terminals_;
  g.start = start_;
  const std::vector<std::uint32_t> rights = rights_.decode_all();
  g.rules.resize(num_rules());
  std::size_t t = 0;
  std::uint32_t zeros = 0;
  for (std::size_t i = 0; i < left_bits_.size(); ++i) {
    if (!left_bits_.get(i)) {
      ++zeros;
      continue;
    }
    g.rules[t] = Rule{zeros, rights[t]};
    ++t;
  }
  return g;
}

std::size_t SizeReport::payload_bits() const noexcept {
  return left_bits.payload + d_rho.payload + d_pi.payload + big_b.payload + dirs.payload;
}

std::size_t SizeReport::directory_bits() const noexcept {
  return left_bits.directory + d_rho.directory + d_pi.directory + big_b.directory + dirs.directory;
}

SizeReport EncodedDictionary::measured_bits() const {
  SizeReport r;
  r.sigma = sigma();
  r.m = num_rules();
  r.n = num_symbols();
  r.rho = rho();
  r.left_bits = {left_bits_.payload_bits(), left_bits_.directory_bits()};
  r.d_rho = {rights_.assignment().payload_bits(), rights_.assignment().directory_bits()};
  r.d_pi = {rights_.permuted().payload_bits(), rights_.permuted().directory_bits()};
  r.big_b = {rights_.values().payload_bits(), rights_.values().directory_bits()};
  r.dirs = {rights_.rho(), 0};
  const double n = static_cast<double>(r.n);
  r.plain_bits = 2 * r.n * WaveletTree::height_for(r.n);
  r.lower_bound_bits = 2 * n + std::lgamma(n + 1) / std::log(2.0);
  return r;
}

EncodedDictionary encode_grammar(const Slp& g) { return EncodedDictionary(bfs_rename(g).grammar); }

}  // namespace slpz
