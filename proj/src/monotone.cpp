#include "slpz/monotone.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace slpz {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Indices (into seq) of a longest subsequence that is non-decreasing under
// Less, found by patience sorting with predecessor links.
template <class Less>
std::vector<std::uint32_t> longest_weak_run(std::span<const std::uint32_t> seq, Less less,
                                            std::vector<std::uint32_t>& tail_val,
                                            std::vector<std::uint32_t>& tail_idx,
                                            std::vector<std::uint32_t>& pred) {
  tail_val.clear();
  tail_idx.clear();
  pred.resize(seq.size());
  for (std::uint32_t t = 0; t < seq.size(); ++t) {
    const std::uint32_t v = seq[t];
    const auto it = std::upper_bound(tail_val.begin(), tail_val.end(), v, less);
    const std::size_t pos = static_cast<std::size_t>(it - tail_val.begin());
    pred[t] = pos ? tail_idx[pos - 1] : kNone;
    if (pos == tail_val.size()) {
      tail_val.push_back(v);
      tail_idx.push_back(t);
    } else {
      tail_val[pos] = v;
      tail_idx[pos] = t;
    }
  }
  std::vector<std::uint32_t> run(tail_idx.size());
  std::uint32_t cur = tail_idx.empty() ? kNone : tail_idx.back();
  for (std::size_t k = run.size(); k-- > 0;) {
    run[k] = cur;
    cur = pred[cur];
  }
  return run;
}

}  // namespace

std::size_t rho_bound(std::size_t m) noexcept {
  std::size_t s = 0;
  while (s * s < m) ++s;
  return 2 * s;
}

MonotoneDecomposition decompose(std::span<const std::uint32_t> values) {
  MonotoneDecomposition dec;
  dec.assignment.assign(values.size(), 0);

  std::vector<std::uint32_t> positions(values.size());
  for (std::uint32_t p = 0; p < positions.size(); ++p) positions[p] = p;
  std::vector<std::uint32_t> seq, tail_val, tail_idx, pred;
  std::vector<bool> taken;

  while (!positions.empty()) {
    seq.resize(positions.size());
    for (std::size_t k = 0; k < positions.size(); ++k) seq[k] = values[positions[k]];

    auto up = longest_weak_run(seq, std::less<>{}, tail_val, tail_idx, pred);
    auto down = longest_weak_run(seq, std::greater<>{}, tail_val, tail_idx, pred);
    const bool decreasing = down.size() > up.size();
    const auto& chosen = decreasing ? down : up;

    dec.decreasing.push_back(decreasing);
    const auto id = static_cast<std::uint32_t>(dec.decreasing.size());
    taken.assign(positions.size(), false);
    for (std::uint32_t k : chosen) {
      taken[k] = true;
      dec.assignment[positions[k]] = id;
    }
    std::size_t out = 0;
    for (std::size_t k = 0; k < positions.size(); ++k)
      if (!taken[k]) positions[out++] = positions[k];
    positions.resize(out);
  }
  return dec;
}

bool is_valid_decomposition(std::span<const std::uint32_t> values, const MonotoneDecomposition& dec) {
  if (dec.assignment.size() != values.size()) return false;
  const std::size_t rho = dec.rho();
  std::vector<bool> seen(rho, false);
  std::vector<std::uint32_t> last(rho, 0);
  for (std::size_t p = 0; p < values.size(); ++p) {
    const std::uint32_t k = dec.assignment[p];
    if (k == 0 || k > rho) return false;
    if (seen[k - 1]) {
      const bool ok = dec.decreasing[k - 1] ? values[p] <= last[k - 1] : values[p] >= last[k - 1];
      if (!ok) return false;
    }
    seen[k - 1] = true;
    last[k - 1] = values[p];
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

}  // namespace slpz
