#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace slpz {

/// Partition of sequence positions into weakly monotonic subsequences.
struct MonotoneDecomposition {
  /// assignment[p] in [1, rho]: which subsequence position p + 1 belongs to.
  std::vector<std::uint32_t> assignment;
  /// decreasing[k - 1] is true iff subsequence k is non-increasing.
  std::vector<bool> decreasing;

  std::size_t rho() const noexcept { return decreasing.size(); }
};

/*
    Greedy decomposition: repeatedly remove the longer of a longest
    non-decreasing and a longest non-increasing subsequence of what is left
    (non-decreasing on ties). One of the two has at least ceil(sqrt(r))
    elements when r remain, so at most 2 * ceil(sqrt(m)) rounds are needed.
    O(m^1.5 log m) time.
*/
MonotoneDecomposition decompose(std::span<const std::uint32_t> values);

/// 2 * ceil(sqrt(m)).
std::size_t rho_bound(std::size_t m) noexcept;

bool is_valid_decomposition(std::span<const std::uint32_t> values, const MonotoneDecomposition& dec);

}  // namespace slpz
