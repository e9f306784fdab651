#include <doctest.h>

#include <algorithm>
#include <random>

#include "slpz/errors.hpp"
#include "slpz/wavelet_tree.hpp"

using namespace slpz;
using Seq = std::vector<WaveletTree::Symbol>;

namespace {

std::size_t scan_rank(const Seq& s, WaveletTree::Symbol c, std::size_t i) {
  return static_cast<std::size_t>(std::count(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i), c));
}

std::size_t scan_select(const Seq& s, WaveletTree::Symbol c, std::size_t j) {
  for (std::size_t p = 0; p < s.size(); ++p)
    if (s[p] == c && --j == 0) return p + 1;
  return 0;
}

void check_against_scan(const WaveletTree& wt, const Seq& s, WaveletTree::Symbol sigma) {
  REQUIRE(wt.size() == s.size());
  for (std::size_t i = 1; i <= s.size(); ++i) CHECK(wt.access(i) == s[i - 1]);
  std::size_t total = 0;
  for (WaveletTree::Symbol c = 1; c <= sigma; ++c) {
    for (std::size_t i = 0; i <= s.size(); ++i) CHECK(wt.rank(c, i) == scan_rank(s, c, i));
    const std::size_t cnt = wt.rank(c, s.size());
    total += cnt;
    for (std::size_t j = 1; j <= cnt; ++j) {
      CHECK(wt.select(c, j) == scan_select(s, c, j));
      CHECK(wt.access(wt.select(c, j)) == c);
    }
    CHECK_THROWS_AS(wt.select(c, cnt + 1), NoSuchOccurrence);
  }
  CHECK(total == s.size());
}

}  // namespace

TEST_CASE("sequence 342112243") {
  const Seq s = {3, 4, 2, 1, 1, 2, 2, 4, 3};
  const WaveletTree wt(s, 4);
  CHECK(wt.height() == 2);
  CHECK(wt.level(0).to_string() == "110000011");
  CHECK(wt.level(0).access(2) == 1);
  CHECK(wt.access(2) == 4);
  CHECK(wt.access(1) == 3);
  CHECK(wt.access(9) == 3);
  CHECK(wt.rank(2, 6) == 2);
  CHECK(wt.rank(4, 9) == 2);
  CHECK(wt.rank(3, 0) == 0);
  CHECK(wt.select(1, 2) == 5);
  CHECK(wt.select(3, 1) == 1);
  check_against_scan(wt, s, 4);
}

TEST_CASE("node bit counts match child lengths") {
  // Level 1 holds the left node (1s and 2s) then the right node (3s and 4s).
  const Seq s = {3, 4, 2, 1, 1, 2, 2, 4, 3};
  const WaveletTree wt(s, 4);
  const std::size_t zeros = wt.level(0).count(false);
  CHECK(zeros == 5);
  CHECK(wt.level(1).to_string().substr(0, zeros) == "10011");
  CHECK(wt.level(1).to_string().substr(zeros) == "0110");
}

TEST_CASE("degenerate shapes") {
  const WaveletTree empty(Seq{}, 1);
  CHECK(empty.size() == 0);
  CHECK(empty.payload_bits() == 0);

  const WaveletTree unary(Seq{1, 1, 1, 1}, 1);
  CHECK(unary.height() == 0);
  CHECK(unary.payload_bits() == 0);
  CHECK(unary.rank(1, 3) == 3);
  CHECK(unary.select(1, 4) == 4);
  CHECK(unary.access(2) == 1);

  const WaveletTree one(Seq{2}, 4);
  CHECK(one.select(2, 1) == 1);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(WaveletTree(Seq{1, 5}, 4), std::out_of_range);
  CHECK_THROWS_AS(WaveletTree(Seq{0}, 4), std::out_of_range);
  CHECK_THROWS_AS(WaveletTree(Seq{}, 0), std::invalid_argument);
  const WaveletTree wt(Seq{1, 2, 3}, 3);
  CHECK_THROWS_AS(wt.access(0), std::out_of_range);
  CHECK_THROWS_AS(wt.access(4), std::out_of_range);
  CHECK_THROWS_AS(wt.rank(1, 4), std::out_of_range);
  CHECK_THROWS_AS(wt.select(4, 1), std::out_of_range);
}

TEST_CASE("payload is n * ceil(log2 sigma)") {
  std::mt19937_64 rng(1);
  for (WaveletTree::Symbol sigma : {1u, 2u, 3u, 5u, 8u, 13u, 100u, 1024u}) {
    Seq s(777);
    std::uniform_int_distribution<WaveletTree::Symbol> d(1, sigma);
    for (auto& x : s) x = d(rng);
    const WaveletTree wt(s, sigma);
    CHECK(wt.height() == WaveletTree::height_for(sigma));
    CHECK(wt.payload_bits() == s.size() * WaveletTree::height_for(sigma));
  }
}

TEST_CASE("random sequences agree with a linear scan") {
  std::mt19937_64 rng(2);
  for (WaveletTree::Symbol sigma : {1u, 2u, 3u, 6u, 7u, 16u, 33u}) {
    for (std::size_t n : {1u, 50u, 600u}) {
      Seq s(n);
      std::uniform_int_distribution<WaveletTree::Symbol> d(1, sigma);
      for (auto& x : s) x = d(rng);
      check_against_scan(WaveletTree(s, sigma), s, sigma);
    }
  }
}

TEST_CASE("large random sequence, sampled queries") {
  std::mt19937_64 rng(9);
  const WaveletTree::Symbol sigma = 1000;
  Seq s(100000);
  std::uniform_int_distribution<WaveletTree::Symbol> d(1, sigma);
  for (auto& x : s) x = d(rng);
  const WaveletTree wt(s, sigma);

  // Prefix counts per symbol give the rank and select oracle.
  std::vector<std::vector<std::size_t>> where(sigma + 1);
  for (std::size_t p = 0; p < s.size(); ++p) where[s[p]].push_back(p + 1);
  bool ok = true;
  for (std::size_t i = 1; i <= s.size(); ++i) ok &= wt.access(i) == s[i - 1];
  for (int q = 0; q < 20000; ++q) {
    const WaveletTree::Symbol c = d(rng);
    const std::size_t i = rng() % (s.size() + 1);
    const auto& w = where[c];
    ok &= wt.rank(c, i) == std::size_t(std::upper_bound(w.begin(), w.end(), i) - w.begin());
    if (!w.empty()) {
      const std::size_t j = 1 + rng() % w.size();
      ok &= wt.select(c, j) == w[j - 1];
    }
  }
  CHECK(ok);
}

TEST_CASE("rebuild from concatenated levels") {
  std::mt19937_64 rng(4);
  for (WaveletTree::Symbol sigma : {1u, 3u, 4u, 9u}) {
    Seq s(300);
    std::uniform_int_distribution<WaveletTree::Symbol> d(1, sigma);
    for (auto& x : s) x = d(rng);
    const WaveletTree wt(s, sigma);
    const WaveletTree back = WaveletTree::from_levels(sigma, s.size(), wt.concatenated_levels());
    for (std::size_t i = 1; i <= s.size(); ++i) CHECK(back.access(i) == s[i - 1]);
  }
}
