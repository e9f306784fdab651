#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "slpz/slp.hpp"

namespace slpz::test {

inline std::vector<std::uint8_t> random_terminals(std::mt19937_64& rng, SymbolId sigma) {
  std::vector<std::uint8_t> all(256);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(sigma);
  return all;
}

// Rule k draws both children from [1, k - 1], start is the last symbol.
inline Slp random_ordered_slp(std::mt19937_64& rng, SymbolId sigma, std::size_t rules) {
  Slp g;
  g.terminals = random_terminals(rng, sigma);
  for (std::size_t t = 0; t < rules; ++t) {
    const SymbolId k = sigma + 1 + static_cast<SymbolId>(t);
    std::uniform_int_distribution<SymbolId> pick(1, k - 1);
    g.rules.push_back({pick(rng), pick(rng)});
  }
  g.start = g.num_symbols();
  return g;
}

// Random variable permutation, terminals fixed.
inline std::vector<SymbolId> random_perm(std::mt19937_64& rng, const Slp& g) {
  std::vector<SymbolId> perm(g.num_symbols() + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + g.sigma() + 1, perm.end(), rng);
  return perm;
}

// Acyclic but usually not index ordered.
inline Slp random_slp(std::mt19937_64& rng, SymbolId sigma, std::size_t rules) {
  const Slp g = random_ordered_slp(rng, sigma, rules);
  return rename(g, random_perm(rng, g));
}

inline std::string random_text(std::mt19937_64& rng, std::size_t len, int alphabet) {
  std::uniform_int_distribution<int> d(0, alphabet - 1);
  std::string s(len, '\0');
  for (auto& c : s) c = static_cast<char>('a' + d(rng));
  return s;
}

// Oracle for rank/select on a 0/1 vector, 1-based positions.
struct ScanOracle {
  std::vector<bool> bits;
  std::size_t rank(bool c, std::size_t i) const {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(i), c));
  }
  std::size_t select(bool c, std::size_t j) const {
    for (std::size_t p = 0; p < bits.size(); ++p)
      if (bits[p] == c && --j == 0) return p + 1;
    return 0;
  }
};

}  // namespace slpz::test
