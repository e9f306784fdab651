#include <doctest.h>

#include <map>
#include <random>

#include "slpz/naming_index.hpp"
#include "slpz/wavelet_tree.hpp"

using namespace slpz;

TEST_CASE("digram codes") {
  CHECK(digram_code(1, 1, 4) == 1);
  CHECK(digram_code(4, 4, 4) == 16);
  CHECK(digram_code(2, 3, 4) == 7);
  CHECK(digram_code(1, 4, 4) < digram_code(2, 1, 4));
  CHECK_THROWS_AS(digram_code(5, 1, 4), std::out_of_range);
  CHECK_THROWS_AS(digram_code(0, 1, 4), std::out_of_range);
}

TEST_CASE("first names") {
  NamingIndex empty(2, 8);
  CHECK_FALSE(empty.lookup(1, 2).has_value());
  CHECK(empty.size() == 0);

  NamingIndex h(2, 8);
  CHECK(h.insert(1, 1) == 3);
  CHECK(h.lookup(1, 1) == 3);

  NamingIndex g(2, 8);
  CHECK(g.insert(1, 2) == 3);
  CHECK(g.insert(2, 1) == 4);
  CHECK(g.lookup(1, 2) == 3);
  CHECK(g.lookup(2, 1) == 4);
  CHECK_FALSE(g.lookup(1, 1).has_value());
  CHECK(g.digram_at(2) == Rule{2, 1});
}

TEST_CASE("lookup_or_insert") {
  NamingIndex h(3, 16);
  CHECK(h.lookup_or_insert(2, 3) == std::pair<SymbolId, bool>{4, true});
  CHECK(h.lookup_or_insert(2, 3) == std::pair<SymbolId, bool>{4, false});
  CHECK(h.lookup_or_insert(4, 4) == std::pair<SymbolId, bool>{5, true});
  CHECK(h.lookup_or_insert(2, 3) == std::pair<SymbolId, bool>{4, false});
}

TEST_CASE("rejections") {
  NamingIndex h(2, 4);
  h.insert(1, 2);
  CHECK_THROWS_AS(h.insert(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(h.lookup(1, 4), std::out_of_range);
  CHECK_THROWS_AS(h.insert(0, 1), std::out_of_range);
  CHECK_THROWS_AS(NamingIndex(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(NamingIndex(1, 0), std::invalid_argument);
}

TEST_CASE("capacity doubles on demand") {
  NamingIndex h(2, 2);
  SymbolId last = 0;
  for (SymbolId t = 0; t < 20; ++t) last = h.insert(t + 2, 1);
  CHECK(last == 22);
  CHECK(h.capacity() >= 22);
  CHECK(h.capacity() == 32);
  for (SymbolId t = 0; t < 20; ++t) CHECK(h.lookup(t + 2, 1) == t + 3);
  CHECK_FALSE(h.lookup(1, 1).has_value());
}

TEST_CASE("random script against a map") {
  std::mt19937_64 rng(12);
  for (SymbolId sigma : {1u, 2u, 26u, 256u}) {
    NamingIndex h(sigma, sigma + 64);
    std::map<std::pair<SymbolId, SymbolId>, SymbolId> oracle;
    SymbolId next = sigma + 1;
    for (int op = 0; op < 4000; ++op) {
      const SymbolId count = static_cast<SymbolId>(h.symbol_count());
      // Biased towards small ids so that repeats happen.
      auto pick = [&] { return static_cast<SymbolId>(1 + rng() % std::min<SymbolId>(count, 8 + rng() % 64)); };
      const SymbolId x = pick(), y = pick();
      const auto it = oracle.find({x, y});
      NamingTrace trace;
      switch (rng() % 3) {
        case 0: {
          const auto got = h.lookup(x, y, &trace);
          if (it == oracle.end()) CHECK_FALSE(got.has_value());
          else CHECK(got == it->second);
          break;
        }
        case 1:
          if (it == oracle.end()) {
            CHECK(h.insert(x, y, &trace) == next);
            oracle[{x, y}] = next++;
          } else {
            CHECK_THROWS_AS(h.insert(x, y), std::invalid_argument);
          }
          break;
        default: {
          const auto [id, fresh] = h.lookup_or_insert(x, y, &trace);
          CHECK(fresh == (it == oracle.end()));
          if (fresh) oracle[{x, y}] = next++;
          CHECK(id == oracle.at({x, y}));
        }
      }
      CHECK(trace.nodes_visited <= h.height());
      CHECK(h.height() <= 2 * WaveletTree::height_for(h.capacity()));
    }
    CHECK(h.size() == oracle.size());
  }
}

TEST_CASE("static rebuild answers identically") {
  std::mt19937_64 rng(13);
  const SymbolId sigma = 5;
  NamingIndex h(sigma, 64);
  std::vector<WaveletTree::Symbol> codes;
  for (int op = 0; op < 500; ++op) {
    const SymbolId c = static_cast<SymbolId>(h.symbol_count());
    const SymbolId x = 1 + rng() % c, y = 1 + rng() % c;
    const auto [id, fresh] = h.lookup_or_insert(x, y);
    if (!fresh) continue;
    codes.push_back(digram_code(x, y, h.capacity()));
    (void)id;
    if (codes.size() % 50 != 0) continue;
    // Recompute codes if the capacity grew in between.
    std::vector<WaveletTree::Symbol> now;
    for (std::size_t t = 1; t <= h.size(); ++t) {
      const Rule r = h.digram_at(t);
      now.push_back(digram_code(r.left, r.right, h.capacity()));
      CHECK(h.code_at(t) == now.back());
    }
    const WaveletTree wt(now, h.capacity() * h.capacity());
    for (std::size_t t = 1; t <= h.size(); ++t) {
      const Rule r = h.digram_at(t);
      const auto code = digram_code(r.left, r.right, h.capacity());
      CHECK(h.lookup(r.left, r.right) == sigma + wt.select(code, 1));
      CHECK(wt.rank(code, wt.size()) == 1);
    }
  }
}

TEST_CASE("space stays near 2m ceil(log2 N)") {
  std::mt19937_64 rng(14);
  NamingIndex h(256, 1 << 16);
  while (h.size() < 20000) {
    const SymbolId c = static_cast<SymbolId>(h.symbol_count());
    h.lookup_or_insert(1 + rng() % c, 1 + rng() % c);
  }
  const NamingSpace s = h.space();
  const std::size_t bound = 2 * h.size() * WaveletTree::height_for(h.capacity());
  CHECK(s.payload_bits <= bound);
  CHECK(s.stored_bits() <= bound * 5 / 4);
  CHECK(s.node_count > 0);
}
