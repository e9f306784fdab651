#include <doctest.h>

#include <random>
#include <sstream>

#include "slpz/slp.hpp"
#include "support.hpp"

using namespace slpz;

TEST_CASE("validate") {
  const Slp aa{{'a'}, {{1, 1}}, 2};
  CHECK(validate(aa).ok());
  CHECK(expand(aa) == "aa");

  const Slp abab{{'a', 'b'}, {{1, 2}, {3, 3}}, 4};
  CHECK(validate(abab).ok());
  CHECK(expand(abab) == "abab");

  const Slp self{{'a', 'b'}, {{3, 1}}, 3};
  const auto r = validate(self);
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->find("cycle") != std::string::npos);

  CHECK_FALSE(validate(Slp{{'a'}, {{1, 3}}, 2}).ok());
  CHECK_FALSE(validate(Slp{{}, {}, 1}).ok());
  CHECK_FALSE(validate(Slp{{'a'}, {{1, 1}}, 3}).ok());
  CHECK_FALSE(validate(Slp{{'a', 'a'}, {{1, 2}}, 3}).ok());
  CHECK_FALSE(validate(Slp{{'a'}, {{3, 1}, {2, 1}}, 3}).ok());
}

TEST_CASE("unreachable symbols are a warning") {
  const Slp g{{'a', 'b'}, {{1, 1}, {1, 2}}, 3};
  const auto r = validate(g);
  CHECK(r.ok());
  CHECK(r.unreachable == 2);
}

TEST_CASE("expand and expansion_length") {
  const Slp g{{'a'}, {{1, 1}, {2, 2}}, 3};
  CHECK(expand(g, 3) == "aaaa");
  CHECK(expand(g, 1) == "a");
  CHECK(expansion_length(g, 1) == 1);
  CHECK(expansion_length(g, 3) == 4);

  Slp chain{{'a'}, {}, 1};
  for (SymbolId k = 2; k <= 41; ++k) chain.rules.push_back({k - 1, k - 1});
  chain.start = chain.num_symbols();
  CHECK(expansion_length(chain, chain.start) == (std::uint64_t{1} << 40));
  CHECK(expand(chain, 12).size() == 2048);

  Slp huge = chain;
  for (SymbolId k = 42; k <= 70; ++k) huge.rules.push_back({k - 1, k - 1});
  huge.start = huge.num_symbols();
  CHECK_THROWS_AS(expansion_length(huge, huge.start), std::overflow_error);
}

TEST_CASE("deep grammar expands without recursion") {
  // Right-leaning comb of depth 200000.
  Slp g{{'x', 'y'}, {}, 0};
  g.rules.push_back({1, 2});
  for (SymbolId k = 4; k <= 200002; ++k) g.rules.push_back({1, k - 1});
  g.start = g.num_symbols();
  REQUIRE(validate(g).ok());
  const std::string s = expand(g);
  CHECK(s.size() == 200001);
  CHECK(s.back() == 'y');
}

TEST_CASE("lengths equal expanded sizes on random grammars") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const Slp g = test::random_slp(rng, 1 + rng() % 5, 1 + rng() % 40);
    REQUIRE(validate(g).ok());
    const auto lens = expansion_lengths(g);
    for (SymbolId x = 1; x <= g.num_symbols(); ++x) {
      if (lens[x] > 100000) continue;
      CHECK(expand(g, x).size() == lens[x]);
      CHECK(expansion_length(g, x) == lens[x]);
    }
  }
}

TEST_CASE("plain dictionary") {
  const Slp g{{'a', 'b'}, {{1, 2}, {3, 3}}, 4};
  const std::vector<SymbolId> d = plain_dictionary(g);
  CHECK(d == std::vector<SymbolId>{0, 0, 0, 0, 1, 2, 3, 3});
}

TEST_CASE("renaming preserves the derived string") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Slp g = test::random_ordered_slp(rng, 1 + rng() % 4, 1 + rng() % 15);
    CHECK(is_index_ordered(g));
    const auto perm = test::random_perm(rng, g);
    const Slp h = rename(g, perm);
    CHECK(h.start == perm[g.start]);
    REQUIRE(validate(h).ok());
    CHECK(expand(h) == expand(g));
  }
  const Slp g{{'a'}, {{1, 1}}, 2};
  CHECK_THROWS_AS(rename(g, {0, 2, 1}), std::invalid_argument);
}

TEST_CASE("topological order puts children first") {
  std::mt19937_64 rng(3);
  const Slp g = test::random_slp(rng, 3, 200);
  const auto order = topological_order(g);
  CHECK(order.size() == g.num_rules());
  std::vector<bool> done(g.num_symbols() + 1, false);
  for (SymbolId x = 1; x <= g.sigma(); ++x) done[x] = true;
  for (SymbolId x : order) {
    CHECK(done[g.rule(x).left]);
    CHECK(done[g.rule(x).right]);
    done[x] = true;
  }
  CHECK_THROWS_AS(topological_order(Slp{{'a'}, {{3, 1}, {2, 1}}, 3}), std::invalid_argument);
}

TEST_CASE("text format round trip") {
  const Slp g{{'a', 'b'}, {{1, 2}, {3, 3}}, 4};
  std::stringstream ss;
  write_text(g, ss);
  CHECK(ss.str() == "sigma 2\nterminals 97 98\nstart 4\n3 -> 1 2\n4 -> 3 3\n");
  CHECK(read_text(ss) == g);

  std::mt19937_64 rng(4);
  const Slp r = test::random_slp(rng, 7, 60);
  std::stringstream rs;
  write_text(r, rs);
  CHECK(read_text(rs) == r);

  std::istringstream bad("sigma 1\nterminals 97\nstart 2\n3 -> 1 1\n");
  CHECK_THROWS(read_text(bad));
}
