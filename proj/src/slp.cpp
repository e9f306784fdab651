#include "slpz/slp.hpp"

#include <array>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace slpz {

namespace {

constexpr std::uint64_t kMaxLength = std::numeric_limits<std::int64_t>::max();
constexpr std::uint64_t kOverflow = std::numeric_limits<std::uint64_t>::max();

std::optional<std::string> check_references(const Slp& g) {
  if (g.sigma() == 0) return "empty alphabet";
  std::array<bool, 256> seen{};
  for (std::uint8_t t : g.terminals) {
    if (seen[t]) return "duplicate terminal byte " + std::to_string(t);
    seen[t] = true;
  }
  const SymbolId n = g.num_symbols();
  if (g.start == 0 || g.start > n) return "start symbol out of range";
  for (std::size_t k = 0; k < g.rules.size(); ++k) {
    const Rule& r = g.rules[k];
    if (r.left == 0 || r.left > n || r.right == 0 || r.right > n)
      return "dangling reference in rule " + std::to_string(g.sigma() + 1 + k);
  }
  return std::nullopt;
}

// Post-order DFS over variables; children before parents. Returns false on a cycle.
bool topo_sort(const Slp& g, std::vector<SymbolId>& order) {
  const SymbolId sigma = g.sigma();
  const SymbolId n = g.num_symbols();
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> color(n + 1, kWhite);
  order.clear();
  order.reserve(g.rules.size());
  struct Frame {
    SymbolId x;
    std::uint8_t next_child;
  };
  std::vector<Frame> stack;
  for (SymbolId root = sigma + 1; root <= n; ++root) {
    if (color[root] != kWhite) continue;
    stack.push_back({root, 0});
    color[root] = kGrey;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_child == 2) {
        color[f.x] = kBlack;
        order.push_back(f.x);
        stack.pop_back();
        continue;
      }
      const Rule& r = g.rule(f.x);
      const SymbolId child = f.next_child++ == 0 ? r.left : r.right;
      if (child <= sigma) continue;
      if (color[child] == kGrey) return false;
      if (color[child] == kWhite) {
        color[child] = kGrey;
        stack.push_back({child, 0});
      }
    }
  }
  return true;
}

}  // namespace

ValidationResult validate(const Slp& g) {
  ValidationResult result;
  if (auto err = check_references(g)) {
    result.error = std::move(err);
    return result;
  }
  std::vector<SymbolId> order;
  if (!topo_sort(g, order)) {
    result.error = "cycle detected";
    return result;
  }

  const SymbolId n = g.num_symbols();
  std::vector<bool> reached(n + 1, false);
  std::vector<SymbolId> stack{g.start};
  reached[g.start] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const SymbolId x = stack.back();
    stack.pop_back();
    if (g.is_terminal(x)) continue;
    for (SymbolId c : {g.rule(x).left, g.rule(x).right}) {
      if (!reached[c]) {
        reached[c] = true;
        ++count;
        stack.push_back(c);
      }
    }
  }
  result.unreachable = n - count;
  return result;
}

bool is_index_ordered(const Slp& g) {
  const SymbolId sigma = g.sigma();
  for (std::size_t k = 0; k < g.rules.size(); ++k) {
    const SymbolId id = sigma + 1 + static_cast<SymbolId>(k);
    if (g.rules[k].left >= id || g.rules[k].right >= id) return false;
  }
  return true;
}

std::vector<SymbolId> topological_order(const Slp& g) {
  if (auto err = check_references(g)) throw std::invalid_argument(*err);
  std::vector<SymbolId> order;
  if (!topo_sort(g, order)) throw std::invalid_argument("cycle detected");
  return order;
}

std::string expand(const Slp& g, SymbolId x) {
  if (x == 0 || x > g.num_symbols()) throw std::out_of_range("expand: symbol out of range");
  const std::uint64_t len = expansion_length(g, x);
  std::string out;
  out.reserve(len);
  std::vector<SymbolId> stack{x};
  while (!stack.empty()) {
    const SymbolId y = stack.back();
    stack.pop_back();
    if (g.is_terminal(y)) {
      out.push_back(static_cast<char>(g.terminals[y - 1]));
    } else {
      const Rule& r = g.rule(y);
      stack.push_back(r.right);
      stack.push_back(r.left);
    }
  }
  return out;
}

std::vector<std::uint64_t> expansion_lengths(const Slp& g) {
  const auto order = topological_order(g);
  std::vector<std::uint64_t> len(g.num_symbols() + 1, 0);
  for (SymbolId t = 1; t <= g.sigma(); ++t) len[t] = 1;
  for (SymbolId x : order) {
    const Rule& r = g.rule(x);
    const std::uint64_t a = len[r.left], b = len[r.right];
    len[x] = (a == kOverflow || b == kOverflow || a > kMaxLength - b) ? kOverflow : a + b;
  }
  return len;
}

std::uint64_t expansion_length(const Slp& g, SymbolId x) {
  if (x == 0 || x > g.num_symbols()) throw std::out_of_range("expansion_length: symbol out of range");
  if (g.is_terminal(x)) return 1;
  const std::uint64_t len = expansion_lengths(g)[x];
  if (len == kOverflow) throw std::overflow_error("expansion length exceeds 2^63 - 1");
  return len;
}

std::vector<SymbolId> plain_dictionary(const Slp& g) {
  std::vector<SymbolId> d(2 * static_cast<std::size_t>(g.num_symbols()), 0);
  for (std::size_t k = 0; k < g.rules.size(); ++k) {
    const std::size_t id = g.sigma() + 1 + k;
    d[2 * id - 2] = g.rules[k].left;
    d[2 * id - 1] = g.rules[k].right;
  }
  return d;
}

Slp rename(const Slp& g, const std::vector<SymbolId>& perm) {
  const SymbolId n = g.num_symbols();
  if (perm.size() != static_cast<std::size_t>(n) + 1) throw std::invalid_argument("rename: permutation has wrong size");
  for (SymbolId t = 1; t <= g.sigma(); ++t)
    if (perm[t] != t) throw std::invalid_argument("rename: terminals must stay fixed");
  Slp out;
  out.terminals = g.terminals;
  out.rules.assign(g.rules.size(), Rule{});
  std::vector<bool> hit(n + 1, false);
  for (std::size_t k = 0; k < g.rules.size(); ++k) {
    const SymbolId to = perm[g.sigma() + 1 + k];
    if (to <= g.sigma() || to > n || hit[to]) throw std::invalid_argument("rename: not a permutation of variables");
    hit[to] = true;
    out.rules[to - g.sigma() - 1] = Rule{perm.at(g.rules[k].left), perm.at(g.rules[k].right)};
  }
  out.start = perm.at(g.start);
  return out;
}

void write_text(const Slp& g, std::ostream& out) {
  out << "sigma " << g.sigma() << '\n' << "terminals";
  for (std::uint8_t t : g.terminals) out << ' ' << static_cast<unsigned>(t);
  out << '\n' << "start " << g.start << '\n';
  for (std::size_t k = 0; k < g.rules.size(); ++k)
    out << g.sigma() + 1 + k << " -> " << g.rules[k].left << ' ' << g.rules[k].right << '\n';
}

Slp read_text(std::istream& in) {
  auto fail = [](const std::string& what) { throw std::invalid_argument("slp text: " + what); };
  std::string word;
  std::size_t sigma = 0;
  if (!(in >> word >> sigma) || word != "sigma") fail("expected 'sigma N'");
  Slp g;
  if (!(in >> word) || word != "terminals") fail("expected 'terminals'");
  for (std::size_t i = 0; i < sigma; ++i) {
    unsigned t = 0;
    if (!(in >> t) || t > 255) fail("bad terminal byte");
    g.terminals.push_back(static_cast<std::uint8_t>(t));
  }
  if (!(in >> word >> g.start) || word != "start") fail("expected 'start X'");
  std::size_t id = 0;
  while (in >> id) {
    Rule r;
    if (!(in >> word >> r.left >> r.right) || word != "->") fail("expected 'k -> i j'");
    if (id != sigma + 1 + g.rules.size()) fail("rule ids must be consecutive");
    g.rules.push_back(r);
  }
  if (!in.eof()) fail("trailing garbage");
  return g;
}

}  // namespace slpz
