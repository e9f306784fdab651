#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace slpz {

/// Symbol ids are 1-based: 1..sigma are terminals, sigma+1..n are variables.
using SymbolId = std::uint32_t;

struct Rule {
  SymbolId left = 0;
  SymbolId right = 0;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/*
    Explicit straight-line program.

    terminals[i] is the byte derived by terminal i + 1; rules[k] is the pair
    rule of variable sigma + 1 + k. The rule graph only has to be acyclic:
    ids need not increase along edges (see is_index_ordered()).
*/
struct Slp {
  std::vector<std::uint8_t> terminals;
  std::vector<Rule> rules;
  SymbolId start = 0;

  SymbolId sigma() const noexcept { return static_cast<SymbolId>(terminals.size()); }
  SymbolId num_symbols() const noexcept { return sigma() + static_cast<SymbolId>(rules.size()); }
  std::size_t num_rules() const noexcept { return rules.size(); }
  bool is_terminal(SymbolId x) const noexcept { return x >= 1 && x <= sigma(); }

  /// Rule of variable x; x must be in [sigma + 1, n].
  const Rule& rule(SymbolId x) const { return rules.at(x - sigma() - 1); }

  friend bool operator==(const Slp&, const Slp&) = default;
};

struct ValidationResult {
  std::optional<std::string> error;
  /// Symbols not reachable from the start symbol (a warning, not an error).
  std::size_t unreachable = 0;

  bool ok() const noexcept { return !error.has_value(); }
};

/// Checks alphabet, references, start symbol and acyclicity.
ValidationResult validate(const Slp& g);

/// Every rule X_k -> X_i X_j satisfies i, j < k.
bool is_index_ordered(const Slp& g);

/// Variables in an order where every rule comes after both of its children.
/// Throws std::invalid_argument on a cycle or dangling reference.
std::vector<SymbolId> topological_order(const Slp& g);

/// The string derived from x. Requires a valid grammar.
std::string expand(const Slp& g, SymbolId x);
inline std::string expand(const Slp& g) { return expand(g, g.start); }

/// |expand(g, x)| without materializing it. Throws std::overflow_error past 2^63 - 1.
std::uint64_t expansion_length(const Slp& g, SymbolId x);

/// Expansion lengths of every symbol, indexed by id (entry 0 unused).
std::vector<std::uint64_t> expansion_lengths(const Slp& g);

/// D[1..2n] as a 0-based vector: D[2k-2], D[2k-1] are the children of k,
/// zeros for terminals.
std::vector<SymbolId> plain_dictionary(const Slp& g);

/// Renames symbols: new id of x is perm[x]. Terminals must map to themselves.
Slp rename(const Slp& g, const std::vector<SymbolId>& perm);

/*
    Debug text form:

        sigma 2
        terminals 97 98
        start 4
        3 -> 1 2
        4 -> 3 3
*/
void write_text(const Slp& g, std::ostream& out);
Slp read_text(std::istream& in);

}  // namespace slpz
