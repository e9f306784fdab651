#pragma once

#include <span>
#include <vector>

#include "slpz/slp.hpp"

namespace slpz {

/// Id of the super-sink added below every terminal.
inline constexpr SymbolId kSuperSink = 0;

/*
    The grammar as a DAG with a super-sink. Every symbol has exactly one
    left edge and one right edge: a variable points at its children, a
    terminal points both edges at the super-sink. Edges indexed by symbol
    id; entry 0 (the sink) is unused.
*/
struct SlpDag {
  std::vector<SymbolId> left_edge;
  std::vector<SymbolId> right_edge;

  SymbolId num_symbols() const noexcept { return static_cast<SymbolId>(left_edge.size()) - 1; }
};

SlpDag to_dag(const Slp& g);

/// True if out-edges (one per node 1..n, entry 0 ignored) form a tree rooted at the sink.
bool is_in_branching_tree(std::span<const SymbolId> out_edge);

/// new_id[old] and old_id[new]; both identity on terminals, entry 0 unused.
struct Renaming {
  std::vector<SymbolId> new_id;
  std::vector<SymbolId> old_id;
};

struct CanonicalSlp {
  Slp grammar;
  Renaming renaming;
};

/*
    Renames variables in breadth-first order of the left tree so that the
    left children of sigma+1..n form a non-decreasing sequence.

    The traversal starts at the super-sink; its children are the terminals
    in id order. Children of one node are visited in increasing old id.
*/
CanonicalSlp bfs_rename(const Slp& g);

/// left(sigma + 1) <= left(sigma + 2) <= ... <= left(n).
bool has_monotone_lefts(const Slp& g);

}  // namespace slpz
