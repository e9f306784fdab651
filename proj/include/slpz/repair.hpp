#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "slpz/slp.hpp"

namespace slpz {

struct Chain {
  std::vector<Rule> rules;
  SymbolId start = 0;
};

/// Folds seq left to right into pair rules numbered from first_id:
/// [x, y, z] -> first_id: x y, first_id + 1: first_id z.
Chain finalize_chain(std::span<const SymbolId> seq, SymbolId first_id);

/*
    Re-Pair style grammar construction. While some digram occurs at least
    twice (non-overlapping, counted greedily left to right), the most
    frequent one is replaced by a fresh variable; ties go to the smaller
    (left, right) pair. Fresh names come from a NamingIndex. The residual
    sequence is folded with finalize_chain.

    Terminals are the distinct bytes of text, numbered by byte value. The
    result is index ordered. Throws std::invalid_argument on empty input.
*/
Slp build_slp(std::string_view text);

}  // namespace slpz
