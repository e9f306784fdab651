#include "slpz/canonical.hpp"

#include <stdexcept>

namespace slpz {

SlpDag to_dag(const Slp& g) {
  const SymbolId n = g.num_symbols();
  SlpDag dag;
  dag.left_edge.assign(n + 1, kSuperSink);
  dag.right_edge.assign(n + 1, kSuperSink);
  for (SymbolId x = g.sigma() + 1; x <= n; ++x) {
    dag.left_edge[x] = g.rule(x).left;
    dag.right_edge[x] = g.rule(x).right;
  }
  return dag;
}

bool is_in_branching_tree(std::span<const SymbolId> out_edge) {
  if (out_edge.empty()) return false;
  const std::size_t n = out_edge.size() - 1;
  // 0 = unknown, 1 = on current walk, 2 = reaches the sink
  std::vector<std::uint8_t> state(n + 1, 0);
  state[kSuperSink] = 2;
  std::vector<SymbolId> walk;
  for (std::size_t start = 1; start <= n; ++start) {
    SymbolId x = static_cast<SymbolId>(start);
    while (state[x] == 0) {
      state[x] = 1;
      walk.push_back(x);
      if (out_edge[x] > n) return false;
      x = out_edge[x];
    }
    if (state[x] == 1) return false;
    for (SymbolId y : walk) state[y] = 2;
    walk.clear();
  }
  return true;
}

CanonicalSlp bfs_rename(const Slp& g) {
  const SymbolId sigma = g.sigma();
  const SymbolId n = g.num_symbols();

  // Children of each node in the left tree, bucketed in increasing old id.
  std::vector<SymbolId> head(n + 2, 0);
  for (const Rule& r : g.rules) {
    if (r.left == 0 || r.left > n) throw std::invalid_argument("bfs_rename: dangling left child");
    ++head[r.left + 1];
  }
  for (SymbolId v = 1; v <= n + 1; ++v) head[v] += head[v - 1];
  std::vector<SymbolId> children(g.rules.size());
  {
    auto fill = head;
    for (SymbolId x = sigma + 1; x <= n; ++x) children[fill[g.rule(x).left]++] = x;
  }

  CanonicalSlp out;
  Renaming& ren = out.renaming;
  ren.new_id.assign(n + 1, 0);
  ren.old_id.assign(n + 1, 0);
  std::vector<SymbolId> queue;
  queue.reserve(n);
  for (SymbolId t = 1; t <= sigma; ++t) {
    ren.new_id[t] = ren.old_id[t] = t;
    queue.push_back(t);
  }
  SymbolId next = sigma + 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const SymbolId v = queue[qi];
    for (SymbolId c = head[v]; c < head[v + 1]; ++c) {
      const SymbolId x = children[c];
      ren.new_id[x] = next;
      ren.old_id[next] = x;
      ++next;
      queue.push_back(x);
    }
  }
  if (next != n + 1) throw std::invalid_argument("bfs_rename: left tree does not span every variable (cycle?)");

  out.grammar = rename(g, ren.new_id);
  return out;
}

bool has_monotone_lefts(const Slp& g) {
  for (std::size_t k = 1; k < g.rules.size(); ++k)
    if (g.rules[k].left < g.rules[k - 1].left) return false;
  return true;
}

}  // namespace slpz
