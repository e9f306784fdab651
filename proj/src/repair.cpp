#include "slpz/repair.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "slpz/naming_index.hpp"

namespace slpz {

Chain finalize_chain(std::span<const SymbolId> seq, SymbolId first_id) {
  if (seq.empty()) throw std::invalid_argument("finalize_chain: empty sequence");
  Chain chain;
  chain.start = seq[0];
  for (std::size_t k = 1; k < seq.size(); ++k) {
    chain.rules.push_back(Rule{chain.start, seq[k]});
    chain.start = first_id + static_cast<SymbolId>(k - 1);
  }
  return chain;
}

namespace {

constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();

std::uint64_t pair_key(SymbolId a, SymbolId b) { return (std::uint64_t{a} << 32) | b; }

struct PairRecord {
  std::uint32_t count = 0;          // adjacent occurrences, overlaps included
  std::uint32_t queued = 0;         // priority of the one live heap entry
  bool settled = false;             // queued is the exact non-overlapping count
  std::vector<std::uint32_t> occ;   // candidate positions, possibly stale
};

struct HeapEntry {
  std::uint32_t count;
  std::uint64_t key;

  // Higher count first, then the smaller pair.
  friend bool operator<(const HeapEntry& x, const HeapEntry& y) {
    return x.count != y.count ? x.count < y.count : x.key > y.key;
  }
};

class PairReplacer {
 public:
  PairReplacer(std::vector<SymbolId> seq, SymbolId sigma, std::uint64_t capacity)
      : sym_(std::move(seq)), next_(sym_.size()), prev_(sym_.size()), naming_(sigma, capacity) {
    const auto n = static_cast<std::uint32_t>(sym_.size());
    for (std::uint32_t i = 0; i < n; ++i) {
      next_[i] = i + 1 < n ? i + 1 : kNil;
      prev_[i] = i > 0 ? i - 1 : kNil;
    }
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
      auto& rec = pairs_[pair_key(sym_[i], sym_[i + 1])];
      ++rec.count;
      rec.occ.push_back(i);
    }
    for (auto& [key, rec] : pairs_) requeue(rec, key);
  }

  void run() {
    while (!heap_.empty()) {
      const HeapEntry top = heap_.top();
      heap_.pop();
      if (top.count < 2) break;
      const auto it = pairs_.find(top.key);
      if (it == pairs_.end() || it->second.queued != top.count) continue;
      PairRecord& rec = it->second;
      const auto a = static_cast<SymbolId>(top.key >> 32);
      const auto b = static_cast<SymbolId>(top.key & 0xffffffffu);
      if (!rec.settled) {
        // The overlapping count is an upper bound; replace only at the exact count.
        const std::uint32_t exact = settle(rec, a, b);
        rec.settled = true;
        if (exact != top.count) {
          rec.queued = exact;
          if (exact >= 2) heap_.push({exact, top.key});
          continue;
        }
      }
      const auto [x, fresh] = naming_.lookup_or_insert(a, b);
      if (!fresh) throw std::logic_error("re-pair: digram named twice");
      rules_.push_back(Rule{a, b});
      replace(std::vector<std::uint32_t>(it->second.occ), a, b, x);
    }
  }

  std::vector<SymbolId> residual() const {
    std::vector<SymbolId> out;
    for (std::uint32_t i = 0; i != kNil; i = next_[i]) out.push_back(sym_[i]);
    return out;
  }

  std::vector<Rule>& rules() { return rules_; }

 private:
  bool valid(std::uint32_t i, SymbolId a, SymbolId b) const {
    return sym_[i] == a && next_[i] != kNil && sym_[next_[i]] == b;
  }

  // Drops stale candidates and returns the greedy non-overlapping count.
  std::uint32_t settle(PairRecord& rec, SymbolId a, SymbolId b) {
    auto& occ = rec.occ;
    std::sort(occ.begin(), occ.end());
    occ.erase(std::unique(occ.begin(), occ.end()), occ.end());
    std::erase_if(occ, [&](std::uint32_t i) { return !valid(i, a, b); });
    std::uint32_t count = 0;
    std::uint32_t last = kNil;
    for (std::uint32_t i : occ) {
      if (last != kNil && next_[last] == i) continue;
      ++count;
      last = i;
    }
    return count;
  }

  void requeue(PairRecord& rec, std::uint64_t key) {
    rec.settled = false;
    rec.queued = rec.count;
    if (rec.count >= 2) heap_.push({rec.count, key});
  }

  void add(std::uint32_t i) {
    const std::uint64_t key = pair_key(sym_[i], sym_[next_[i]]);
    auto& rec = pairs_[key];
    ++rec.count;
    rec.occ.push_back(i);
    requeue(rec, key);
  }

  void remove(std::uint32_t i) {
    const std::uint64_t key = pair_key(sym_[i], sym_[next_[i]]);
    const auto it = pairs_.find(key);
    if (--it->second.count == 0) pairs_.erase(it);
    else requeue(it->second, key);
  }

  void replace(const std::vector<std::uint32_t>& occ, SymbolId a, SymbolId b, SymbolId x) {
    for (std::uint32_t i : occ) {
      if (!valid(i, a, b)) continue;
      const std::uint32_t j = next_[i];
      const std::uint32_t p = prev_[i];
      const std::uint32_t q = next_[j];
      if (p != kNil) remove(p);
      remove(i);
      if (q != kNil) remove(j);
      sym_[i] = x;
      sym_[j] = 0;
      next_[i] = q;
      if (q != kNil) prev_[q] = i;
      if (p != kNil) add(p);
      if (q != kNil) add(i);
    }
  }

  std::vector<SymbolId> sym_;
  std::vector<std::uint32_t> next_, prev_;
  std::unordered_map<std::uint64_t, PairRecord> pairs_;
  std::priority_queue<HeapEntry> heap_;
  NamingIndex naming_;
  std::vector<Rule> rules_;
};

}  // namespace

Slp build_slp(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("build_slp: empty input");
  if (text.size() >= kNil) throw std::length_error("build_slp: input too long");

  std::array<SymbolId, 256> id{};
  Slp g;
  for (unsigned char c : text) id[c] = 1;
  for (unsigned v = 0; v < 256; ++v) {
    if (id[v]) {
      g.terminals.push_back(static_cast<std::uint8_t>(v));
      id[v] = g.sigma();
    }
  }
  std::vector<SymbolId> seq;
  seq.reserve(text.size());
  for (unsigned char c : text) seq.push_back(id[c]);

  const SymbolId sigma = g.sigma();
  PairReplacer replacer(std::move(seq), sigma, std::uint64_t{sigma} + text.size() - 1);
  replacer.run();
  g.rules = std::move(replacer.rules());

  const auto rest = replacer.residual();
  Chain chain = finalize_chain(rest, sigma + static_cast<SymbolId>(g.rules.size()) + 1);
  g.rules.insert(g.rules.end(), chain.rules.begin(), chain.rules.end());
  g.start = chain.start;
  return g;
}

}  // namespace slpz
