#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <unordered_set>

#include "dfatest/fault.hpp"
#include "dfatest/generate.hpp"

namespace dfatest {

namespace {

constexpr std::size_t kNodeBudget = 200000;
constexpr std::size_t kEnumerationCap = 2000;
constexpr std::size_t kEnumerationSteps = 200000;

// Distance from each state to the nearest state with the wanted finality.
std::vector<std::size_t> distance_to_end(const Dfa& dfa, bool end_in_final) {
  constexpr auto inf = std::numeric_limits<std::size_t>::max();
  const std::size_t n = dfa.num_states();
  std::vector<std::vector<StateId>> preds(n);
  for (StateId q = 0; q < n; ++q)
    for (LetterId a = 0; a < dfa.num_letters(); ++a) preds[dfa.next(q, a)].push_back(q);
  std::vector<std::size_t> dist(n, inf);
  std::deque<StateId> queue;
  for (StateId q = 0; q < n; ++q)
    if (dfa.is_final(q) == end_in_final) {
      dist[q] = 0;
      queue.push_back(q);
    }
  while (!queue.empty()) {
    const StateId q = queue.front();
    queue.pop_front();
    for (StateId p : preds[q])
      if (dist[p] == inf) {
        dist[p] = dist[q] + 1;
        queue.push_back(p);
      }
  }
  return dist;
}

struct Best {
  int covered = 0;
  std::size_t length = 0;
  Word word;
};

// Exact search over (state, covered subset). Nodes of one BFS layer are
// discovered in lexicographic order of their words, so the first discovery of
// a node carries the least shortest word reaching it.
std::optional<Best> exact_search(const Dfa& dfa, const std::vector<std::int32_t>& bit_of, bool end_in_final,
                                 const std::vector<std::size_t>& dist, std::size_t max_len) {
  struct Node {
    StateId state;
    std::uint64_t mask;
    std::int64_t parent;
    LetterId via;
    std::uint32_t depth;
  };
  constexpr auto inf = std::numeric_limits<std::size_t>::max();
  std::vector<Node> nodes;
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, StateId>& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
    }
  };
  std::unordered_set<std::pair<std::uint64_t, StateId>, KeyHash> seen;
  auto lookup = [&](StateId s, std::uint64_t mask) { return !seen.emplace(mask, s).second; };
  const StateId q0 = dfa.initial();
  if (dist[q0] == inf) return Best{};
  lookup(q0, 0);
  nodes.push_back({q0, 0, -1, 0, 0});
  std::int64_t best_node = -1;
  int best_covered = -1;
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const Node cur = nodes[head];
    if (dfa.is_final(cur.state) == end_in_final) {
      const int c = std::popcount(cur.mask);
      // Depth is nondecreasing, so only a strictly larger count can win.
      if (c > best_covered) {
        best_covered = c;
        best_node = static_cast<std::int64_t>(head);
      }
    }
    if (cur.depth >= max_len) continue;
    for (LetterId a = 0; a < dfa.num_letters(); ++a) {
      const StateId t = dfa.next(cur.state, a);
      if (dist[t] == inf || cur.depth + 1 + dist[t] > max_len) continue;
      std::uint64_t mask = cur.mask;
      const auto bit = bit_of[dfa.edge_index({cur.state, a})];
      if (bit >= 0) mask |= std::uint64_t{1} << bit;
      if (lookup(t, mask)) continue;
      nodes.push_back({t, mask, static_cast<std::int64_t>(head), a, cur.depth + 1});
      if (nodes.size() > kNodeBudget) return std::nullopt;
    }
  }
  Best best;
  best.covered = best_covered < 0 ? 0 : best_covered;
  if (best_node < 0) return best;
  for (std::int64_t s = best_node; nodes[s].parent >= 0; s = nodes[s].parent)
    best.word.push_back(dfa.letter(nodes[s].via));
  std::reverse(best.word.begin(), best.word.end());
  best.length = best.word.size();
  return best;
}

// Shortest (then least) word from `from` to any state satisfying `goal`.
template <class Goal>
std::optional<Word> walk_to(const Dfa& dfa, StateId from, Goal goal) {
  const std::size_t n = dfa.num_states();
  std::vector<std::int64_t> parent(n, -2);
  std::vector<LetterId> via(n);
  parent[from] = -1;
  std::deque<StateId> queue{from};
  while (!queue.empty()) {
    const StateId q = queue.front();
    queue.pop_front();
    if (goal(q)) {
      Word w;
      for (std::int64_t s = q; parent[s] >= 0; s = parent[s]) w.push_back(dfa.letter(via[s]));
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (LetterId a = 0; a < dfa.num_letters(); ++a) {
      const StateId t = dfa.next(q, a);
      if (parent[t] != -2) continue;
      parent[t] = q;
      via[t] = a;
      queue.push_back(t);
    }
  }
  return std::nullopt;
}

// Fallback for large instances: repeatedly walk to the nearest uncovered edge
// whose target can still reach a legal end, then walk to the end.
Best greedy_search(const Dfa& dfa, EdgeSet uncovered, bool end_in_final, const std::vector<std::size_t>& dist,
                   std::size_t max_len) {
  constexpr auto inf = std::numeric_limits<std::size_t>::max();
  Best best;
  StateId q = dfa.initial();
  auto usable = [&](StateId s) {
    for (LetterId a = 0; a < dfa.num_letters(); ++a)
      if (uncovered[dfa.edge_index({s, a})] && dist[dfa.next(s, a)] != inf) return true;
    return false;
  };
  while (best.word.size() < max_len) {
    auto hop = walk_to(dfa, q, usable);
    if (!hop) break;
    for (char c : *hop) {
      const LetterId a = *dfa.letter_id(c);
      if (uncovered[dfa.edge_index({q, a})]) {
        uncovered.reset(dfa.edge_index({q, a}));
        ++best.covered;
      }
      q = dfa.next(q, a);
    }
    best.word += *hop;
    for (LetterId a = 0; a < dfa.num_letters(); ++a) {
      const auto e = dfa.edge_index({q, a});
      if (uncovered[e] && dist[dfa.next(q, a)] != inf) {
        uncovered.reset(e);
        ++best.covered;
        best.word.push_back(dfa.letter(a));
        q = dfa.next(q, a);
        break;
      }
    }
  }
  auto tail = walk_to(dfa, q, [&](StateId s) { return dfa.is_final(s) == end_in_final; });
  if (!tail) return {};
  for (char c : *tail) {
    const auto e = dfa.edge_index({q, *dfa.letter_id(c)});
    if (uncovered[e]) {
      uncovered.reset(e);
      ++best.covered;
    }
    q = dfa.next(q, *dfa.letter_id(c));
  }
  best.word += *tail;
  best.length = best.word.size();
  return best;
}

// All words of exactly `length` from the initial state that end legally and
// cover `target` edges, visited in lexicographic order until `visit` returns
// false or a cap is hit.
template <class Visit>
void enumerate_optimal(const Dfa& dfa, const std::vector<std::int32_t>& bit_of, bool end_in_final,
                       const std::vector<std::size_t>& dist, std::size_t length, int target, Visit visit) {
  Word word;
  std::size_t visited = 0;
  std::size_t steps = 0;
  auto rec = [&](auto& self, StateId q, std::uint64_t mask) -> bool {
    if (++steps > kEnumerationSteps) return false;
    const std::size_t remaining = length - word.size();
    if (std::popcount(mask) + static_cast<int>(remaining) < target) return true;
    if (remaining == 0) {
      if (dfa.is_final(q) == end_in_final && std::popcount(mask) == target) {
        if (!visit(word) || ++visited >= kEnumerationCap) return false;
      }
      return true;
    }
    for (LetterId a = 0; a < dfa.num_letters(); ++a) {
      const StateId t = dfa.next(q, a);
      if (dist[t] > remaining - 1) continue;
      std::uint64_t m = mask;
      const auto bit = bit_of[dfa.edge_index({q, a})];
      if (bit >= 0) m |= std::uint64_t{1} << bit;
      word.push_back(dfa.letter(a));
      const bool go_on = self(self, t, m);
      word.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  rec(rec, dfa.initial(), 0);
}

}  // namespace

std::size_t masked_fault_count(const Dfa& dfa, const Path& p) {
  auto edges = p.edges(dfa);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::size_t count = 0;
  for (const Edge& e : edges)
    for (const auto& f : faults_on_edge(dfa, e))
      if (is_masking(dfa, p, f) && !kills(dfa, f, p.word)) ++count;
  return count;
}

std::optional<Path> find_covering_path(const Dfa& dfa, const EdgeSet& uncovered, bool end_in_final,
                                       const SyncTable* sync) {
  const std::size_t max_len = 2 * dfa.num_states() * dfa.num_letters();
  const auto dist = distance_to_end(dfa, end_in_final);
  std::vector<std::int32_t> bit_of(dfa.num_edges(), -1);
  std::int32_t bits = 0;
  for (std::size_t e = uncovered.find_first(); e != EdgeSet::npos; e = uncovered.find_next(e)) bit_of[e] = bits++;
  if (bits == 0) return std::nullopt;

  std::optional<Best> best;
  if (bits <= 64) best = exact_search(dfa, bit_of, end_in_final, dist, max_len);
  const bool exact = best.has_value();
  if (!best) best = greedy_search(dfa, uncovered, end_in_final, dist, max_len);
  if (best->covered == 0) return std::nullopt;

  if (sync != nullptr && exact) {
    std::optional<std::size_t> fewest;
    Word chosen = best->word;
    enumerate_optimal(dfa, bit_of, end_in_final, dist, best->length, best->covered, [&](const Word& w) {
      const std::size_t masked = masked_fault_count(dfa, make_path(dfa, dfa.initial(), w));
      if (!fewest || masked < *fewest) {
        fewest = masked;
        chosen = w;
      }
      return masked > 0;
    });
    best->word = chosen;
  }
  return make_path(dfa, dfa.initial(), best->word);
}

}  // namespace dfatest
