#include <algorithm>

#include "dfatest/generate.hpp"
#include "tracker.hpp"

namespace dfatest {

namespace {

constexpr std::size_t kExhaustiveLimit = 10;

struct Choice {
  std::vector<StateId> subset;
  Word word;
};

bool better(const Dfa& dfa, const Choice& a, const std::optional<Choice>& b) {
  if (!b) return true;
  return shortlex_less(dfa, a.word, b->word);
}

// Largest subset of `pool` that synchronizes into a final state without
// taking `forbidden`; ties go to the shortest, then least word, then to the
// first subset in canonical order.
std::optional<Choice> largest_syncing_subset(const Dfa& dfa, const std::vector<StateId>& pool, Edge forbidden) {
  if (pool.size() > kExhaustiveLimit) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const StateId seed[1] = {pool[i]};
      auto w = sync_set_to_accepting(dfa, seed, forbidden);
      if (!w) continue;
      Choice c{{pool[i]}, *w};
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        auto grown = c.subset;
        grown.push_back(pool[j]);
        if (auto gw = sync_set_to_accepting(dfa, grown, forbidden)) c = {std::move(grown), *gw};
      }
      return c;
    }
    return std::nullopt;
  }
  const std::size_t n = pool.size();
  for (std::size_t k = n; k >= 1; --k) {
    std::optional<Choice> best;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<StateId> subset;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) subset.push_back(pool[i]);
      if (auto w = sync_set_to_accepting(dfa, subset, forbidden)) {
        Choice c{std::move(subset), *w};
        if (better(dfa, c, best)) best = std::move(c);
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (best) return best;
  }
  return std::nullopt;
}

// First occurrence of each edge of `p` still in `uncovered`, in path order.
std::vector<std::size_t> fresh_positions(const Dfa& dfa, const Path& p, const EdgeSet& uncovered) {
  std::vector<std::size_t> out;
  EdgeSet seen(dfa.num_edges());
  const auto edges = p.edges(dfa);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto idx = dfa.edge_index(edges[i]);
    if (!uncovered[idx] || seen[idx]) continue;
    seen.set(idx);
    out.push_back(i);
  }
  return out;
}

}  // namespace

TestSuite generate_roman(const Dfa& dfa, const RomanOptions& options) {
  detail::require_minimal(dfa);
  detail::Tracker tracker(dfa);
  EdgeSet uncovered = all_edges(dfa);

  std::optional<Path> forced;
  if (options.first_path) {
    forced = make_path(dfa, dfa.initial(), *options.first_path);
    if (!dfa.is_final(forced->end()))
      throw Error(ErrorKind::Infeasible, "first path '" + render_word(*options.first_path) + "' is not accepted");
  }

  while (true) {
    auto p = forced ? std::move(forced) : find_covering_path(dfa, uncovered, true);
    forced.reset();
    if (!p) break;
    const auto edges = p->edges(dfa);
    for (std::size_t i : fresh_positions(dfa, *p, uncovered)) {
      const Word u = p->word.substr(0, i);
      const Word ua = p->word.substr(0, i + 1);
      for (const auto& f : faults_on_edge(dfa, edges[i])) {
        if (kills(dfa, f, p->word)) {
          tracker.add(p->word, Phase::accept_path, u);
          continue;
        }
        const StateId mutant = mutant_delta_star(dfa, f, dfa.initial(), ua);
        if (auto w = shortest_continuation(dfa, f, p->states[i + 1], mutant, Disagreement::any))
          tracker.add(ua + *w, Phase::accept_path, u);
      }
    }
    for (const Edge& e : edges) uncovered.reset(dfa.edge_index(e));
  }

  while (auto p = find_covering_path(dfa, uncovered, false)) {
    const auto edges = p->edges(dfa);
    for (std::size_t i : fresh_positions(dfa, *p, uncovered)) {
      const Edge e = edges[i];
      const Word u = p->word.substr(0, i);
      const Word ua = p->word.substr(0, i + 1);
      std::vector<StateId> pool;
      for (StateId q = 0; q < dfa.num_states(); ++q)
        if (q != dfa.next(e.state, e.letter)) pool.push_back(q);
      while (!pool.empty()) {
        auto choice = largest_syncing_subset(dfa, pool, e);
        if (!choice) break;
        tracker.add(ua + choice->word, Phase::reject_path, u);
        std::erase_if(pool, [&](StateId q) {
          return std::find(choice->subset.begin(), choice->subset.end(), q) != choice->subset.end();
        });
      }
    }
    for (const Edge& e : edges) uncovered.reset(dfa.edge_index(e));
  }

  tracker.complete();
  return tracker.take();
}

}  // namespace dfatest
