#include <algorithm>
#include <deque>
#include <map>

#include "dfatest/fault.hpp"
#include "dfatest/generate.hpp"

namespace dfatest {

namespace {

constexpr std::size_t kTupleBudget = 100000;

// Shortest word from the spec state and each mutant state after which the
// spec has finality `want_accept` and every mutant the opposite one.
std::optional<Word> tuple_search(const Dfa& dfa, StateId spec, const std::vector<TransitionFault>& faults,
                                 const std::vector<StateId>& mutants, bool want_accept) {
  struct Node {
    std::vector<StateId> key;  // spec state first
    std::int64_t parent;
    LetterId via;
  };
  auto goal = [&](const std::vector<StateId>& key) {
    if (dfa.is_final(key[0]) != want_accept) return false;
    for (std::size_t i = 1; i < key.size(); ++i)
      if (dfa.is_final(key[i]) == want_accept) return false;
    return true;
  };
  std::vector<Node> nodes;
  std::map<std::vector<StateId>, std::size_t> seen;
  std::vector<StateId> start{spec};
  start.insert(start.end(), mutants.begin(), mutants.end());
  seen.emplace(start, 0);
  nodes.push_back({std::move(start), -1, 0});
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (goal(nodes[head].key)) {
      Word w;
      for (std::int64_t s = static_cast<std::int64_t>(head); nodes[s].parent >= 0; s = nodes[s].parent)
        w.push_back(dfa.letter(nodes[s].via));
      std::reverse(w.begin(), w.end());
      return w;
    }
    if (nodes.size() > kTupleBudget) return std::nullopt;
    for (LetterId a = 0; a < dfa.num_letters(); ++a) {
      const auto& cur = nodes[head].key;
      std::vector<StateId> next(cur.size());
      next[0] = dfa.next(cur[0], a);
      for (std::size_t i = 1; i < cur.size(); ++i) next[i] = mutant_next(dfa, faults[i - 1], cur[i], a);
      if (seen.count(next)) continue;
      seen.emplace(next, nodes.size());
      nodes.push_back({std::move(next), static_cast<std::int64_t>(head), a});
    }
  }
  return std::nullopt;
}

}  // namespace

namespace detail {

OptionCoverResult option_cover_oriented(const Dfa& dfa, std::string_view u, LetterId a,
                                        std::span<const StateId> targets, bool want_accept) {
  OptionCoverResult result;
  if (targets.empty()) return result;
  const StateId r = delta_star(dfa, dfa.initial(), u);
  const Word prefix = Word(u) + dfa.letter(a);
  const StateId spec = dfa.next(r, a);
  const Disagreement want = want_accept ? Disagreement::spec_accepts : Disagreement::spec_rejects;

  std::vector<TransitionFault> faults;
  std::vector<StateId> mutants;
  for (StateId q : targets) {
    faults.push_back({r, a, q});
    mutants.push_back(mutant_delta_star(dfa, faults.back(), dfa.initial(), prefix));
  }

  if (targets.size() == 1) {
    if (auto w = shortest_continuation(dfa, faults[0], spec, mutants[0], want))
      result.words.push_back(prefix + *w);
    else
      result.uncovered.push_back(targets[0]);
    return result;
  }

  // All mutants behave like the spec as long as the edge (r, a) is avoided,
  // so merging their states against the spec run kills every one of them.
  if (auto w = sync_against_witness(dfa, mutants, Edge{r, a}, !want_accept, spec)) {
    result.words.push_back(prefix + *w);
    return result;
  }

  std::vector<bool> done(targets.size(), false);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> block{i};
    std::vector<TransitionFault> block_faults{faults[i]};
    std::vector<StateId> block_states{mutants[i]};
    auto word = tuple_search(dfa, spec, block_faults, block_states, want_accept);
    if (!word) {
      result.uncovered.push_back(targets[i]);
      done[i] = true;
      continue;
    }
    for (std::size_t j = i + 1; j < targets.size(); ++j) {
      if (done[j]) continue;
      block_faults.push_back(faults[j]);
      block_states.push_back(mutants[j]);
      if (auto w = tuple_search(dfa, spec, block_faults, block_states, want_accept)) {
        block.push_back(j);
        word = std::move(w);
      } else {
        block_faults.pop_back();
        block_states.pop_back();
      }
    }
    for (std::size_t j : block) done[j] = true;
    result.words.push_back(prefix + *word);
  }
  return result;
}

}  // namespace detail

std::vector<Word> option_cover(const Dfa& dfa, std::string_view u, LetterId a,
                               std::span<const StateId> residual_targets, bool want_accept) {
  auto first = detail::option_cover_oriented(dfa, u, a, residual_targets, want_accept);
  auto words = std::move(first.words);
  if (!first.uncovered.empty()) {
    auto second = detail::option_cover_oriented(dfa, u, a, first.uncovered, !want_accept);
    words.insert(words.end(), second.words.begin(), second.words.end());
  }
  return words;
}

}  // namespace dfatest
