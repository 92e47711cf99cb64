#include "dfatest/sync.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "dfatest/error.hpp"

namespace dfatest {

PairAutomaton::PairAutomaton(const Dfa& dfa) : n_(dfa.num_states()), k_(dfa.num_letters()) {
  index_.assign(n_ * n_, 0);
  for (StateId x = 0; x < n_; ++x)
    for (StateId y = x; y < n_; ++y) {
      index_[x * n_ + y] = index_[y * n_ + x] = nodes_.size();
      nodes_.push_back({x, y});
    }
  step_.resize(nodes_.size() * k_);
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (LetterId a = 0; a < k_; ++a)
      step_[i * k_ + a] = index(dfa.next(nodes_[i].low, a), dfa.next(nodes_[i].high, a));
}

PairAutomaton build_pair_automaton(const Dfa& dfa) { return PairAutomaton(dfa); }

SyncTable::SyncTable(std::size_t num_states, std::vector<PairSync> entries)
    : n_(num_states), entries_(std::move(entries)), slot_(num_states * num_states, 0) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    slot_[e.first * n_ + e.second] = slot_[e.second * n_ + e.first] = i;
  }
}

const PairSync& SyncTable::at(StateId x, StateId y) const { return entries_[slot_[x * n_ + y]]; }

SyncTable pair_sync_table(const Dfa& dfa) {
  const PairAutomaton pa(dfa);
  const std::size_t n = dfa.num_states();
  std::vector<PairSync> entries;
  std::vector<std::int64_t> parent(pa.size());
  std::vector<LetterId> via(pa.size());

  for (StateId x = 0; x < n; ++x)
    for (StateId y = x + 1; y < n; ++y) {
      PairSync entry{x, y, std::nullopt, 0, std::nullopt, 0};
      std::fill(parent.begin(), parent.end(), -2);
      const std::size_t start = pa.index(x, y);
      parent[start] = -1;
      auto word_to = [&](std::size_t node) {
        Word w;
        for (std::size_t s = node; parent[s] >= 0; s = static_cast<std::size_t>(parent[s]))
          w.push_back(dfa.letter(via[s]));
        std::reverse(w.begin(), w.end());
        return w;
      };
      // Singletons are expanded too, so a non-final merge can still lead to
      // the shortest final merge.
      std::deque<std::size_t> queue{start};
      while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        const PairNode& node = pa.node(cur);
        if (node.singleton()) {
          if (!entry.merge_word) {
            entry.merge_word = word_to(cur);
            entry.merge_state = node.low;
          }
          if (dfa.is_final(node.low)) {
            entry.final_word = word_to(cur);
            entry.final_state = node.low;
            break;
          }
        }
        for (LetterId a = 0; a < dfa.num_letters(); ++a) {
          const std::size_t nxt = pa.step(cur, a);
          if (parent[nxt] != -2) continue;
          parent[nxt] = static_cast<std::int64_t>(cur);
          via[nxt] = a;
          queue.push_back(nxt);
        }
      }
      entries.push_back(std::move(entry));
    }
  return SyncTable(n, std::move(entries));
}

std::string export_sync_table(const Dfa& dfa, const SyncTable& table) {
  std::ostringstream out;
  for (const auto& e : table.entries()) {
    const std::string label = "{" + dfa.state_name(e.first) + "," + dfa.state_name(e.second) + "}";
    if (!e.merge_word) {
      out << label << " -> absent\n";
      continue;
    }
    const bool final_merge = dfa.is_final(e.merge_state);
    out << label << " -> " << render_word(*e.merge_word) << " @ " << dfa.state_name(e.merge_state) << ' '
        << (final_merge ? "final" : "nonfinal") << '\n';
    if (!final_merge && e.final_word)
      out << label << " -> " << render_word(*e.final_word) << " @ " << dfa.state_name(e.final_state)
          << " final\n";
  }
  return out.str();
}

namespace {

constexpr std::size_t kExactSubsetLimit = 12;  // 2^12 = 4096
constexpr std::size_t kSubsetNodeBudget = 200000;

bool uses_forbidden(std::span<const StateId> image, LetterId a, const std::optional<Edge>& forbidden) {
  if (!forbidden || forbidden->letter != a) return false;
  return std::find(image.begin(), image.end(), forbidden->state) != image.end();
}

std::vector<StateId> normalized(std::span<const StateId> states) {
  std::vector<StateId> v(states.begin(), states.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// BFS over (image set, witness state). The key stores the witness last.
std::optional<Word> subset_bfs(const Dfa& dfa, const std::vector<StateId>& start, const std::optional<Edge>& forbidden,
                               bool land_in_final, std::optional<StateId> witness, bool& budget_hit) {
  struct Node {
    std::vector<StateId> key;
    std::int64_t parent;
    LetterId via;
  };
  auto goal = [&](const std::vector<StateId>& image, StateId w) {
    if (image.size() != 1 || dfa.is_final(image[0]) != land_in_final) return false;
    return !witness || dfa.is_final(w) != land_in_final;
  };
  const StateId wit0 = witness.value_or(0);
  std::vector<Node> nodes;
  std::map<std::vector<StateId>, std::size_t> seen;
  auto key_of = [](std::vector<StateId> image, StateId w) {
    image.push_back(w);
    return image;
  };
  nodes.push_back({key_of(start, wit0), -1, 0});
  seen.emplace(nodes.back().key, 0);
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    std::vector<StateId> image(nodes[head].key.begin(), nodes[head].key.end() - 1);
    const StateId w = nodes[head].key.back();
    if (goal(image, w)) {
      Word word;
      for (std::int64_t s = static_cast<std::int64_t>(head); nodes[s].parent >= 0; s = nodes[s].parent)
        word.push_back(dfa.letter(nodes[s].via));
      std::reverse(word.begin(), word.end());
      return word;
    }
    if (nodes.size() > kSubsetNodeBudget) {
      budget_hit = true;
      return std::nullopt;
    }
    for (LetterId a = 0; a < dfa.num_letters(); ++a) {
      if (uses_forbidden(image, a, forbidden)) continue;
      std::vector<StateId> next;
      next.reserve(image.size());
      for (StateId s : image) next.push_back(dfa.next(s, a));
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      auto key = key_of(std::move(next), witness ? dfa.next(w, a) : wit0);
      if (seen.count(key)) continue;
      seen.emplace(key, nodes.size());
      nodes.push_back({std::move(key), static_cast<std::int64_t>(head), a});
    }
  }
  return std::nullopt;
}

// Greedy fallback: merge the first two states of the image repeatedly, then
// walk the survivor (and witness) to the goal.
std::optional<Word> greedy_sync(const Dfa& dfa, const std::vector<StateId>& start, const std::optional<Edge>& forbidden,
                                bool land_in_final, std::optional<StateId> witness) {
  std::vector<StateId> image = start;
  StateId wit = witness.value_or(0);
  Word word;
  auto apply = [&](const Word& w) {
    for (char c : w) {
      const LetterId a = *dfa.letter_id(c);
      if (uses_forbidden(image, a, forbidden)) return false;
      for (auto& s : image) s = dfa.next(s, a);
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      wit = dfa.next(wit, a);
    }
    word += w;
    return true;
  };
  while (image.size() > 1) {
    // The pair only needs to merge, not land anywhere in particular.
    std::optional<Word> pair_word;
    {
      const std::size_t n = dfa.num_states();
      std::vector<std::int64_t> parent(n * n, -2);
      std::vector<LetterId> via(n * n);
      const std::size_t s0 = image[0] * n + image[1];
      parent[s0] = -1;
      std::deque<std::size_t> q{s0};
      while (!q.empty()) {
        const std::size_t cur = q.front();
        q.pop_front();
        const auto x = static_cast<StateId>(cur / n), y = static_cast<StateId>(cur % n);
        if (x == y) {
          Word w;
          for (std::size_t s = cur; parent[s] >= 0; s = static_cast<std::size_t>(parent[s])) w.push_back(dfa.letter(via[s]));
          std::reverse(w.begin(), w.end());
          pair_word = w;
          break;
        }
        for (LetterId a = 0; a < dfa.num_letters(); ++a) {
          const StateId pair[2] = {x, y};
          if (uses_forbidden(pair, a, forbidden)) continue;
          const std::size_t nxt = dfa.next(x, a) * n + dfa.next(y, a);
          if (parent[nxt] != -2) continue;
          parent[nxt] = static_cast<std::int64_t>(cur);
          via[nxt] = a;
          q.push_back(nxt);
        }
      }
    }
    if (!pair_word || !apply(*pair_word)) return std::nullopt;
  }
  bool budget = false;
  auto tail = subset_bfs(dfa, image, forbidden, land_in_final, witness ? std::optional<StateId>(wit) : std::nullopt,
                         budget);
  if (!tail || !apply(*tail)) return std::nullopt;
  return word;
}

}  // namespace

std::optional<Word> sync_against_witness(const Dfa& dfa, std::span<const StateId> states,
                                         std::optional<Edge> forbidden, bool land_in_final,
                                         std::optional<StateId> witness) {
  const auto start = normalized(states);
  if (start.empty()) return std::nullopt;
  if (start.size() <= kExactSubsetLimit) {
    bool budget_hit = false;
    auto w = subset_bfs(dfa, start, forbidden, land_in_final, witness, budget_hit);
    if (w || !budget_hit) return w;
  }
  return greedy_sync(dfa, start, forbidden, land_in_final, witness);
}

std::optional<Word> sync_set_to_accepting(const Dfa& dfa, std::span<const StateId> states,
                                          std::optional<Edge> forbidden) {
  return sync_against_witness(dfa, states, forbidden, true, std::nullopt);
}

SyncPartition accepting_sync_partition(const Dfa& dfa, std::span<const StateId> domain) {
  return accepting_sync_partition(dfa, domain, pair_sync_table(dfa));
}

SyncPartition accepting_sync_partition(const Dfa& dfa, std::span<const StateId> domain, const SyncTable& table) {
  const auto order = normalized(domain);
  for (StateId s : order) {
    const StateId single[1] = {s};
    if (!sync_set_to_accepting(dfa, single))
      throw Error(ErrorKind::UnreachableAccept, "state '" + dfa.state_name(s) + "' cannot reach a final state");
  }
  SyncPartition part;
  std::vector<bool> assigned(dfa.num_states(), false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (assigned[order[i]]) continue;
    std::vector<StateId> block{order[i]};
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const StateId t = order[j];
      if (assigned[t]) continue;
      const bool pairwise = std::all_of(block.begin(), block.end(),
                                        [&](StateId b) { return table.at(b, t).merges_into_final(); });
      if (!pairwise) continue;
      auto candidate = block;
      candidate.push_back(t);
      if (sync_set_to_accepting(dfa, candidate)) block = std::move(candidate);
    }
    for (StateId s : block) assigned[s] = true;
    part.words.push_back(*sync_set_to_accepting(dfa, block));
    part.blocks.push_back(std::move(block));
  }
  return part;
}

bool is_masking(const Dfa& dfa, const Path& p, const TransitionFault& f) {
  if (dfa.next(f.source, f.letter) == f.wrong_target)
    throw Error(ErrorKind::InvalidFault, format_fault(dfa, f) + " is the correct transition");
  const auto edges = p.edges(dfa);
  bool on_path = false;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] != f.edge()) continue;
    on_path = true;
    StateId y = p.states[i + 1];
    StateId z = f.wrong_target;
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const LetterId a = edges[j].letter;
      y = dfa.next(y, a);
      z = dfa.next(z, a);
      if (y == z) return true;
    }
  }
  if (!on_path) throw Error(ErrorKind::EdgeNotOnPath, format_fault(dfa, f) + ": edge does not occur on the path");
  return false;
}

}  // namespace dfatest
