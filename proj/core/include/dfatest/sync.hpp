#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dfatest/dfa.hpp"
#include "dfatest/fault.hpp"
#include "dfatest/path.hpp"

namespace dfatest {

/// A 1- or 2-element state set; `low == high` for singletons.
struct PairNode {
  StateId low = 0;
  StateId high = 0;

  bool singleton() const noexcept { return low == high; }
  friend auto operator<=>(const PairNode&, const PairNode&) = default;
};

/// The restriction of the power automaton to sets of size at most two.
class PairAutomaton {
 public:
  explicit PairAutomaton(const Dfa& dfa);

  std::size_t size() const noexcept { return nodes_.size(); }
  const PairNode& node(std::size_t i) const { return nodes_[i]; }
  std::size_t index(StateId x, StateId y) const { return index_[x * n_ + y]; }
  std::size_t step(std::size_t node, LetterId a) const { return step_[node * k_ + a]; }
  PairNode step(PairNode p, LetterId a) const { return nodes_[step(index(p.low, p.high), a)]; }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<PairNode> nodes_;
  std::vector<std::size_t> index_;
  std::vector<std::size_t> step_;
};

PairAutomaton build_pair_automaton(const Dfa& dfa);

/// Synchronization facts for one unordered pair {first, second}.
struct PairSync {
  StateId first = 0;
  StateId second = 0;
  std::optional<Word> merge_word;  // shortest word merging the pair
  StateId merge_state = 0;
  std::optional<Word> final_word;  // shortest word merging the pair into a final state
  StateId final_state = 0;

  bool merges_into_final() const noexcept { return final_word.has_value(); }
};

class SyncTable {
 public:
  SyncTable(std::size_t num_states, std::vector<PairSync> entries);

  /// Entry for {x, y}; x != y, argument order irrelevant.
  const PairSync& at(StateId x, StateId y) const;
  const std::vector<PairSync>& entries() const noexcept { return entries_; }

 private:
  std::size_t n_;
  std::vector<PairSync> entries_;
  std::vector<std::size_t> slot_;
};

SyncTable pair_sync_table(const Dfa& dfa);

/// Lines of the form `{x,y} -> <word> @ <state> final|nonfinal`, or
/// `{x,y} -> absent`. A pair whose shortest merge is non-final and that can
/// also merge into a final state gets a second line for that word.
std::string export_sync_table(const Dfa& dfa, const SyncTable& table);

/// Word sending every state of `states` to one common final state without any
/// trajectory taking `forbidden`. Exact subset BFS while 2^|states| <= 4096,
/// pairwise greedy merging beyond that.
std::optional<Word> sync_set_to_accepting(const Dfa& dfa, std::span<const StateId> states,
                                          std::optional<Edge> forbidden = std::nullopt);

/// Generalisation used for option covering: merges `states` into one state
/// whose finality equals `land_in_final`, while the run from `witness` (which
/// ignores `forbidden`) ends with the opposite finality.
std::optional<Word> sync_against_witness(const Dfa& dfa, std::span<const StateId> states,
                                         std::optional<Edge> forbidden, bool land_in_final,
                                         std::optional<StateId> witness);

struct SyncPartition {
  std::vector<std::vector<StateId>> blocks;
  std::vector<Word> words;
};

/// Greedy partition of `domain` into blocks that synchronize into a final
/// state. Blocks are seeded in canonical state order and grown with every
/// later state whose pairs with the block all merge into a final state and
/// for which the whole block still synchronizes. Throws UnreachableAccept.
SyncPartition accepting_sync_partition(const Dfa& dfa, std::span<const StateId> domain);
SyncPartition accepting_sync_partition(const Dfa& dfa, std::span<const StateId> domain,
                                       const SyncTable& table);

/// Masking as detectable from pairwise synchronization: at some occurrence
/// x -a-> y of the fault's edge in `p`, a prefix of the remaining path word
/// merges y and the wrong target z. Throws EdgeNotOnPath, InvalidFault.
bool is_masking(const Dfa& dfa, const Path& p, const TransitionFault& f);

}  // namespace dfatest
