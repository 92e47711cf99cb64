#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "dfatest/dfa.hpp"
#include "dfatest/path.hpp"
#include "dfatest/sync.hpp"

namespace dfatest {

/// Which step of a generator produced a word.
enum class Phase { sink_preprocess, accept_path, reject_path, option_cover, completion };

std::string_view to_string(Phase phase) noexcept;

struct Provenance {
  Phase phase;
  Word prefix;  // the path prefix u the word extends
};

/// Ordered set of test words with the phase that produced each one.
class TestSuite {
 public:
  /// Appends `word` unless already present; returns whether it was added.
  bool add(Word word, Phase phase, Word prefix = {});
  bool contains(std::string_view word) const { return index_.count(Word(word)) != 0; }

  const std::vector<Word>& words() const noexcept { return words_; }
  const std::vector<Provenance>& provenance() const noexcept { return provenance_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  std::size_t count(Phase phase) const;
  /// Words of one phase, in suite order.
  std::vector<Word> words_of(Phase phase) const;

 private:
  std::vector<Word> words_;
  std::vector<Provenance> provenance_;
  std::unordered_set<Word> index_;
};

/// One word per line, `<eps>` for ε, each preceded by a `# provenance:` line
/// when `with_provenance` is set.
void write_suite(std::ostream& out, const TestSuite& suite, bool with_provenance = true);
/// Reads words, skipping blank and `#` lines. Throws UnknownLetter/MalformedLine.
std::vector<Word> read_suite(std::istream& in, const Dfa& dfa);

/// Set of (state, letter) edges indexed by Dfa::edge_index.
using EdgeSet = boost::dynamic_bitset<>;
EdgeSet all_edges(const Dfa& dfa);

/// Path from the initial state that ends in a final state (or a non-final one
/// when `end_in_final` is false), covers as many edges of `uncovered` as
/// possible, and among those is shortest. Ties go to the lexicographically
/// least word, or, when `sync` is given, first to the path hiding the fewest
/// of its own faults through synchronization. nullopt when no such path
/// touches `uncovered`.
std::optional<Path> find_covering_path(const Dfa& dfa, const EdgeSet& uncovered, bool end_in_final,
                                       const SyncTable* sync = nullptr);

/// Number of faults on edges of `p` that is_masking flags and that σ(p)
/// indeed fails to kill.
std::size_t masked_fault_count(const Dfa& dfa, const Path& p);

struct Alg2Options {
  bool avoid_masking = false;
};

/// Generator without synchronization. Throws NotMinimal.
TestSuite generate_alg2(const Dfa& dfa, const Alg2Options& options = {});

struct Alg3Options {
  /// Overrides the greedy partition used for the negative sinkhole.
  std::optional<SyncPartition> partition;
};

/// Full pipeline: sinkhole preprocessing, masking-aware paths and option
/// covering through synchronization. Throws NotMinimal.
TestSuite generate_alg3(const Dfa& dfa, const Alg3Options& options = {});

struct RomanOptions {
  /// Forces the word of the first accepting path.
  std::optional<Word> first_path;
};

/// Baseline generator with the uaw' correction and synchronization done on
/// the automaton without the transition under test. Throws NotMinimal.
TestSuite generate_roman(const Dfa& dfa, const RomanOptions& options = {});

/// Small set of words u·a·w' such that every residual target q of the edge
/// (delta*(q0, u), a) is killed by one of them. `want_accept` selects the
/// preferred orientation (spec accepts, mutant rejects); targets that cannot
/// be killed that way fall back to the other orientation.
std::vector<Word> option_cover(const Dfa& dfa, std::string_view u, LetterId a,
                               std::span<const StateId> residual_targets, bool want_accept);

namespace detail {

struct OptionCoverResult {
  std::vector<Word> words;
  std::vector<StateId> uncovered;
};

/// option_cover without the orientation fallback.
OptionCoverResult option_cover_oriented(const Dfa& dfa, std::string_view u, LetterId a,
                                        std::span<const StateId> targets, bool want_accept);

}  // namespace detail

}  // namespace dfatest
