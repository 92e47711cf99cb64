#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "dfatest/dfa.hpp"

namespace dfatest {

/// One mutant: delta(source, letter) redirected to `wrong_target`.
struct TransitionFault {
  StateId source = 0;
  LetterId letter = 0;
  StateId wrong_target = 0;

  Edge edge() const noexcept { return {source, letter}; }
  friend auto operator<=>(const TransitionFault&, const TransitionFault&) = default;
};

/// All single-transition faults, ordered by (source, letter, wrong_target).
std::vector<TransitionFault> enumerate_faults(const Dfa& dfa);
/// The faults of one edge, ordered by wrong_target.
std::vector<TransitionFault> faults_on_edge(const Dfa& dfa, Edge e);

/// Throws InvalidFault if the fault does not change the transition.
Dfa apply_fault(const Dfa& dfa, const TransitionFault& f);

/// "<source> -<letter>-> <wrong_target>"
std::string format_fault(const Dfa& dfa, const TransitionFault& f);

/// Next state of the mutant; no copy of the automaton is made.
inline StateId mutant_next(const Dfa& dfa, const TransitionFault& f, StateId q, LetterId a) {
  return (q == f.source && a == f.letter) ? f.wrong_target : dfa.next(q, a);
}
StateId mutant_delta_star(const Dfa& dfa, const TransitionFault& f, StateId q, std::string_view word);

/// Reachable part of spec x mutant with the XOR acceptance condition.
/// Pairs are numbered in BFS order from (initial, initial); pair 0 is the start.
struct ProductAutomaton {
  std::vector<std::pair<StateId, StateId>> pairs;
  std::vector<std::uint32_t> delta;  // pair * |alphabet| + letter
  std::vector<bool> xor_final;
  std::size_t num_letters = 0;

  std::uint32_t next(std::uint32_t pair, LetterId a) const { return delta[pair * num_letters + a]; }
  std::optional<std::uint32_t> find(std::pair<StateId, StateId> p) const;
};

ProductAutomaton product_automaton(const Dfa& dfa, const TransitionFault& f);
bool product_accepts(const Dfa& dfa, const ProductAutomaton& product, std::string_view word);

/// Which side must accept for a continuation to count as distinguishing.
enum class Disagreement { any, spec_accepts, spec_rejects };

/// Shortest (then lexicographically least) w with the spec run from
/// `spec_state` and the mutant run from `mutant_state` disagreeing as
/// requested after reading w.
std::optional<Word> shortest_continuation(const Dfa& dfa, const TransitionFault& f, StateId spec_state,
                                          StateId mutant_state, Disagreement want = Disagreement::any);

/// Shortest word on which spec and mutant disagree; nullopt only for
/// non-minimal automata.
std::optional<Word> shortest_detecting_word(const Dfa& dfa, const TransitionFault& f);

bool kills(const Dfa& dfa, const TransitionFault& f, std::string_view word);
/// True iff some word in `words` kills f.
bool killed_by_any(const Dfa& dfa, const TransitionFault& f, std::span<const Word> words);

/// Rows are words, columns faults, both in input order.
struct KillMatrix {
  std::vector<Word> words;
  std::vector<TransitionFault> faults;
  std::vector<boost::dynamic_bitset<>> rows;

  bool at(std::size_t word, std::size_t fault) const { return rows[word][fault]; }
  /// Whether some row covers column `fault`.
  bool column_covered(std::size_t fault) const;
};

KillMatrix kill_matrix(const Dfa& dfa, std::vector<Word> words, std::vector<TransitionFault> faults);
/// Bit f set iff `word` kills faults[f].
boost::dynamic_bitset<> kill_vector(const Dfa& dfa, std::string_view word,
                                    std::span<const TransitionFault> faults);

/// Tab-separated export: a header row of faults, then one row per word.
std::string export_kill_matrix(const Dfa& dfa, const KillMatrix& matrix);

struct Survivor {
  TransitionFault fault;
  std::optional<Word> missing_word;
};

struct VerifyReport {
  std::size_t total_faults = 0;
  std::size_t killed = 0;
  std::vector<Survivor> survivors;

  bool complete() const noexcept { return survivors.empty(); }
};

/// Checks a suite against every single-transition fault of `dfa`.
VerifyReport verify_suite(const Dfa& dfa, std::span<const Word> words);

}  // namespace dfatest
