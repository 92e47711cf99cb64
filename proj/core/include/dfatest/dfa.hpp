#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dfatest {

using StateId = std::uint32_t;
using LetterId = std::uint32_t;

/// Words are strings of single-character letters. The empty string is ε.
using Word = std::string;

/// A (state, letter) pair, i.e. one transition of the automaton.
struct Edge {
  StateId state = 0;
  LetterId letter = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Complete deterministic finite automaton.
///
/// States are identified by dense indices; their order (declaration order for
/// parsed automata, BFS order for minimized ones) is the canonical tie-break
/// order used throughout the library. Letters are ordered as they appear in
/// the alphabet string, and words compare lexicographically by that order.
class Dfa {
 public:
  /// Throws Error if the invariants are violated: empty state set or
  /// alphabet, duplicate names or letters, a delta table of the wrong size,
  /// or an out-of-range target/initial state.
  Dfa(std::vector<std::string> state_names, std::string alphabet,
      std::vector<StateId> delta, StateId initial, std::vector<bool> finals);

  std::size_t num_states() const noexcept { return names_.size(); }
  std::size_t num_letters() const noexcept { return alphabet_.size(); }
  std::size_t num_edges() const noexcept { return delta_.size(); }

  const std::string& alphabet() const noexcept { return alphabet_; }
  char letter(LetterId a) const { return alphabet_[a]; }
  std::optional<LetterId> letter_id(char c) const noexcept;

  StateId next(StateId q, LetterId a) const { return delta_[q * alphabet_.size() + a]; }
  StateId initial() const noexcept { return initial_; }
  bool is_final(StateId q) const { return finals_[q]; }
  const std::vector<bool>& finals() const noexcept { return finals_; }
  const std::vector<StateId>& delta() const noexcept { return delta_; }

  const std::string& state_name(StateId q) const { return names_[q]; }
  const std::vector<std::string>& state_names() const noexcept { return names_; }
  std::optional<StateId> find_state(std::string_view name) const;

  std::size_t edge_index(Edge e) const noexcept { return e.state * alphabet_.size() + e.letter; }
  Edge edge_at(std::size_t index) const noexcept {
    return {static_cast<StateId>(index / alphabet_.size()),
            static_cast<LetterId>(index % alphabet_.size())};
  }

  /// Copy with delta(q, a) replaced by `target`.
  Dfa with_transition(StateId q, LetterId a, StateId target) const;
  /// Copy with a different final-state set.
  Dfa with_finals(std::vector<bool> finals) const;

  /// Translates a word to letter indices; throws UnknownLetter.
  std::vector<LetterId> letters_of(std::string_view word) const;

  friend bool operator==(const Dfa& a, const Dfa& b) {
    return a.names_ == b.names_ && a.alphabet_ == b.alphabet_ && a.delta_ == b.delta_ &&
           a.initial_ == b.initial_ && a.finals_ == b.finals_;
  }

 private:
  std::vector<std::string> names_;
  std::string alphabet_;
  std::vector<StateId> delta_;
  StateId initial_;
  std::vector<bool> finals_;
  std::array<std::int16_t, 256> letter_index_{};
};

// Text format -----------------------------------------------------------

Dfa parse_dfa(std::istream& in);
Dfa parse_dfa_text(std::string_view text);
/// Serializes in the same line format `parse_dfa` reads.
std::string to_text(const Dfa& dfa);

/// "<eps>" for the empty word, the letters otherwise.
std::string render_word(std::string_view word);
/// Inverse of render_word; throws UnknownLetter for letters outside the alphabet.
Word parse_word(const Dfa& dfa, std::string_view token);

// Semantics ---------------------------------------------------------------

StateId delta_star(const Dfa& dfa, StateId q, std::string_view word);
bool accepts(const Dfa& dfa, std::string_view word);

/// Lexicographic comparison under the automaton's alphabet order.
bool word_less(const Dfa& dfa, std::string_view a, std::string_view b);
/// Shorter words first, then word_less.
bool shortlex_less(const Dfa& dfa, std::string_view a, std::string_view b);

/// Reachable states renamed "q0", "q1", ... in BFS order from the initial
/// state (letters explored in alphabet order). Unreachable states are dropped.
Dfa canonical_form(const Dfa& dfa);
/// Canonical minimal automaton: unreachable states removed first, then
/// language-equivalent states merged, then canonical_form.
Dfa minimize(const Dfa& dfa);
bool is_minimal(const Dfa& dfa);
Dfa complement(const Dfa& dfa);

std::vector<bool> reachable_states(const Dfa& dfa);

enum class Polarity { positive, negative };

struct Sink {
  StateId state;
  Polarity polarity;
  friend bool operator==(const Sink&, const Sink&) = default;
};

struct SinkReport {
  std::vector<Sink> sinks;
  std::optional<StateId> negative() const;
  std::optional<StateId> positive() const;
};

SinkReport find_sinkholes(const Dfa& dfa);

/// Shortest word leading from the initial state to q, lexicographically
/// least among the shortest; nullopt iff q is unreachable.
std::optional<Word> shortest_word_to(const Dfa& dfa, StateId q);

}  // namespace dfatest
