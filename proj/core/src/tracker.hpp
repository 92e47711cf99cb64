#pragma once

#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "dfatest/error.hpp"
#include "dfatest/fault.hpp"
#include "dfatest/generate.hpp"

namespace dfatest::detail {

/// Suite under construction plus the set of faults it already kills. Words
/// held back for the end of a path are counted as killing immediately.
class Tracker {
 public:
  explicit Tracker(const Dfa& dfa) : dfa_(dfa), faults_(enumerate_faults(dfa)), killed_(faults_.size()) {}

  const Dfa& dfa() const noexcept { return dfa_; }
  const std::vector<TransitionFault>& faults() const noexcept { return faults_; }

  std::size_t index(const TransitionFault& f) const {
    const StateId correct = dfa_.next(f.source, f.letter);
    return dfa_.edge_index(f.edge()) * (dfa_.num_states() - 1) + (f.wrong_target < correct ? f.wrong_target : f.wrong_target - 1);
  }
  bool killed(const TransitionFault& f) const { return killed_[index(f)]; }

  void add(Word word, Phase phase, Word prefix = {}) {
    if (suite_.contains(word)) return;
    killed_ |= kill_vector(dfa_, word, faults_);
    suite_.add(std::move(word), phase, std::move(prefix));
  }

  /// `accepting` names the buffer (T_acc or T_rej) relative to `view`; a word
  /// whose verdict disagrees with its buffer is a generator bug.
  void hold(const Dfa& view, Word word, Phase phase, Word prefix, bool accepting) {
    if (accepts(view, word) != accepting)
      throw std::logic_error("held word '" + render_word(word) + "' is in the wrong buffer");
    killed_ |= kill_vector(dfa_, word, faults_);
    (accepting ? held_acc_ : held_rej_).push_back({std::move(word), {phase, std::move(prefix)}});
  }

  void flush() {
    for (auto* held : {&held_acc_, &held_rej_}) {
      for (auto& [w, p] : *held) suite_.add(std::move(w), p.phase, std::move(p.prefix));
      held->clear();
    }
  }

  /// Shortest detecting word for every fault still alive.
  void complete() {
    flush();
    for (const auto& f : faults_) {
      if (killed(f)) continue;
      if (auto w = shortest_detecting_word(dfa_, f)) add(*w, Phase::completion);
    }
  }

  TestSuite take() {
    flush();
    return std::move(suite_);
  }

 private:
  const Dfa& dfa_;
  std::vector<TransitionFault> faults_;
  boost::dynamic_bitset<> killed_;
  TestSuite suite_;
  std::vector<std::pair<Word, Provenance>> held_acc_;
  std::vector<std::pair<Word, Provenance>> held_rej_;
};

inline void require_minimal(const Dfa& dfa) {
  if (!is_minimal(dfa))
    throw Error(ErrorKind::NotMinimal, "automaton is not minimal (" + std::to_string(minimize(dfa).num_states()) +
                                           " states after minimization, " + std::to_string(dfa.num_states()) +
                                           " given)");
}

}  // namespace dfatest::detail
