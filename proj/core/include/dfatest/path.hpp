#pragma once

#include <string_view>
#include <vector>

#include "dfatest/dfa.hpp"

namespace dfatest {

/// A walk through the transition graph. `states` has one more entry than
/// `word`; `edges()[i]` is the (state, letter) pair taken at step i.
struct Path {
  std::vector<StateId> states;
  Word word;

  std::size_t length() const noexcept { return word.size(); }
  StateId start() const { return states.front(); }
  StateId end() const { return states.back(); }
  std::vector<Edge> edges(const Dfa& dfa) const;

  friend bool operator==(const Path&, const Path&) = default;
};

/// The path read by `word` from `start`.
Path make_path(const Dfa& dfa, StateId start, std::string_view word);

}  // namespace dfatest
