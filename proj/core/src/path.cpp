#include "dfatest/path.hpp"

namespace dfatest {

std::vector<Edge> Path::edges(const Dfa& dfa) const {
  std::vector<Edge> out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) out.push_back({states[i], *dfa.letter_id(word[i])});
  return out;
}

Path make_path(const Dfa& dfa, StateId start, std::string_view word) {
  Path p;
  p.word = Word(word);
  p.states.reserve(word.size() + 1);
  p.states.push_back(start);
  for (LetterId a : dfa.letters_of(word)) p.states.push_back(dfa.next(p.states.back(), a));
  return p;
}

}  // namespace dfatest
