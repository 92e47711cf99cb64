#include "dfatest/fault.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "dfatest/error.hpp"

namespace dfatest {

std::vector<TransitionFault> faults_on_edge(const Dfa& dfa, Edge e) {
  std::vector<TransitionFault> out;
  const StateId correct = dfa.next(e.state, e.letter);
  for (StateId t = 0; t < dfa.num_states(); ++t)
    if (t != correct) out.push_back({e.state, e.letter, t});
  return out;
}

std::vector<TransitionFault> enumerate_faults(const Dfa& dfa) {
  std::vector<TransitionFault> out;
  out.reserve(dfa.num_edges() * (dfa.num_states() - 1));
  for (StateId q = 0; q < dfa.num_states(); ++q)
    for (LetterId a = 0; a < dfa.num_letters(); ++a) {
      auto edge_faults = faults_on_edge(dfa, {q, a});
      out.insert(out.end(), edge_faults.begin(), edge_faults.end());
    }
  return out;
}

Dfa apply_fault(const Dfa& dfa, const TransitionFault& f) {
  if (f.source >= dfa.num_states() || f.wrong_target >= dfa.num_states() || f.letter >= dfa.num_letters())
    throw Error(ErrorKind::InvalidFault, "fault refers to a state or letter outside the automaton");
  if (dfa.next(f.source, f.letter) == f.wrong_target)
    throw Error(ErrorKind::InvalidFault, format_fault(dfa, f) + " is the correct transition");
  return dfa.with_transition(f.source, f.letter, f.wrong_target);
}

std::string format_fault(const Dfa& dfa, const TransitionFault& f) {
  return dfa.state_name(f.source) + " -" + dfa.letter(f.letter) + "-> " + dfa.state_name(f.wrong_target);
}

StateId mutant_delta_star(const Dfa& dfa, const TransitionFault& f, StateId q, std::string_view word) {
  for (LetterId a : dfa.letters_of(word)) q = mutant_next(dfa, f, q, a);
  return q;
}

std::optional<std::uint32_t> ProductAutomaton::find(std::pair<StateId, StateId> p) const {
  auto it = std::find(pairs.begin(), pairs.end(), p);
  if (it == pairs.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - pairs.begin());
}

ProductAutomaton product_automaton(const Dfa& dfa, const TransitionFault& f) {
  const std::size_t n = dfa.num_states();
  const std::size_t k = dfa.num_letters();
  ProductAutomaton prod;
  prod.num_letters = k;
  std::vector<std::int64_t> id(n * n, -1);
  auto visit = [&](StateId x, StateId y) {
    auto& slot = id[x * n + y];
    if (slot < 0) {
      slot = static_cast<std::int64_t>(prod.pairs.size());
      prod.pairs.emplace_back(x, y);
      prod.xor_final.push_back(dfa.is_final(x) != dfa.is_final(y));
    }
    return static_cast<std::uint32_t>(slot);
  };
  visit(dfa.initial(), dfa.initial());
  for (std::size_t head = 0; head < prod.pairs.size(); ++head) {
    const auto [x, y] = prod.pairs[head];
    for (LetterId a = 0; a < k; ++a) {
      const auto target = visit(dfa.next(x, a), mutant_next(dfa, f, y, a));
      prod.delta.push_back(target);
    }
  }
  return prod;
}

bool product_accepts(const Dfa& dfa, const ProductAutomaton& product, std::string_view word) {
  std::uint32_t p = 0;
  for (LetterId a : dfa.letters_of(word)) p = product.next(p, a);
  return product.xor_final[p];
}

std::optional<Word> shortest_continuation(const Dfa& dfa, const TransitionFault& f, StateId spec_state,
                                          StateId mutant_state, Disagreement want) {
  const std::size_t n = dfa.num_states();
  auto goal = [&](StateId x, StateId y) {
    const bool sx = dfa.is_final(x);
    const bool sy = dfa.is_final(y);
    switch (want) {
      case Disagreement::any: return sx != sy;
      case Disagreement::spec_accepts: return sx && !sy;
      case Disagreement::spec_rejects: return !sx && sy;
    }
    return false;
  };
  std::vector<std::int64_t> parent(n * n, -2);
  std::vector<LetterId> via(n * n, 0);
  const std::size_t start = spec_state * n + mutant_state;
  parent[start] = -1;
  std::deque<std::size_t> queue{start};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    const auto x = static_cast<StateId>(cur / n);
    const auto y = static_cast<StateId>(cur % n);
    if (goal(x, y)) {
      Word w;
      for (std::size_t s = cur; parent[s] >= 0; s = static_cast<std::size_t>(parent[s]))
        w.push_back(dfa.letter(via[s]));
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (LetterId a = 0; a < dfa.num_letters(); ++a) {
      const std::size_t nxt = dfa.next(x, a) * n + mutant_next(dfa, f, y, a);
      if (parent[nxt] != -2) continue;
      parent[nxt] = static_cast<std::int64_t>(cur);
      via[nxt] = a;
      queue.push_back(nxt);
    }
  }
  return std::nullopt;
}

std::optional<Word> shortest_detecting_word(const Dfa& dfa, const TransitionFault& f) {
  return shortest_continuation(dfa, f, dfa.initial(), dfa.initial(), Disagreement::any);
}

bool kills(const Dfa& dfa, const TransitionFault& f, std::string_view word) {
  StateId x = dfa.initial();
  StateId y = dfa.initial();
  for (LetterId a : dfa.letters_of(word)) {
    x = dfa.next(x, a);
    y = mutant_next(dfa, f, y, a);
  }
  return dfa.is_final(x) != dfa.is_final(y);
}

bool killed_by_any(const Dfa& dfa, const TransitionFault& f, std::span<const Word> words) {
  return std::any_of(words.begin(), words.end(), [&](const Word& w) { return kills(dfa, f, w); });
}

bool KillMatrix::column_covered(std::size_t fault) const {
  return std::any_of(rows.begin(), rows.end(), [&](const auto& r) { return r[fault]; });
}

boost::dynamic_bitset<> kill_vector(const Dfa& dfa, std::string_view word,
                                    std::span<const TransitionFault> faults) {
  boost::dynamic_bitset<> row(faults.size());
  const auto letters = dfa.letters_of(word);
  std::vector<StateId> spec_run{dfa.initial()};
  for (LetterId a : letters) spec_run.push_back(dfa.next(spec_run.back(), a));
  const bool spec_accepts = dfa.is_final(spec_run.back());
  for (std::size_t j = 0; j < faults.size(); ++j) {
    const auto& f = faults[j];
    // The mutant agrees with the spec until it first takes the faulty edge.
    std::size_t i = 0;
    while (i < letters.size() && !(spec_run[i] == f.source && letters[i] == f.letter)) ++i;
    if (i == letters.size()) continue;
    StateId y = f.wrong_target;
    for (++i; i < letters.size(); ++i) y = mutant_next(dfa, f, y, letters[i]);
    row[j] = dfa.is_final(y) != spec_accepts;
  }
  return row;
}

KillMatrix kill_matrix(const Dfa& dfa, std::vector<Word> words, std::vector<TransitionFault> faults) {
  KillMatrix m;
  m.words = std::move(words);
  m.faults = std::move(faults);
  m.rows.reserve(m.words.size());
  for (const auto& w : m.words) m.rows.push_back(kill_vector(dfa, w, m.faults));
  return m;
}

std::string export_kill_matrix(const Dfa& dfa, const KillMatrix& matrix) {
  std::ostringstream out;
  out << "word";
  for (const auto& f : matrix.faults) out << '\t' << format_fault(dfa, f);
  out << '\n';
  for (std::size_t i = 0; i < matrix.words.size(); ++i) {
    out << render_word(matrix.words[i]);
    for (std::size_t j = 0; j < matrix.faults.size(); ++j) out << '\t' << (matrix.at(i, j) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

VerifyReport verify_suite(const Dfa& dfa, std::span<const Word> words) {
  VerifyReport report;
  const auto faults = enumerate_faults(dfa);
  report.total_faults = faults.size();
  boost::dynamic_bitset<> killed(faults.size());
  for (const auto& w : words) killed |= kill_vector(dfa, w, faults);
  for (std::size_t j = 0; j < faults.size(); ++j) {
    if (killed[j]) {
      ++report.killed;
    } else {
      report.survivors.push_back({faults[j], shortest_detecting_word(dfa, faults[j])});
    }
  }
  return report;
}

}  // namespace dfatest
