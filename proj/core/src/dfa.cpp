#include "dfatest/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "dfatest/error.hpp"

namespace dfatest {

Dfa::Dfa(std::vector<std::string> state_names, std::string alphabet, std::vector<StateId> delta,
         StateId initial, std::vector<bool> finals)
    : names_(std::move(state_names)),
      alphabet_(std::move(alphabet)),
      delta_(std::move(delta)),
      initial_(initial),
      finals_(std::move(finals)) {
  if (names_.empty()) throw Error(ErrorKind::MalformedLine, "automaton has no states");
  if (alphabet_.empty()) throw Error(ErrorKind::MalformedLine, "automaton has an empty alphabet");
  if (delta_.size() != names_.size() * alphabet_.size())
    throw Error(ErrorKind::MissingTransition, "transition table is not total");
  if (finals_.size() != names_.size())
    throw Error(ErrorKind::UnknownState, "final-state vector has the wrong size");
  if (initial_ >= names_.size()) throw Error(ErrorKind::UnknownState, "initial state out of range");
  for (StateId t : delta_)
    if (t >= names_.size()) throw Error(ErrorKind::UnknownState, "transition target out of range");

  std::set<std::string_view> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw Error(ErrorKind::MalformedLine, "duplicate state '" + n + "'");

  letter_index_.fill(-1);
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    auto slot = static_cast<unsigned char>(alphabet_[i]);
    if (letter_index_[slot] != -1)
      throw Error(ErrorKind::MalformedLine, std::string("duplicate letter '") + alphabet_[i] + "'");
    letter_index_[slot] = static_cast<std::int16_t>(i);
  }
}

std::optional<LetterId> Dfa::letter_id(char c) const noexcept {
  auto idx = letter_index_[static_cast<unsigned char>(c)];
  if (idx < 0) return std::nullopt;
  return static_cast<LetterId>(idx);
}

std::optional<StateId> Dfa::find_state(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<StateId>(i);
  return std::nullopt;
}

Dfa Dfa::with_transition(StateId q, LetterId a, StateId target) const {
  Dfa copy = *this;
  copy.delta_[edge_index({q, a})] = target;
  return copy;
}

Dfa Dfa::with_finals(std::vector<bool> finals) const {
  return Dfa(names_, alphabet_, delta_, initial_, std::move(finals));
}

std::vector<LetterId> Dfa::letters_of(std::string_view word) const {
  std::vector<LetterId> out;
  out.reserve(word.size());
  for (char c : word) {
    auto id = letter_id(c);
    if (!id) throw Error(ErrorKind::UnknownLetter, std::string("letter '") + c + "' is not in the alphabet");
    out.push_back(*id);
  }
  return out;
}

std::string render_word(std::string_view word) {
  if (word.empty()) return "<eps>";
  return std::string(word);
}

Word parse_word(const Dfa& dfa, std::string_view token) {
  if (token == "<eps>") return {};
  dfa.letters_of(token);  // validates
  return Word(token);
}

StateId delta_star(const Dfa& dfa, StateId q, std::string_view word) {
  for (char c : word) {
    auto a = dfa.letter_id(c);
    if (!a) throw Error(ErrorKind::UnknownLetter, std::string("letter '") + c + "' is not in the alphabet");
    q = dfa.next(q, *a);
  }
  return q;
}

bool accepts(const Dfa& dfa, std::string_view word) {
  return dfa.is_final(delta_star(dfa, dfa.initial(), word));
}

bool word_less(const Dfa& dfa, std::string_view a, std::string_view b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) continue;
    return *dfa.letter_id(a[i]) < *dfa.letter_id(b[i]);
  }
  return a.size() < b.size();
}

bool shortlex_less(const Dfa& dfa, std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return word_less(dfa, a, b);
}

std::vector<bool> reachable_states(const Dfa& dfa) {
  std::vector<bool> seen(dfa.num_states(), false);
  std::deque<StateId> queue{dfa.initial()};
  seen[dfa.initial()] = true;
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (LetterId a = 0; a < dfa.num_letters(); ++a) {
      StateId t = dfa.next(q, a);
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return seen;
}

namespace {

// Renames the reachable part of `delta` (over `n` states) in BFS order.
Dfa renumber_bfs(std::size_t n, const std::string& alphabet, const std::vector<StateId>& delta,
                 StateId initial, const std::vector<bool>& finals) {
  const std::size_t k = alphabet.size();
  std::vector<StateId> order;
  std::vector<std::int64_t> rename(n, -1);
  rename[initial] = 0;
  order.push_back(initial);
  for (std::size_t head = 0; head < order.size(); ++head) {
    StateId q = order[head];
    for (std::size_t a = 0; a < k; ++a) {
      StateId t = delta[q * k + a];
      if (rename[t] < 0) {
        rename[t] = static_cast<std::int64_t>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<std::string> names;
  std::vector<StateId> new_delta(order.size() * k);
  std::vector<bool> new_finals(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    names.push_back("q" + std::to_string(i));
    new_finals[i] = finals[order[i]];
    for (std::size_t a = 0; a < k; ++a)
      new_delta[i * k + a] = static_cast<StateId>(rename[delta[order[i] * k + a]]);
  }
  return Dfa(std::move(names), alphabet, std::move(new_delta), 0, std::move(new_finals));
}

}  // namespace

Dfa canonical_form(const Dfa& dfa) {
  return renumber_bfs(dfa.num_states(), dfa.alphabet(), dfa.delta(), dfa.initial(), dfa.finals());
}

Dfa minimize(const Dfa& dfa) {
  // Unreachable states go first so they cannot influence the partition.
  const Dfa reach = canonical_form(dfa);
  const std::size_t n = reach.num_states();
  const std::size_t k = reach.num_letters();

  // Moore refinement: split blocks by (own block, successor blocks) until stable.
  std::vector<std::size_t> block(n);
  for (std::size_t q = 0; q < n; ++q) block[q] = reach.is_final(static_cast<StateId>(q)) ? 1 : 0;
  std::size_t num_blocks = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> signature_ids;
    std::vector<std::size_t> next(n);
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<std::size_t> sig;
      sig.reserve(k + 1);
      sig.push_back(block[q]);
      for (std::size_t a = 0; a < k; ++a)
        sig.push_back(block[reach.next(static_cast<StateId>(q), static_cast<LetterId>(a))]);
      auto [it, inserted] = signature_ids.try_emplace(std::move(sig), signature_ids.size());
      next[q] = it->second;
    }
    const std::size_t count = signature_ids.size();
    block = std::move(next);
    if (count == num_blocks) break;
    num_blocks = count;
  }

  std::vector<StateId> delta(num_blocks * k);
  std::vector<bool> finals(num_blocks, false);
  for (std::size_t q = 0; q < n; ++q) {
    finals[block[q]] = reach.is_final(static_cast<StateId>(q));
    for (std::size_t a = 0; a < k; ++a)
      delta[block[q] * k + a] =
          static_cast<StateId>(block[reach.next(static_cast<StateId>(q), static_cast<LetterId>(a))]);
  }
  return renumber_bfs(num_blocks, reach.alphabet(), delta, static_cast<StateId>(block[0]), finals);
}

bool is_minimal(const Dfa& dfa) { return minimize(dfa).num_states() == dfa.num_states(); }

Dfa complement(const Dfa& dfa) {
  std::vector<bool> finals(dfa.num_states());
  for (std::size_t q = 0; q < dfa.num_states(); ++q) finals[q] = !dfa.is_final(static_cast<StateId>(q));
  return dfa.with_finals(std::move(finals));
}

std::optional<StateId> SinkReport::negative() const {
  for (const auto& s : sinks)
    if (s.polarity == Polarity::negative) return s.state;
  return std::nullopt;
}

std::optional<StateId> SinkReport::positive() const {
  for (const auto& s : sinks)
    if (s.polarity == Polarity::positive) return s.state;
  return std::nullopt;
}

SinkReport find_sinkholes(const Dfa& dfa) {
  SinkReport report;
  for (StateId q = 0; q < dfa.num_states(); ++q) {
    bool sink = true;
    for (LetterId a = 0; a < dfa.num_letters() && sink; ++a) sink = dfa.next(q, a) == q;
    if (sink) report.sinks.push_back({q, dfa.is_final(q) ? Polarity::positive : Polarity::negative});
  }
  return report;
}

std::optional<Word> shortest_word_to(const Dfa& dfa, StateId q) {
  // FIFO BFS with letters in alphabet order discovers every state through its
  // shortlex-least word.
  std::vector<std::int64_t> parent(dfa.num_states(), -1);
  std::vector<LetterId> via(dfa.num_states(), 0);
  std::vector<bool> seen(dfa.num_states(), false);
  std::deque<StateId> queue{dfa.initial()};
  seen[dfa.initial()] = true;
  while (!queue.empty() && !seen[q]) {
    StateId s = queue.front();
    queue.pop_front();
    for (LetterId a = 0; a < dfa.num_letters(); ++a) {
      StateId t = dfa.next(s, a);
      if (seen[t]) continue;
      seen[t] = true;
      parent[t] = s;
      via[t] = a;
      queue.push_back(t);
    }
  }
  if (!seen[q]) return std::nullopt;
  Word w;
  for (StateId s = q; s != dfa.initial(); s = static_cast<StateId>(parent[s])) w.push_back(dfa.letter(via[s]));
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace dfatest
