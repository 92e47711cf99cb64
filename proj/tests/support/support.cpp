#include "support.hpp"

#include <algorithm>

namespace testsupport {

const char* const kExample = R"(# example automaton with a negative sinkhole X
states: 1 2 3 A X
alphabet: a b
initial: 1
final: A
1 a 2
1 b X
2 a 3
2 b 2
3 a A
3 b 2
A a X
A b X
X a X
X b X
)";

dfatest::Dfa example5() { return dfatest::parse_dfa_text(kExample); }

dfatest::Dfa single_state() {
  return dfatest::parse_dfa_text("states: s\nalphabet: a\ninitial: s\nfinal: s\ns a s\n");
}

dfatest::TransitionFault fault(const dfatest::Dfa& d, const std::string& src, char letter, const std::string& dst) {
  return {*d.find_state(src), *d.letter_id(letter), *d.find_state(dst)};
}

dfatest::Dfa random_dfa(std::mt19937& rng, std::size_t n, std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  std::uniform_int_distribution<dfatest::StateId> pick(0, static_cast<dfatest::StateId>(n - 1));
  std::vector<dfatest::StateId> delta(n * k);
  for (auto& t : delta) t = pick(rng);
  std::vector<bool> finals(n);
  for (std::size_t i = 0; i < n; ++i) finals[i] = rng() % 2 == 1;
  return dfatest::Dfa(names, std::string("abc").substr(0, k), delta, 0, finals);
}

dfatest::Dfa random_minimal_dfa(std::mt19937& rng, std::size_t max_n, std::size_t max_k) {
  std::uniform_int_distribution<std::size_t> n_dist(2, max_n);
  std::uniform_int_distribution<std::size_t> k_dist(1, max_k);
  while (true) {
    auto d = random_dfa(rng, n_dist(rng), k_dist(rng));
    if (minimal_oracle(to_map(d))) return d;
  }
}

std::string random_word(std::mt19937& rng, const std::string& alphabet, std::size_t max_len) {
  const std::size_t len = rng() % (max_len + 1);
  std::string w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(alphabet[rng() % alphabet.size()]);
  return w;
}

MapDfa to_map(const dfatest::Dfa& d) {
  MapDfa m;
  m.states = d.state_names();
  m.alphabet = d.alphabet();
  for (dfatest::StateId q = 0; q < d.num_states(); ++q) {
    for (dfatest::LetterId a = 0; a < d.num_letters(); ++a)
      m.delta[{d.state_name(q), d.letter(a)}] = d.state_name(d.next(q, a));
    if (d.is_final(q)) m.finals.insert(d.state_name(q));
  }
  m.initial = d.state_name(d.initial());
  return m;
}

MapDfa with_fault(MapDfa m, const dfatest::Dfa& d, const dfatest::TransitionFault& f) {
  m.delta[{d.state_name(f.source), d.letter(f.letter)}] = d.state_name(f.wrong_target);
  return m;
}

std::string run_map(const MapDfa& m, const std::string& from, const std::string& word) {
  std::string q = from;
  for (char c : word) q = m.delta.at({q, c});
  return q;
}

bool accepts_map(const MapDfa& m, const std::string& word) { return m.finals.count(run_map(m, m.initial, word)) > 0; }

bool kills_oracle(const dfatest::Dfa& d, const dfatest::TransitionFault& f, const std::string& word) {
  const MapDfa spec = to_map(d);
  return accepts_map(spec, word) != accepts_map(with_fault(spec, d, f), word);
}

std::vector<std::string> all_words(const std::string& alphabet, std::size_t max_len) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (char c : alphabet) out.push_back(out[i] + c);
    begin = end;
  }
  return out;
}

std::optional<std::string> brute_detecting_word(const dfatest::Dfa& d, const dfatest::TransitionFault& f,
                                                std::size_t max_len) {
  const MapDfa spec = to_map(d);
  const MapDfa mutant = with_fault(spec, d, f);
  for (const auto& w : all_words(d.alphabet(), max_len))
    if (accepts_map(spec, w) != accepts_map(mutant, w)) return w;
  return std::nullopt;
}

bool minimal_oracle(const MapDfa& m) {
  const std::size_t n = m.states.size();
  std::set<std::string> reached;
  for (const auto& w : all_words(m.alphabet, n - 1)) reached.insert(run_map(m, m.initial, w));
  if (reached.size() != n) return false;
  const auto words = all_words(m.alphabet, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool distinguished = std::any_of(words.begin(), words.end(), [&](const std::string& w) {
        return m.finals.count(run_map(m, m.states[i], w)) != m.finals.count(run_map(m, m.states[j], w));
      });
      if (!distinguished) return false;
    }
  return true;
}

std::size_t brute_min_cover(const std::vector<std::set<std::size_t>>& sets) {
  std::set<std::size_t> universe;
  for (const auto& s : sets) universe.insert(s.begin(), s.end());
  const std::size_t k = sets.size();
  std::size_t best = k;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    const auto count = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (count >= best) continue;
    std::set<std::size_t> got;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) got.insert(sets[i].begin(), sets[i].end());
    if (got == universe) best = count;
  }
  return best;
}

}  // namespace testsupport
