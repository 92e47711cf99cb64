#pragma once

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dfatest/dfa.hpp"
#include "dfatest/fault.hpp"

namespace testsupport {

extern const char* const kExample;

dfatest::Dfa example5();
dfatest::Dfa single_state();
/// Fault given by state names, e.g. fault(d, "1", 'a', "X").
dfatest::TransitionFault fault(const dfatest::Dfa& d, const std::string& src, char letter, const std::string& dst);

/// Uniform random complete DFA with `n` states over the first `k` of "abc".
dfatest::Dfa random_dfa(std::mt19937& rng, std::size_t n, std::size_t k);
/// Random DFA with 2..max_n states and 1..max_k letters that the oracle
/// deems minimal.
dfatest::Dfa random_minimal_dfa(std::mt19937& rng, std::size_t max_n, std::size_t max_k);
std::string random_word(std::mt19937& rng, const std::string& alphabet, std::size_t max_len);

// Oracles: a map-based automaton built from names only, so none of the
// library's index arithmetic is involved.
struct MapDfa {
  std::vector<std::string> states;
  std::string alphabet;
  std::map<std::pair<std::string, char>, std::string> delta;
  std::string initial;
  std::set<std::string> finals;
};

MapDfa to_map(const dfatest::Dfa& d);
MapDfa with_fault(MapDfa m, const dfatest::Dfa& d, const dfatest::TransitionFault& f);
std::string run_map(const MapDfa& m, const std::string& from, const std::string& word);
bool accepts_map(const MapDfa& m, const std::string& word);
bool kills_oracle(const dfatest::Dfa& d, const dfatest::TransitionFault& f, const std::string& word);

/// All words up to `max_len` in shortlex order.
std::vector<std::string> all_words(const std::string& alphabet, std::size_t max_len);
std::optional<std::string> brute_detecting_word(const dfatest::Dfa& d, const dfatest::TransitionFault& f,
                                                std::size_t max_len);
/// Pairwise distinguishability by exhaustive words up to |Q| letters plus
/// reachability by exhaustive words up to |Q| - 1 letters.
bool minimal_oracle(const MapDfa& m);
/// Size of a minimum subfamily of `sets` covering their union, by brute force.
std::size_t brute_min_cover(const std::vector<std::set<std::size_t>>& sets);

}  // namespace testsupport
