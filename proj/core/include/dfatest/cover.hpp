#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dfatest/dfa.hpp"
#include "dfatest/fault.hpp"
#include "dfatest/set_cover.hpp"

namespace dfatest {

struct PoolOptions {
  std::size_t max_len = 0;
  std::vector<Word> seeds;
  /// Drop words whose kill vector is a strict subset of a retained one.
  bool prune_dominated = true;
  std::size_t cap = 1'000'000;
};

/// Length bound after which every single fault is detectable: |Q|^2 - 1.
std::size_t default_max_len(const Dfa& dfa);

/// Breadth-first enumeration of words up to `max_len` keeping the first word
/// of every distinct nonzero kill vector (then only the maximal vectors when
/// pruning), plus every seed that kills something. Returned in shortlex
/// order. Throws PoolOverflow.
std::vector<Word> candidate_pool(const Dfa& dfa, const PoolOptions& options);
std::vector<Word> candidate_pool(const Dfa& dfa, std::size_t max_len, std::span<const Word> seeds);

struct CoverInstance {
  Dfa dfa;
  KillMatrix matrix;
  std::size_t max_len = 0;
  std::size_t node_budget = 10'000'000;
};

/// Kill matrix of `words` against every fault of `dfa`.
CoverInstance make_cover_instance(const Dfa& dfa, std::vector<Word> words, std::size_t max_len = 0,
                                  std::size_t node_budget = 10'000'000);

struct CoverResult {
  std::vector<Word> words;
  bool optimal = false;
  /// Valid for every word set, not just the pool.
  std::size_t lower_bound = 0;
  std::size_t nodes = 0;
};

/// Minimum cover of all fault columns by pool words. Throws Infeasible.
CoverResult solve_exact(const CoverInstance& instance);
/// Greedy cover, ties broken by the lexicographically least word. Throws Infeasible.
CoverResult greedy_cover(const CoverInstance& instance);

/// Whether a single word can kill both faults (triple product search).
bool faults_compatible(const Dfa& dfa, const TransitionFault& f, const TransitionFault& g);

/// Size of a set of detectable faults no two of which one word can kill.
std::size_t incompatibility_lower_bound(const CoverInstance& instance);
std::size_t incompatibility_lower_bound(const Dfa& dfa, std::span<const TransitionFault> faults);

/// `optimum:`, `lower_bound:` and `optimal_closed:` lines followed by the words.
std::string format_cover_report(const CoverResult& result);

}  // namespace dfatest
