#pragma once

#include <cstddef>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace dfatest {

using Bits = boost::dynamic_bitset<>;

struct SetCoverSolution {
  std::vector<std::size_t> chosen;  // indices into the input sets, ascending
  bool optimal = false;             // search closed within the node budget
  std::size_t nodes = 0;
};

/// Repeatedly takes the set covering the most uncovered elements; ties go to
/// the set for which `before(i, j)` holds, by default the lower index.
/// Elements no set contains stay uncovered.
std::vector<std::size_t> greedy_set_cover(const std::vector<Bits>& sets, std::size_t universe);

template <class Before>
std::vector<std::size_t> greedy_set_cover(const std::vector<Bits>& sets, std::size_t universe, Before before) {
  Bits uncovered(universe);
  uncovered.set();
  std::vector<std::size_t> chosen;
  while (uncovered.any()) {
    std::size_t best = sets.size();
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const std::size_t gain = (sets[i] & uncovered).count();
      if (gain > best_gain || (gain == best_gain && gain > 0 && before(i, best))) {
        best = i;
        best_gain = gain;
      }
    }
    if (best_gain == 0) break;
    chosen.push_back(best);
    uncovered -= sets[best];
  }
  return chosen;
}

/// Minimum number of sets covering every element that some set contains.
/// Branch and bound: branches on the element with the fewest covering sets,
/// bounds with a packing of pairwise set-disjoint elements. Stops early once
/// the incumbent meets `known_lower_bound`; gives up after `node_budget`
/// nodes with optimal = false and the best cover found, which is never
/// larger than `incumbent` when one is given.
SetCoverSolution exact_set_cover(const std::vector<Bits>& sets, std::size_t universe, std::size_t node_budget,
                                 std::size_t known_lower_bound = 0,
                                 const std::vector<std::size_t>* incumbent = nullptr);

}  // namespace dfatest
