#include "dfatest/set_cover.hpp"

#include <algorithm>
#include <numeric>

namespace dfatest {

std::vector<std::size_t> greedy_set_cover(const std::vector<Bits>& sets, std::size_t universe) {
  return greedy_set_cover(sets, universe, [](std::size_t i, std::size_t j) { return i < j; });
}

namespace {

struct Reduced {
  std::vector<Bits> sets;            // over the kept elements
  std::vector<std::size_t> origin;   // kept set -> input index
  std::size_t universe = 0;
};

// Drops elements whose covering sets include all covering sets of another
// element (covering that one covers this one too) and sets whose kept
// elements lie inside another set's, until nothing changes.
Reduced reduce(const std::vector<Bits>& sets, std::size_t universe) {
  std::vector<std::size_t> live_sets;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sets[i].any()) live_sets.push_back(i);
  Bits live_elems(universe);
  for (std::size_t i : live_sets) live_elems |= sets[i];

  bool changed = true;
  while (changed) {
    changed = false;
    // Element -> covering sets (as positions in live_sets).
    std::vector<std::size_t> elems;
    for (std::size_t e = live_elems.find_first(); e != Bits::npos; e = live_elems.find_next(e)) elems.push_back(e);
    std::vector<Bits> covering(elems.size(), Bits(live_sets.size()));
    for (std::size_t k = 0; k < elems.size(); ++k)
      for (std::size_t s = 0; s < live_sets.size(); ++s)
        if (sets[live_sets[s]][elems[k]]) covering[k].set(s);
    std::vector<bool> drop(elems.size(), false);
    for (std::size_t k = 0; k < elems.size(); ++k) {
      if (drop[k]) continue;
      for (std::size_t l = 0; l < elems.size(); ++l) {
        if (l == k || drop[l] || !covering[k].is_subset_of(covering[l])) continue;
        if (covering[k] == covering[l] && l < k) continue;
        drop[l] = true;
      }
    }
    for (std::size_t k = 0; k < elems.size(); ++k)
      if (drop[k]) {
        live_elems.reset(elems[k]);
        changed = true;
      }

    std::vector<Bits> restricted;
    for (std::size_t i : live_sets) restricted.push_back(sets[i] & live_elems);
    std::vector<std::size_t> order(live_sets.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return restricted[a].count() > restricted[b].count(); });
    std::vector<std::size_t> kept;
    for (std::size_t i : order) {
      if (restricted[i].none()) continue;
      const bool dominated = std::any_of(kept.begin(), kept.end(),
                                         [&](std::size_t k) { return restricted[i].is_subset_of(restricted[k]); });
      if (!dominated) kept.push_back(i);
    }
    if (kept.size() != live_sets.size()) changed = true;
    std::sort(kept.begin(), kept.end());
    std::vector<std::size_t> next;
    for (std::size_t i : kept) next.push_back(live_sets[i]);
    live_sets = std::move(next);
  }

  Reduced out;
  std::vector<std::size_t> remap(universe, 0);
  for (std::size_t e = live_elems.find_first(); e != Bits::npos; e = live_elems.find_next(e)) remap[e] = out.universe++;
  for (std::size_t i : live_sets) {
    Bits b(out.universe);
    const Bits r = sets[i] & live_elems;
    for (std::size_t e = r.find_first(); e != Bits::npos; e = r.find_next(e)) b.set(remap[e]);
    out.sets.push_back(std::move(b));
    out.origin.push_back(i);
  }
  return out;
}

class Search {
 public:
  Search(const std::vector<Bits>& sets, std::size_t universe, std::size_t budget, std::size_t floor,
         std::size_t ceiling)
      : sets_(sets), universe_(universe), budget_(budget), floor_(floor), ceiling_(ceiling), containing_(universe),
        reach_(universe, Bits(universe)) {
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t e = sets[i].find_first(); e != Bits::npos; e = sets[i].find_next(e)) {
        containing_[e].push_back(i);
        reach_[e] |= sets[i];
      }
    order_.resize(universe);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return containing_[a].size() < containing_[b].size();
    });
  }

  SetCoverSolution run() {
    Bits uncovered(universe_);
    uncovered.set();
    best_ = greedy_set_cover(sets_, universe_);
    ceiling_ = std::min(ceiling_, best_.size());
    floor_ = std::max(floor_, bound(uncovered));
    std::vector<std::size_t> chosen;
    if (ceiling_ > floor_) recurse(uncovered, chosen);
    SetCoverSolution out;
    out.chosen = best_;
    out.optimal = !exhausted_;
    out.nodes = nodes_;
    return out;
  }

 private:
  // Elements no two of which share a set each need their own set.
  std::size_t bound(const Bits& uncovered) const {
    Bits blocked = ~uncovered;
    std::size_t packing = 0;
    for (std::size_t e : order_) {
      if (blocked[e]) continue;
      ++packing;
      blocked |= reach_[e];
    }
    return packing;
  }

  bool recurse(const Bits& uncovered, std::vector<std::size_t>& chosen) {
    if (uncovered.none()) {
      if (chosen.size() < ceiling_) {
        best_ = chosen;
        ceiling_ = chosen.size();
      }
      return ceiling_ > floor_;
    }
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (chosen.size() + bound(uncovered) >= ceiling_) return true;

    std::size_t pivot = uncovered.find_first();
    for (std::size_t e = pivot; e != Bits::npos; e = uncovered.find_next(e))
      if (containing_[e].size() < containing_[pivot].size()) pivot = e;
    auto options = containing_[pivot];
    std::vector<std::size_t> gain(sets_.size());
    for (std::size_t s : options) gain[s] = (sets_[s] & uncovered).count();
    std::stable_sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) { return gain[a] > gain[b]; });
    for (std::size_t s : options) {
      chosen.push_back(s);
      const bool go_on = recurse(uncovered - sets_[s], chosen);
      chosen.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const std::vector<Bits>& sets_;
  std::size_t universe_;
  std::size_t budget_;
  std::size_t floor_;
  std::size_t ceiling_;  // size any new cover has to beat
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<Bits> reach_;  // union of the sets containing each element
  std::vector<std::size_t> order_;
  std::vector<std::size_t> best_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

SetCoverSolution exact_set_cover(const std::vector<Bits>& sets, std::size_t universe, std::size_t node_budget,
                                 std::size_t known_lower_bound, const std::vector<std::size_t>* incumbent) {
  const Reduced r = reduce(sets, universe);
  const std::size_t ceiling = incumbent ? incumbent->size() : r.sets.size() + 1;
  auto sol = Search(r.sets, r.universe, node_budget, known_lower_bound, ceiling).run();
  for (auto& i : sol.chosen) i = r.origin[i];
  if (incumbent && incumbent->size() < sol.chosen.size()) sol.chosen = *incumbent;
  std::sort(sol.chosen.begin(), sol.chosen.end());
  return sol;
}

}  // namespace dfatest
