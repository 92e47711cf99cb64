#include <catch2/catch.hpp>

#include <random>
#include <set>

#include "dfatest/set_cover.hpp"
#include "support.hpp"

using namespace dfatest;

namespace {

std::vector<Bits> to_bits(const std::vector<std::set<std::size_t>>& sets, std::size_t universe) {
  std::vector<Bits> out;
  for (const auto& s : sets) {
    Bits b(universe);
    for (std::size_t e : s) b.set(e);
    out.push_back(b);
  }
  return out;
}

bool covers_union(const std::vector<Bits>& sets, const std::vector<std::size_t>& chosen) {
  Bits all(sets.empty() ? 0 : sets[0].size());
  Bits got(all.size());
  for (const auto& s : sets) all |= s;
  for (std::size_t i : chosen) got |= sets[i];
  return got == all;
}

}  // namespace

TEST_CASE("greedy set cover takes the largest gain, lower index on ties", "[setcover]") {
  const auto sets = to_bits({{0, 1}, {2, 3}, {0, 1, 2}, {3}}, 4);
  CHECK(greedy_set_cover(sets, 4) == std::vector<std::size_t>{2, 1});
  const auto ties = to_bits({{0}, {1}, {0}}, 2);
  CHECK(greedy_set_cover(ties, 2) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("exact set cover beats greedy on the classic trap", "[setcover]") {
  // Greedy picks the middle set first and needs three; two suffice.
  const auto sets = to_bits({{0, 1, 2, 3, 4, 5, 6}, {7, 8, 9, 10, 11, 12, 13}, {0, 1, 2, 7, 8, 9, 14, 15},
                             {3, 4, 10, 11, 16}, {5, 6, 12, 13}},
                            17);
  // Universe includes 14..16, so the trap needs set 2 and 3 as well; just
  // check exactness against brute force.
  const auto sol = exact_set_cover(sets, 17, 1000);
  CHECK(sol.optimal);
  CHECK(covers_union(sets, sol.chosen));
  std::vector<std::set<std::size_t>> raw;
  for (const auto& b : sets) {
    std::set<std::size_t> s;
    for (std::size_t e = b.find_first(); e != Bits::npos; e = b.find_next(e)) s.insert(e);
    raw.push_back(s);
  }
  CHECK(sol.chosen.size() == testsupport::brute_min_cover(raw));
}

TEST_CASE("exact set cover honours the incumbent and the budget", "[setcover]") {
  const auto sets = to_bits({{0}, {1}, {2}, {0, 1, 2}}, 3);
  const std::vector<std::size_t> incumbent{3};
  const auto sol = exact_set_cover(sets, 3, 10, 0, &incumbent);
  CHECK(sol.chosen == incumbent);
  const auto none = exact_set_cover({}, 0, 10);
  CHECK(none.chosen.empty());
  CHECK(none.optimal);
}

TEST_CASE("property: exact set cover equals brute force", "[setcover][property]") {
  std::mt19937 rng(901);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t universe = 1 + rng() % 12;
    const std::size_t k = 1 + rng() % 12;
    std::vector<std::set<std::size_t>> raw(k);
    for (auto& s : raw)
      for (std::size_t e = 0; e < universe; ++e)
        if (rng() % 3 == 0) s.insert(e);
    const auto sets = to_bits(raw, universe);
    const auto sol = exact_set_cover(sets, universe, 1'000'000);
    REQUIRE(sol.optimal);
    CHECK(covers_union(sets, sol.chosen));
    CHECK(sol.chosen.size() == testsupport::brute_min_cover(raw));
    const auto greedy = greedy_set_cover(sets, universe);
    CHECK(covers_union(sets, greedy));
    CHECK(sol.chosen.size() <= greedy.size());
  }
}
