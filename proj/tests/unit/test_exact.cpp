#include <catch2/catch.hpp>

#include <algorithm>

#include "dfatest/cover.hpp"
#include "dfatest/error.hpp"
#include "dfatest/generate.hpp"
#include "support.hpp"

using namespace dfatest;
using testsupport::fault;
using testsupport::example5;

namespace {

bool covers_all(const Dfa& d, const std::vector<Word>& words, const std::vector<TransitionFault>& faults) {
  const auto m = kill_matrix(d, words, faults);
  for (std::size_t f = 0; f < faults.size(); ++f)
    if (!m.column_covered(f)) return false;
  return true;
}

// Whether some word of length <= max_len kills both faults, by enumeration.
bool brute_compatible(const Dfa& d, const TransitionFault& f, const TransitionFault& g, std::size_t max_len) {
  const auto spec = testsupport::to_map(d);
  const auto mf = testsupport::with_fault(spec, d, f);
  const auto mg = testsupport::with_fault(spec, d, g);
  for (const auto& w : testsupport::all_words(d.alphabet(), max_len)) {
    const bool s = testsupport::accepts_map(spec, w);
    if (testsupport::accepts_map(mf, w) != s && testsupport::accepts_map(mg, w) != s) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("candidate_pool examples", "[exact]") {
  const Dfa d = example5();
  const auto seeds = generate_alg3(d).words();
  const auto pool = candidate_pool(d, 24, seeds);
  const auto faults = enumerate_faults(d);
  const auto target = kill_vector(d, "aabbaa", faults);
  CHECK(std::any_of(pool.begin(), pool.end(), [&](const Word& w) { return kill_vector(d, w, faults) == target; }));
  CHECK(std::is_sorted(pool.begin(), pool.end(), [&](const Word& a, const Word& b) { return shortlex_less(d, a, b); }));
  for (const auto& s : seeds) CHECK(std::find(pool.begin(), pool.end(), s) != pool.end());

  CHECK(candidate_pool(d, 0, {}).empty());
  CHECK(candidate_pool(testsupport::single_state(), 5, {}).empty());
  CHECK(default_max_len(d) == 24);

  PoolOptions tiny;
  tiny.max_len = 24;
  tiny.cap = 3;
  CHECK_THROWS_MATCHES(candidate_pool(d, tiny), Error,
                       Catch::Predicate<Error>([](const Error& e) { return e.kind() == ErrorKind::PoolOverflow; }));
}

TEST_CASE("pruned pools keep only maximal kill vectors", "[exact]") {
  const Dfa d = example5();
  const auto faults = enumerate_faults(d);
  const auto pool = candidate_pool(d, 10, {});
  std::vector<Bits> vecs;
  for (const auto& w : pool) vecs.push_back(kill_vector(d, w, faults));
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    CHECK(vecs[i].any());
    for (std::size_t j = 0; j < vecs.size(); ++j)
      if (i != j) CHECK_FALSE((vecs[i].is_proper_subset_of(vecs[j])));
  }
  // Every word up to length 6 is dominated by some pool word.
  for (const auto& w : testsupport::all_words(d.alphabet(), 6)) {
    const auto v = kill_vector(d, w, faults);
    CHECK(std::any_of(vecs.begin(), vecs.end(), [&](const Bits& p) { return v.is_subset_of(p); }));
  }
}

TEST_CASE("solve_exact on the five-state example", "[exact]") {
  const Dfa d = example5();
  const auto instance = make_cover_instance(d, candidate_pool(d, 24, generate_alg3(d).words()), 24);
  const auto result = solve_exact(instance);
  CHECK(result.optimal);
  CHECK(covers_all(d, result.words, enumerate_faults(d)));
  CHECK(result.lower_bound <= result.words.size());
  // Six words suffice (confirmed by an independent simulation) and six
  // faults are pairwise incompatible, so six is the true minimum.
  CHECK(result.words.size() == 6);
  CHECK(result.lower_bound == 6);
  const auto greedy = greedy_cover(instance);
  CHECK(covers_all(d, greedy.words, enumerate_faults(d)));
  CHECK(greedy.words.size() >= result.words.size());

  const auto report = format_cover_report(result);
  CHECK(report.rfind("optimum: 6 (pool-optimal)\nlower_bound: 6 (unrestricted)\noptimal_closed: true\n", 0) == 0);
}

TEST_CASE("solve_exact small instances", "[exact]") {
  const Dfa d = example5();
  const auto f = fault(d, "1", 'a', "X");
  CoverInstance single{d, kill_matrix(d, {"aaa", "b", "aabbaa"}, {f}), 6};
  const auto exact = solve_exact(single);
  REQUIRE(exact.words.size() == 1);
  CHECK(exact.optimal);
  CHECK(greedy_cover(single).words == exact.words);

  // Faults that aabbaa kills, all covered by that one word.
  std::vector<TransitionFault> shared;
  for (const auto& g : enumerate_faults(d))
    if (kills(d, g, "aabbaa")) shared.push_back(g);
  REQUIRE(shared.size() > 1);
  CoverInstance common{d, kill_matrix(d, {"aabbaa", "aaa", "b"}, shared), 6};
  const auto r = solve_exact(common);
  CHECK(r.words.size() == 1);
  CHECK(r.lower_bound == 1);
  CHECK(incompatibility_lower_bound(common) == 1);

  CHECK(incompatibility_lower_bound(d, std::vector<TransitionFault>{}) == 0);

  CoverInstance infeasible{d, kill_matrix(d, {"b"}, {f}), 1};
  CHECK_THROWS_MATCHES(solve_exact(infeasible), Error,
                       Catch::Predicate<Error>([](const Error& e) { return e.kind() == ErrorKind::Infeasible; }));
  CHECK_THROWS_AS(greedy_cover(infeasible), Error);
}

TEST_CASE("property: fault compatibility agrees with word enumeration", "[exact][property]") {
  std::mt19937 rng(1001);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    const Dfa d = testsupport::random_dfa(rng, n, 1 + rng() % 2);
    const auto faults = enumerate_faults(d);
    // The triple product has at most n^3 states; enumerate that far for n = 2
    // and to length 10 (a one-sided check) for n = 3.
    const std::size_t depth = n == 2 ? 8 : 10;
    for (std::size_t i = 0; i < faults.size(); ++i)
      for (std::size_t j = i; j < faults.size(); ++j) {
        const bool lib = faults_compatible(d, faults[i], faults[j]);
        const bool brute = brute_compatible(d, faults[i], faults[j], depth);
        if (brute) CHECK(lib);
        if (n == 2) CHECK(lib == brute);
      }
  }
}

TEST_CASE("property: exact cover is sound, bounded and never worse than greedy", "[exact][property]") {
  std::mt19937 rng(1002);
  int closed = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Dfa d = testsupport::random_minimal_dfa(rng, 5, 3);
    const std::size_t max_len = d.num_states() + 2;
    std::vector<Word> seeds = generate_alg3(d).words();
    const auto instance = make_cover_instance(d, candidate_pool(d, max_len, seeds), max_len, 200'000);
    const auto exact = solve_exact(instance);
    const auto greedy = greedy_cover(instance);
    const auto faults = enumerate_faults(d);
    CHECK(covers_all(d, exact.words, faults));
    CHECK(covers_all(d, greedy.words, faults));
    CHECK(exact.lower_bound <= exact.words.size());
    CHECK(exact.words.size() <= greedy.words.size());
    CHECK(exact.words.size() <= seeds.size());
    closed += exact.optimal;
  }
  CHECK(closed > 0);
}

TEST_CASE("property: pool pruning preserves the optimum", "[exact][property]") {
  std::mt19937 rng(1003);
  int compared = 0;
  int skipped = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Dfa d = testsupport::random_minimal_dfa(rng, 5, 2);
    if (d.num_letters() != 2) continue;
    const std::size_t max_len = d.num_states() * d.num_states();
    PoolOptions pruned{max_len, {}, true, 50'000};
    PoolOptions full{max_len, {}, false, 50'000};
    try {
      const auto a = solve_exact(make_cover_instance(d, candidate_pool(d, pruned), max_len, 200'000));
      const auto b = solve_exact(make_cover_instance(d, candidate_pool(d, full), max_len, 200'000));
      if (!a.optimal || !b.optimal) {
        ++skipped;
        continue;
      }
      CHECK(a.words.size() == b.words.size());
      ++compared;
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::PoolOverflow);
      ++skipped;
    }
  }
  INFO("compared " << compared << ", skipped " << skipped);
  CHECK(compared >= 10);
}
