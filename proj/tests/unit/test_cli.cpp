#include <catch2/catch.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace dfatest;
using cli::Command;
using cli::RunConfig;

namespace fs = std::filesystem;

namespace {

const std::string kData = DFATEST_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const RunConfig& cfg) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(Command c, const std::string& input) {
  RunConfig cfg;
  cfg.command = c;
  cfg.input = input;
  return cfg;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("dfatest-" + std::to_string(std::random_device{}()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& contents = {}) const {
    const auto p = path_ / name;
    if (!contents.empty()) std::ofstream(p) << contents;
    return p.string();
  }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli verify with the 14-word suite", "[cli]") {
  auto cfg = config(Command::verify, kData + "/roman.dfa");
  cfg.suite = kData + "/roman_alg3_suite.txt";
  const auto r = run(cfg);
  CHECK(r.code == cli::ok);
  CHECK(r.out == "total_faults: 40\nkilled: 40\nsurvivors: 0\ncomplete\n");
}

TEST_CASE("cli verify with an empty suite", "[cli]") {
  TempDir tmp;
  auto cfg = config(Command::verify, kData + "/roman.dfa");
  cfg.suite = tmp.file("empty.txt", "# nothing\n");
  const auto r = run(cfg);
  CHECK(r.code == cli::survivors);
  CHECK(r.out.find("killed: 0\nsurvivors: 40\n") != std::string::npos);
  CHECK(r.out.find("survivor 1 -a-> 1 missing ") != std::string::npos);
}

TEST_CASE("cli mutants", "[cli]") {
  const auto single = run(config(Command::mutants, kData + "/single_state.dfa"));
  CHECK(single.code == cli::ok);
  CHECK(single.out == "0 faults\n");
  const auto fig = run(config(Command::mutants, kData + "/roman.dfa"));
  CHECK(fig.out.rfind("40 faults\n", 0) == 0);
  CHECK(fig.out.find("1 -a-> X\taaa\n") != std::string::npos);
}

TEST_CASE("cli stats", "[cli]") {
  const auto r = run(config(Command::stats, kData + "/roman.dfa"));
  CHECK(r.code == cli::ok);
  CHECK(r.out ==
        "states: 5\nletters: 2\nfaults: 40\nminimal: true\nsinkholes: X (negative)\n"
        "missing_transition: realizable via X\npairs: 10, synchronizable: 10, into final: 2\n"
        "{1,2} -> abaa @ A\n{2,3} -> baa @ A\n");
}

TEST_CASE("cli generate writes suites that verify", "[cli]") {
  TempDir tmp;
  for (auto algo : {cli::Algo::roman, cli::Algo::alg2, cli::Algo::alg3}) {
    auto cfg = config(Command::generate, kData + "/roman.dfa");
    cfg.algo = algo;
    cfg.output = tmp.file("suite.txt");
    const auto g = run(cfg);
    REQUIRE(g.code == cli::ok);
    CHECK(g.out.find("# written: ") != std::string::npos);
    auto v = config(Command::verify, kData + "/roman.dfa");
    v.suite = cfg.output;
    CHECK(run(v).code == cli::ok);
  }
  auto cfg = config(Command::generate, kData + "/roman.dfa");
  const auto r = run(cfg);
  CHECK(r.out.rfind("# algorithm: alg3\n# words: 14\n# phase sink-preprocess: 9\n", 0) == 0);
}

TEST_CASE("cli exact", "[cli]") {
  auto cfg = config(Command::exact, kData + "/roman.dfa");
  cfg.max_len = 8;
  cfg.seeds = kData + "/roman_alg3_suite.txt";
  const auto r = run(cfg);
  CHECK(r.code == cli::ok);
  CHECK(r.out.rfind("# pool: ", 0) == 0);
  CHECK(r.out.find("optimum: 9 (pool-optimal)\n") != std::string::npos);
  CHECK(r.out.find("optimal_closed: true\n") != std::string::npos);
}

TEST_CASE("cli non-minimal input", "[cli]") {
  TempDir tmp;
  const auto path = tmp.file("twins.dfa", "states: p q\nalphabet: a\ninitial: p\nfinal: p q\np a q\nq a p\n");
  const auto refused = run(config(Command::mutants, path));
  CHECK(refused.code == cli::not_minimal);
  CHECK(refused.err.find("not minimal") != std::string::npos);
  auto cfg = config(Command::mutants, path);
  cfg.allow_minimize = true;
  const auto allowed = run(cfg);
  CHECK(allowed.code == cli::ok);
  CHECK(allowed.out == "# minimized: 2 -> 1 states\n0 faults\n");
  const auto stats = run(config(Command::stats, path));
  CHECK(stats.code == cli::ok);
  CHECK(stats.out.find("minimal: false\n") != std::string::npos);
}

TEST_CASE("cli input errors", "[cli]") {
  TempDir tmp;
  CHECK(run(config(Command::stats, tmp.file("missing.dfa"))).code == cli::input_error);
  const auto broken = run(config(Command::stats, tmp.file("broken.dfa", "states: s\nalphabet: a\n")));
  CHECK(broken.code == cli::input_error);
  CHECK(broken.err.find("error:") != std::string::npos);
  auto cfg = config(Command::verify, kData + "/roman.dfa");
  cfg.suite = tmp.file("bad.txt", "abc\n");
  CHECK(run(cfg).code == cli::input_error);
}

TEST_CASE("cli color only on request", "[cli]") {
  TempDir tmp;
  auto cfg = config(Command::verify, kData + "/roman.dfa");
  cfg.suite = tmp.file("empty.txt", "# nothing\n");
  CHECK(run(cfg).out.find('\x1b') == std::string::npos);
  cfg.color = true;
  CHECK(run(cfg).out.find("\x1b[31msurvivor\x1b[0m") != std::string::npos);
}

TEST_CASE("property: cli output is deterministic and generated suites verify", "[cli][property]") {
  TempDir tmp;
  std::mt19937 rng(1101);
  for (int trial = 0; trial < 15; ++trial) {
    const auto input = tmp.file("a.dfa", to_text(testsupport::random_minimal_dfa(rng, 6, 3)));
    for (auto algo : {cli::Algo::roman, cli::Algo::alg2, cli::Algo::alg3}) {
      auto cfg = config(Command::generate, input);
      cfg.algo = algo;
      cfg.output = tmp.file("one.txt");
      run(cfg);
      const std::string one = slurp(cfg.output);
      cfg.output = tmp.file("two.txt");
      run(cfg);
      CHECK(one == slurp(cfg.output));
      auto v = config(Command::verify, input);
      v.suite = cfg.output;
      CHECK(run(v).code == cli::ok);
    }
    CHECK(run(config(Command::stats, input)).out == run(config(Command::stats, input)).out);
  }
}
