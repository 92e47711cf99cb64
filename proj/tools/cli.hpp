#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace dfatest::cli {

enum class Command { generate, exact, verify, mutants, stats };
enum class Algo { roman, alg2, alg3 };

struct RunConfig {
  Command command = Command::stats;
  Algo algo = Algo::alg3;
  std::string input;
  std::string suite;   // verify
  std::string output;  // generate; empty means stdout
  std::string seeds;   // exact; empty means the alg3 suite
  std::optional<std::size_t> max_len;
  std::size_t node_budget = 10'000'000;
  bool allow_minimize = false;
  bool color = false;
};

enum Exit : int { ok = 0, survivors = 1, input_error = 2, not_minimal = 3 };

/// Runs one command. Reports go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace dfatest::cli
