#include <cstdlib>
#include <cstring>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

using dfatest::cli::Algo;
using dfatest::cli::Command;

int main(int argc, char** argv) {
  CLI::App app{"Test-suite generation for single wrong-transition faults in DFAs"};
  app.require_subcommand(1);
  dfatest::cli::RunConfig cfg;

  auto* gen = app.add_subcommand("generate", "Generate a test suite");
  gen->add_option("--algo", cfg.algo, "roman, alg2 or alg3")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Algo>{{"roman", Algo::roman}, {"alg2", Algo::alg2}, {"alg3", Algo::alg3}}))
      ->required();
  gen->add_option("--input", cfg.input, "Automaton file")->required();
  gen->add_option("--out", cfg.output, "Suite file (default: stdout)");
  gen->add_flag("--allow-minimize", cfg.allow_minimize, "Minimize a non-minimal input instead of failing");

  auto* ex = app.add_subcommand("exact", "Minimum suite over a bounded candidate pool");
  ex->add_option("--input", cfg.input, "Automaton file")->required();
  ex->add_option("--max-len", cfg.max_len, "Longest candidate word (default |Q|^2-1)");
  ex->add_option("--node-budget", cfg.node_budget, "Branch-and-bound node cap");
  ex->add_option("--seeds", cfg.seeds, "Suite file whose words join the pool (default: the alg3 suite)");
  ex->add_flag("--allow-minimize", cfg.allow_minimize, "Minimize a non-minimal input instead of failing");

  auto* ver = app.add_subcommand("verify", "Check which faults a suite kills");
  ver->add_option("--input", cfg.input, "Automaton file")->required();
  ver->add_option("--suite", cfg.suite, "Suite file")->required();
  ver->add_flag("--allow-minimize", cfg.allow_minimize, "Minimize a non-minimal input instead of failing");

  auto* mut = app.add_subcommand("mutants", "List all faults with a shortest detecting word");
  mut->add_option("--input", cfg.input, "Automaton file")->required();
  mut->add_flag("--allow-minimize", cfg.allow_minimize, "Minimize a non-minimal input instead of failing");

  auto* st = app.add_subcommand("stats", "Summarize an automaton");
  st->add_option("--input", cfg.input, "Automaton file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : dfatest::cli::input_error;
  }

  if (*gen) cfg.command = Command::generate;
  if (*ex) cfg.command = Command::exact;
  if (*ver) cfg.command = Command::verify;
  if (*mut) cfg.command = Command::mutants;
  if (*st) cfg.command = Command::stats;
  const char* color = std::getenv("DFATEST_COLOR");
  cfg.color = color != nullptr && std::strcmp(color, "1") == 0;
  return dfatest::cli::run(cfg, std::cout, std::cerr);
}
