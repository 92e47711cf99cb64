#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "dfatest/cover.hpp"
#include "dfatest/error.hpp"
#include "dfatest/generate.hpp"

namespace dfatest::cli {

namespace {

class Painter {
 public:
  explicit Painter(bool on) : on_(on) {}
  std::string red(std::string_view s) const { return wrap("31", s); }
  std::string green(std::string_view s) const { return wrap("32", s); }
  std::string bold(std::string_view s) const { return wrap("1", s); }

 private:
  std::string wrap(const char* code, std::string_view s) const {
    if (!on_) return std::string(s);
    return "\x1b[" + std::string(code) + "m" + std::string(s) + "\x1b[0m";
  }
  bool on_;
};

struct InputError {
  std::string message;
};

std::ifstream open(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw InputError{std::string("cannot open ") + what + " '" + path + "'"};
  return in;
}

const char* algo_name(Algo a) {
  switch (a) {
    case Algo::roman: return "roman";
    case Algo::alg2: return "alg2";
    case Algo::alg3: return "alg3";
  }
  return "?";
}

int generate(const RunConfig& cfg, const Dfa& dfa, std::ostream& out) {
  TestSuite suite = cfg.algo == Algo::roman  ? generate_roman(dfa)
                    : cfg.algo == Algo::alg2 ? generate_alg2(dfa)
                                             : generate_alg3(dfa);
  out << "# algorithm: " << algo_name(cfg.algo) << '\n';
  out << "# words: " << suite.size() << '\n';
  for (Phase p : {Phase::sink_preprocess, Phase::accept_path, Phase::reject_path, Phase::option_cover,
                  Phase::completion})
    out << "# phase " << to_string(p) << ": " << suite.count(p) << '\n';
  if (cfg.output.empty()) {
    write_suite(out, suite);
    return ok;
  }
  std::ofstream file(cfg.output);
  if (!file) throw InputError{"cannot write '" + cfg.output + "'"};
  write_suite(file, suite);
  out << "# written: " << cfg.output << '\n';
  return ok;
}

int exact(const RunConfig& cfg, const Dfa& dfa, std::ostream& out) {
  std::vector<Word> seeds;
  if (!cfg.seeds.empty()) {
    auto in = open(cfg.seeds, "seed suite");
    seeds = read_suite(in, dfa);
  } else {
    seeds = generate_alg3(dfa).words();
  }
  const std::size_t max_len = cfg.max_len.value_or(default_max_len(dfa));
  auto pool = candidate_pool(dfa, max_len, seeds);
  const auto instance = make_cover_instance(dfa, std::move(pool), max_len, cfg.node_budget);
  out << "# pool: " << instance.matrix.words.size() << " words up to length " << max_len << '\n';
  out << format_cover_report(solve_exact(instance));
  return ok;
}

int verify(const RunConfig& cfg, const Dfa& dfa, std::ostream& out, const Painter& paint) {
  auto in = open(cfg.suite, "suite");
  const auto words = read_suite(in, dfa);
  const auto report = verify_suite(dfa, words);
  out << "total_faults: " << report.total_faults << '\n';
  out << "killed: " << report.killed << '\n';
  out << "survivors: " << report.survivors.size() << '\n';
  for (const auto& s : report.survivors)
    out << paint.red("survivor") << ' ' << format_fault(dfa, s.fault) << " missing "
        << (s.missing_word ? render_word(*s.missing_word) : "-") << '\n';
  if (report.complete()) {
    out << paint.green("complete") << '\n';
    return ok;
  }
  return survivors;
}

int mutants(const Dfa& dfa, std::ostream& out) {
  const auto faults = enumerate_faults(dfa);
  out << faults.size() << " faults\n";
  for (const auto& f : faults) {
    const auto w = shortest_detecting_word(dfa, f);
    out << format_fault(dfa, f) << '\t' << (w ? render_word(*w) : "-") << '\n';
  }
  return ok;
}

int stats(const Dfa& dfa, std::ostream& out, const Painter& paint) {
  out << "states: " << dfa.num_states() << '\n';
  out << "letters: " << dfa.num_letters() << '\n';
  out << "faults: " << enumerate_faults(dfa).size() << '\n';
  out << "minimal: " << (is_minimal(dfa) ? "true" : "false") << '\n';
  const auto sinks = find_sinkholes(dfa);
  out << "sinkholes:";
  if (sinks.sinks.empty()) out << " none";
  for (const auto& s : sinks.sinks)
    out << ' ' << dfa.state_name(s.state) << (s.polarity == Polarity::negative ? " (negative)" : " (positive)");
  out << '\n';
  // A missing transition reads as one into a rejecting trap state.
  if (const auto x = sinks.negative())
    out << "missing_transition: realizable via " << dfa.state_name(*x) << '\n';
  else
    out << "missing_transition: not realizable (no negative sinkhole)\n";
  const auto table = pair_sync_table(dfa);
  std::size_t merging = 0;
  std::size_t into_final = 0;
  for (const auto& e : table.entries()) {
    merging += e.merge_word.has_value();
    into_final += e.merges_into_final();
  }
  out << "pairs: " << table.entries().size() << ", synchronizable: " << merging
      << ", into final: " << into_final << '\n';
  for (const auto& e : table.entries())
    if (e.merges_into_final())
      out << paint.bold("{" + dfa.state_name(e.first) + "," + dfa.state_name(e.second) + "}") << " -> "
          << render_word(*e.final_word) << " @ " << dfa.state_name(e.final_state) << '\n';
  return ok;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Painter paint(cfg.color);
  try {
    auto in = open(cfg.input, "automaton");
    Dfa dfa = parse_dfa(in);
    if (cfg.command != Command::stats && !is_minimal(dfa)) {
      const Dfa m = minimize(dfa);
      if (!cfg.allow_minimize) {
        err << paint.red("error:") << " automaton is not minimal (" << dfa.num_states() << " states, "
            << m.num_states() << " after minimization); pass --allow-minimize to use the minimized one\n";
        return not_minimal;
      }
      out << "# minimized: " << dfa.num_states() << " -> " << m.num_states() << " states\n";
      dfa = m;
    }
    switch (cfg.command) {
      case Command::generate: return generate(cfg, dfa, out);
      case Command::exact: return exact(cfg, dfa, out);
      case Command::verify: return verify(cfg, dfa, out, paint);
      case Command::mutants: return mutants(dfa, out);
      case Command::stats: return stats(dfa, out, paint);
    }
  } catch (const InputError& e) {
    err << paint.red("error:") << ' ' << e.message << '\n';
    return input_error;
  } catch (const Error& e) {
    err << paint.red("error:") << ' ' << e.what() << '\n';
    return e.kind() == ErrorKind::NotMinimal ? not_minimal : input_error;
  }
  return input_error;
}

}  // namespace dfatest::cli
