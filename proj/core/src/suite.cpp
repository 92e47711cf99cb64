#include <istream>
#include <ostream>

#include "dfatest/error.hpp"
#include "dfatest/generate.hpp"

namespace dfatest {

std::string_view to_string(Phase phase) noexcept {
  switch (phase) {
    case Phase::sink_preprocess: return "sink-preprocess";
    case Phase::accept_path: return "accept-path";
    case Phase::reject_path: return "reject-path";
    case Phase::option_cover: return "option-cover";
    case Phase::completion: return "completion";
  }
  return "unknown";
}

bool TestSuite::add(Word word, Phase phase, Word prefix) {
  if (!index_.insert(word).second) return false;
  words_.push_back(std::move(word));
  provenance_.push_back({phase, std::move(prefix)});
  return true;
}

std::size_t TestSuite::count(Phase phase) const {
  std::size_t n = 0;
  for (const auto& p : provenance_) n += p.phase == phase;
  return n;
}

std::vector<Word> TestSuite::words_of(Phase phase) const {
  std::vector<Word> out;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (provenance_[i].phase == phase) out.push_back(words_[i]);
  return out;
}

void write_suite(std::ostream& out, const TestSuite& suite, bool with_provenance) {
  for (std::size_t i = 0; i < suite.size(); ++i) {
    if (with_provenance) {
      const auto& p = suite.provenance()[i];
      out << "# provenance: " << to_string(p.phase) << " u=" << render_word(p.prefix) << '\n';
    }
    out << render_word(suite.words()[i]) << '\n';
  }
}

std::vector<Word> read_suite(std::istream& in, const Dfa& dfa) {
  std::vector<Word> words;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    if (token.find_first_of(" \t") != std::string::npos)
      throw Error(ErrorKind::MalformedLine, "one word per line expected", line_no);
    try {
      words.push_back(parse_word(dfa, token));
    } catch (const Error& e) {
      throw Error(e.kind(), "word '" + token + "' uses a letter outside the alphabet", line_no);
    }
  }
  return words;
}

EdgeSet all_edges(const Dfa& dfa) {
  EdgeSet e(dfa.num_edges());
  e.set();
  return e;
}

}  // namespace dfatest
