#include <istream>
#include <map>
#include <sstream>

#include "dfatest/dfa.hpp"
#include "dfatest/error.hpp"

namespace dfatest {

namespace {

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

struct Header {
  std::vector<std::string> tokens;
  std::size_t line = 0;
};

struct RawTransition {
  std::string from, letter, to;
  std::size_t line;
};

void check_state_token(const std::string& tok, std::size_t line) {
  if (tok.find('<') != std::string::npos)
    throw Error(ErrorKind::MalformedLine, "state token '" + tok + "' must not contain '<'", line);
}

}  // namespace

Dfa parse_dfa(std::istream& in) {
  std::map<std::string, Header> headers;
  std::vector<RawTransition> raw;
  std::string line_text;
  std::size_t line_no = 0;

  while (std::getline(in, line_text)) {
    ++line_no;
    std::string_view line = trim(line_text);
    if (line.empty() || line.front() == '#') continue;

    const auto colon = line.find(':');
    if (colon != std::string_view::npos) {
      std::string key(trim(line.substr(0, colon)));
      if (key == "states" || key == "alphabet" || key == "initial" || key == "final") {
        if (headers.count(key))
          throw Error(ErrorKind::MalformedLine, "header '" + key + "' appears twice", line_no);
        headers[key] = Header{split_ws(line.substr(colon + 1)), line_no};
        continue;
      }
    }
    auto toks = split_ws(line);
    if (toks.size() != 3)
      throw Error(ErrorKind::MalformedLine, "expected '<state> <letter> <state>'", line_no);
    raw.push_back({toks[0], toks[1], toks[2], line_no});
  }

  for (const char* key : {"states", "alphabet", "initial", "final"})
    if (!headers.count(key))
      throw Error(ErrorKind::MalformedLine, std::string("missing header '") + key + ":'", line_no);

  const auto& states = headers["states"];
  if (states.tokens.empty()) throw Error(ErrorKind::MalformedLine, "no states declared", states.line);
  std::map<std::string, StateId> state_ids;
  for (const auto& tok : states.tokens) {
    check_state_token(tok, states.line);
    if (!state_ids.emplace(tok, static_cast<StateId>(state_ids.size())).second)
      throw Error(ErrorKind::MalformedLine, "duplicate state '" + tok + "'", states.line);
  }

  const auto& alpha = headers["alphabet"];
  if (alpha.tokens.empty()) throw Error(ErrorKind::MalformedLine, "empty alphabet", alpha.line);
  std::string alphabet;
  for (const auto& tok : alpha.tokens) {
    if (tok.size() != 1 || tok[0] == '<')
      throw Error(ErrorKind::MalformedLine, "letters must be single characters other than '<'", alpha.line);
    if (alphabet.find(tok[0]) != std::string::npos)
      throw Error(ErrorKind::MalformedLine, "duplicate letter '" + tok + "'", alpha.line);
    alphabet.push_back(tok[0]);
  }

  auto lookup_state = [&](const std::string& tok, std::size_t line) {
    auto it = state_ids.find(tok);
    if (it == state_ids.end()) throw Error(ErrorKind::UnknownState, "unknown state '" + tok + "'", line);
    return it->second;
  };

  const auto& init = headers["initial"];
  if (init.tokens.size() != 1)
    throw Error(ErrorKind::MalformedLine, "exactly one initial state expected", init.line);
  const StateId initial = lookup_state(init.tokens[0], init.line);

  std::vector<bool> finals(state_ids.size(), false);
  const auto& fin = headers["final"];
  for (const auto& tok : fin.tokens) finals[lookup_state(tok, fin.line)] = true;

  const std::size_t k = alphabet.size();
  constexpr StateId unset = ~StateId{0};
  std::vector<StateId> delta(state_ids.size() * k, unset);
  for (const auto& t : raw) {
    const StateId from = lookup_state(t.from, t.line);
    if (t.letter.size() != 1 || alphabet.find(t.letter[0]) == std::string::npos)
      throw Error(ErrorKind::UnknownLetter, "unknown letter '" + t.letter + "'", t.line);
    const auto a = alphabet.find(t.letter[0]);
    const StateId to = lookup_state(t.to, t.line);
    auto& slot = delta[from * k + a];
    if (slot != unset)
      throw Error(ErrorKind::DuplicateTransition,
                  "second transition for (" + t.from + ", " + t.letter + ")", t.line);
    slot = to;
  }

  std::vector<std::string> names(state_ids.size());
  for (const auto& [name, id] : state_ids) names[id] = name;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (delta[i] == unset)
      throw Error(ErrorKind::MissingTransition,
                  "no transition for (" + names[i / k] + ", " + std::string(1, alphabet[i % k]) + ")",
                  line_no);
  }
  return Dfa(std::move(names), std::move(alphabet), std::move(delta), initial, std::move(finals));
}

Dfa parse_dfa_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dfa(in);
}

std::string to_text(const Dfa& dfa) {
  std::ostringstream out;
  out << "states:";
  for (const auto& n : dfa.state_names()) out << ' ' << n;
  out << "\nalphabet:";
  for (char c : dfa.alphabet()) out << ' ' << c;
  out << "\ninitial: " << dfa.state_name(dfa.initial()) << "\nfinal:";
  for (StateId q = 0; q < dfa.num_states(); ++q)
    if (dfa.is_final(q)) out << ' ' << dfa.state_name(q);
  out << '\n';
  for (StateId q = 0; q < dfa.num_states(); ++q)
    for (LetterId a = 0; a < dfa.num_letters(); ++a)
      out << dfa.state_name(q) << ' ' << dfa.letter(a) << ' ' << dfa.state_name(dfa.next(q, a)) << '\n';
  return out.str();
}

}  // namespace dfatest
