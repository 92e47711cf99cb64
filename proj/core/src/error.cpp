#include "dfatest/error.hpp"

namespace dfatest {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::MissingTransition: return "MissingTransition";
    case ErrorKind::DuplicateTransition: return "DuplicateTransition";
    case ErrorKind::UnknownState: return "UnknownState";
    case ErrorKind::UnknownLetter: return "UnknownLetter";
    case ErrorKind::InvalidFault: return "InvalidFault";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::EdgeNotOnPath: return "EdgeNotOnPath";
    case ErrorKind::UnreachableAccept: return "UnreachableAccept";
    case ErrorKind::PoolOverflow: return "PoolOverflow";
    case ErrorKind::Infeasible: return "Infeasible";
  }
  return "Unknown";
}

namespace {
std::string decorate(ErrorKind kind, const std::string& message, std::size_t line) {
  std::string out(to_string(kind));
  if (line != 0) out += " (line " + std::to_string(line) + ")";
  out += ": ";
  out += message;
  return out;
}
}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::size_t line)
    : std::runtime_error(decorate(kind, message, line)), kind_(kind), line_(line) {}

}  // namespace dfatest
