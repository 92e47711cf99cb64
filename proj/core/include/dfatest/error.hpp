#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dfatest {

enum class ErrorKind {
  MalformedLine,
  MissingTransition,
  DuplicateTransition,
  UnknownState,
  UnknownLetter,
  InvalidFault,
  NotMinimal,
  EdgeNotOnPath,
  UnreachableAccept,
  PoolOverflow,
  Infeasible,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `line()` is the 1-based input line
/// for parse errors and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t line = 0);

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
};

}  // namespace dfatest
