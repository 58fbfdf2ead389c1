#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace realreg {

/// Failure categories raised by the library. The CLI maps these onto exit
/// codes and prints `error: <kind>` with the name from `to_string`.
enum class ErrorKind {
  Parse,
  Domain,
  EmptyLanguage,
  NotTrim,
  NotClosed,
  BaseMismatch,
  ArityMismatch,
  ArityError,
  IndexOutOfRange,
  OmegaArity,
  NotSparse,
  NoCantor,
  InteriorPresent,
  FiniteSet,
  NotUnary,
  DependentBases,
  ResourceLimit,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure carrying the 1-based line number (0 when not line-oriented).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::Parse,
              line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace realreg
