#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffalg {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroPolynomialError : Error {
  ZeroPolynomialError() : Error("the zero polynomial has no leading term") {}
};

struct EmptyMonomialError : Error {
  EmptyMonomialError()
      : Error("the derived leading term of the empty word is undefined") {}
};

struct UnboundVariableError : Error {
  explicit UnboundVariableError(int rank)
      : Error("substitution image missing for variable #" +
              std::to_string(rank)),
        variable_rank(rank) {}
  int variable_rank;
};

struct InvalidRuleError : Error {
  using Error::Error;
};

struct OutOfBoundError : Error {
  using Error::Error;
};

struct InvalidLieError : Error {
  using Error::Error;
};

/// Raised by the text-format parsers; `position` is a 0-based character
/// offset into the input.
struct SyntaxError : Error {
  SyntaxError(std::size_t pos, const std::string& what)
      : Error("syntax error at position " + std::to_string(pos) + ": " + what),
        position(pos) {}
  std::size_t position;
};

struct UnknownVariableError : SyntaxError {
  UnknownVariableError(std::size_t pos, const std::string& name)
      : SyntaxError(pos, "unknown variable '" + name + "'"), name(name) {}
  std::string name;
};

struct UnknownOperatorError : SyntaxError {
  UnknownOperatorError(std::size_t pos, unsigned long label)
      : SyntaxError(pos, "unknown operator index " + std::to_string(label)),
        label(label) {}
  unsigned long label;
};

/// Raised by the session-config reader; `line` is 1-based.
struct ConfigError : Error {
  ConfigError(std::size_t line, const std::string& what)
      : Error("config line " + std::to_string(line) + ": " + what),
        line(line) {}
  std::size_t line;
};

}  // namespace diffalg
