#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rsrl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed regular expression or spec file. `position()` is a 0-based
/// character offset for regexes; spec files report line/column in the message.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UndeclaredSymbol : public Error {
 public:
  explicit UndeclaredSymbol(const std::string& symbol)
      : Error("undeclared symbol '" + symbol + "'"), symbol_(symbol) {}
  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// A configurable resource guard (state budget, term budget, closure budget,
/// recursion depth) was exceeded. Never conflated with a negative answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation that is only defined for Kleene-star-free generators was
/// handed a generator containing a star.
class NotStarFree : public Error {
 public:
  using Error::Error;
};

/// A domain invariant was violated by the caller (e.g. epsilon in K).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace rsrl
