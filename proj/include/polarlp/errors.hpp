#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polarlp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible dimension.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// A precondition on the value of an argument does not hold
/// (zero direction, origin outside the body, indeterminate form, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// The internal cross-checks of a solver or of the duality pipeline failed.
/// Seeing one of these means there is a bug in the library.
class InconsistencyError : public Error {
public:
  using Error::Error;
};

/// Fourier-Motzkin produced more rows than the configured guard allows.
class RowLimitError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace polarlp
