#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pivotmt {

// Root of every error raised by the library. The CLI maps the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape or length mismatch between operands.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A precondition on call order or argument state was violated.
class ContractError : public Error {
 public:
  using Error::Error;
};

// A hyperparameter outside its admissible range (negative sigma, p > 100, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// NaN or Inf reached a graph boundary.
class NumericError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

class VocabError : public DataError {
 public:
  using DataError::DataError;
};

class LengthError : public DataError {
 public:
  using DataError::DataError;
};

class ParseError : public DataError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pivotmt
