#pragma once

#include <stdexcept>
#include <string>

namespace concentra {

// Base of every analysis failure. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An index was requested on an input for which it is not defined
// (e.g. density of a single vertex, C2 without connected triples).
class UndefinedInput : public Error {
 public:
  using Error::Error;
};

// Input is well-formed but the requested construction is meaningless
// (constant coordinates, nothing to project out, ...).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  explicit UnknownVertex(const std::string& label)
      : Error("unknown vertex '" + label + "'") {}
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace concentra
