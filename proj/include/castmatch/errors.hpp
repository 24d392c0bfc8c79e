#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace castmatch {

// Base class for all input/contract violations. The CLI maps these to
// exit code 1; anything else escaping a stage maps to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

class EmptySet : public Error {
 public:
  using Error::Error;
};

class NonFiniteCost : public Error {
 public:
  using Error::Error;
};

class EmptyMatrix : public Error {
 public:
  using Error::Error;
};

class NonMonotonicFrame : public Error {
 public:
  using Error::Error;
};

class EmptyTemplates : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class EmptyActorFile : public Error {
 public:
  using Error::Error;
};

class KeyMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed line in a data file; the message carries "<file>:<line>: ...".
class ParseError : public Error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace castmatch
