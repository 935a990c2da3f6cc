#pragma once

#include <stdexcept>
#include <string>

namespace quadhp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroPolynomial : public Error {
 public:
  explicit ZeroPolynomial(const std::string& where)
      : Error(where + ": zero polynomial not allowed") {}
};

/// The operator is outside the degree pattern the decision procedures cover.
class HypothesesViolated : public Error {
 public:
  using Error::Error;
};

class DegenerateRoots : public Error {
 public:
  using Error::Error;
};

class InvalidRange : public Error {
 public:
  using Error::Error;
};

/// A numerical construction could not certify its own output.
class ConstructionFailed : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace quadhp
