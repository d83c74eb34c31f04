#pragma once

#include <stdexcept>
#include <string>

namespace ltower {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A level beyond the precision of the voltages was requested.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

class NonResidueError : public Error {
 public:
  using Error::Error;
};

class AmbiguousBranchError : public Error {
 public:
  using Error::Error;
};

class NonIntegralExponentError : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
};

// An operation whose hypotheses do not hold for the given input (e.g. p == ell).
class InapplicableError : public Error {
 public:
  using Error::Error;
};

class InconclusiveError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ltower
