#pragma once

#include <stdexcept>
#include <string>

namespace eer {

// Base of every error thrown by the library. The CLI maps these to exit
// status 1; ParseError is the one exception, treated as a usage error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when reversing meets x^-1 y with no relation headed by {x, y}.
class StuckReversal : public Error {
 public:
  using Error::Error;
};

// Step or enumeration cap reached. Never silently truncated.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NoPeriodFound : public Error {
 public:
  using Error::Error;
};

}  // namespace eer
