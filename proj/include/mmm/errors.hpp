#pragma once

#include <stdexcept>
#include <string>

namespace mmm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violations on user-supplied data.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured node, vertex or edge limit was exhausted.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A construction produced something its own invariants forbid.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace mmm
