#pragma once

#include <stdexcept>
#include <string>

namespace parablat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input (unparseable JSON, wrong shapes, bad rationals).
class InputError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NoSolution : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotInParabolic : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotIntegral : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Something that must hold by construction failed; indicates a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InvariantError(what);
}

}  // namespace parablat
