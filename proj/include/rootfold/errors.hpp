#pragma once

#include <stdexcept>
#include <string>

namespace rootfold {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands of incompatible shape (dimension mismatch).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Argument outside the operation's domain (zero mirror, bad label, j not in J).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Linear system inconsistent or not uniquely solvable.
class SolverError : public Error {
 public:
  using Error::Error;
};

// A derived object failed a check its construction guarantees.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Two independent computations of a proven identity disagree.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class ClassificationError : public Error {
 public:
  using Error::Error;
};

class ClosureError : public Error {
 public:
  using Error::Error;
};

}  // namespace rootfold
