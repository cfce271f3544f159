#pragma once

#include <stdexcept>
#include <string>

namespace coringlab {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not agree (vector lengths, matrix sizes, parent algebras).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured element or search cap.
class BoundError : public Error {
 public:
  using Error::Error;
};

// Input data violates a structural law (group table, homogeneity, automorphism, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The operation is not defined for this kind of field, Hopf variant or coaction.
class VariantError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition on an argument fails (non-unit, non-grouplike, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace coringlab
