#pragma once

#include <stdexcept>
#include <string>

namespace supercong {

/// Base class for every error raised by the verifier library.
class VerifierError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rational whose denominator is divisible by p was reduced modulo p^k.
class NonIntegralError : public VerifierError {
 public:
  using VerifierError::VerifierError;
};

/// Fermat quotient requested for a base divisible by p.
class BaseDivisibleError : public VerifierError {
 public:
  using VerifierError::VerifierError;
};

/// p = 2 (mod 3): no representation p = x^2 + 3y^2 exists.
class NotRepresentableError : public VerifierError {
 public:
  using VerifierError::VerifierError;
};

/// The prime does not satisfy the check's applicability predicate.
class NotApplicableError : public VerifierError {
 public:
  using VerifierError::VerifierError;
};

class UnknownCheckError : public VerifierError {
 public:
  using VerifierError::VerifierError;
};

class UnknownIdentityError : public VerifierError {
 public:
  using VerifierError::VerifierError;
};

class ParamOutOfRangeError : public VerifierError {
 public:
  using VerifierError::VerifierError;
};

/// A sample point of a rational-function identity hit a pole.
class PoleSampleError : public VerifierError {
 public:
  using VerifierError::VerifierError;
};

}  // namespace supercong
