#pragma once

#include <cstdint>

namespace supercong {

/// p = x^2 + 3y^2 with x = 1 (mod 3) and y > 0.
struct PrimeRepresentation {
  std::uint64_t p = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const PrimeRepresentation&, const PrimeRepresentation&) = default;
};

/// Cornacchia descent from a square root of -3 mod p.
/// Throws NotRepresentableError for p = 2 (mod 3), std::invalid_argument for
/// p <= 3 or composite p.
PrimeRepresentation represent(std::uint64_t p);

/// Same contract by exhaustive scan over |x| <= sqrt(p); also asserts that
/// exactly one (|x|, y) pair exists.
PrimeRepresentation represent_bruteforce(std::uint64_t p);

}  // namespace supercong
