#include "supercong/quadform.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "supercong/errors.hpp"
#include "supercong/modular.hpp"

namespace supercong {
namespace {

void require_candidate(std::uint64_t p) {
  if (p <= 3 || !is_prime(p)) {
    throw std::invalid_argument("represent: " + std::to_string(p) + " is not a prime > 3");
  }
  if (p % 3 == 2) {
    throw NotRepresentableError(std::to_string(p) + " = 2 (mod 3) has no representation x^2 + 3y^2");
  }
}

// Exactly one of (a, -a) is 1 mod 3 since 3 never divides a.
PrimeRepresentation normalize(std::uint64_t p, std::uint64_t abs_x, std::uint64_t y) {
  if (abs_x % 3 == 0) throw std::logic_error("x divisible by 3 in x^2 + 3y^2 = " + std::to_string(p));
  const auto ax = static_cast<std::int64_t>(abs_x);
  const std::int64_t x = abs_x % 3 == 1 ? ax : -ax;
  return {p, x, static_cast<std::int64_t>(y)};
}

}  // namespace

PrimeRepresentation represent(std::uint64_t p) {
  require_candidate(p);
  const auto root = sqrt_mod(p - 3, p);
  if (!root) throw std::logic_error("-3 is not a square mod " + std::to_string(p));
  const std::uint64_t bound = isqrt(p);
  for (const std::uint64_t r0 : std::array{*root, p - *root}) {
    std::uint64_t a = p;
    std::uint64_t b = r0;
    while (b > bound) {
      const std::uint64_t t = a % b;
      a = b;
      b = t;
    }
    const std::uint64_t rest = p - b * b;
    if (rest % 3 != 0) continue;
    const std::uint64_t y = isqrt(rest / 3);
    if (y > 0 && y * y == rest / 3) return normalize(p, b, y);
  }
  throw std::logic_error("Cornacchia descent failed for " + std::to_string(p));
}

PrimeRepresentation represent_bruteforce(std::uint64_t p) {
  require_candidate(p);
  const std::uint64_t bound = isqrt(p);
  int found = 0;
  PrimeRepresentation out;
  for (std::uint64_t ax = 0; ax <= bound; ++ax) {
    const std::uint64_t rest = p - ax * ax;
    if (rest % 3 != 0) continue;
    const std::uint64_t y = isqrt(rest / 3);
    if (y > 0 && y * y == rest / 3) {
      ++found;
      out = normalize(p, ax, y);
    }
  }
  if (found != 1) {
    throw std::logic_error(std::to_string(found) + " representations found for " + std::to_string(p));
  }
  return out;
}

}  // namespace supercong
