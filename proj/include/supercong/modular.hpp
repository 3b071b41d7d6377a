#pragma once

// Word-size modular helpers: primality, modular powers, Tonelli–Shanks.

#include <cstdint>
#include <optional>
#include <vector>

namespace supercong {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

/// Deterministic Miller–Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

/// Square root of a modulo an odd prime p, if a is a quadratic residue.
/// Returns the root in [0, p).
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p);

/// Exact integer square root (floor).
std::uint64_t isqrt(std::uint64_t n);

}  // namespace supercong
