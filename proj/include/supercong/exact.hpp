#pragma once

// Exact integer/rational arithmetic and valuation-aware reduction modulo p^k.
//
// Every quantity the checks compare is built as an exact Rational first and
// reduced modulo p^k last, so p-integrality of intermediate terms never has
// to be tracked by hand.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace supercong {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms with positive denominator. Throws std::domain_error
/// when den == 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den);

/// Canonical "num/den" rendering ("num" when den == 1).
std::string to_string(const Rational& q);

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, long exponent);

/// A value reduced modulo p^k together with its clamped p-adic valuation.
///
/// `valuation` is empty when the value is 0 modulo p^k (the "≥ k" marker);
/// otherwise it is in [0, k) and residue is divisible by exactly p^valuation.
struct PadicResidue {
  std::uint64_t p = 0;
  int k = 1;
  std::optional<int> valuation;
  Integer residue;  // in [0, p^k)

  Integer modulus() const;
  bool is_unit() const { return valuation == 0; }
  bool is_zero() const { return !valuation.has_value(); }
};

bool operator==(const PadicResidue& a, const PadicResidue& b);

/// q mod p^k. Throws NonIntegralError when p divides the reduced denominator.
PadicResidue reduce_mod_pk(const Rational& q, std::uint64_t p, int k);

/// Reduction of an integer; never throws for p-integrality.
PadicResidue reduce_mod_pk(const Integer& n, std::uint64_t p, int k);

/// Exact ν_p(q); std::nullopt stands for +∞ (q == 0).
std::optional<long> valuation(const Rational& q, std::uint64_t p);
long valuation(const Integer& n, std::uint64_t p);  // n != 0

/// C(n, m) for integer n (negative n uses the falling-factorial form).
/// Zero for m < 0, and for m > n when n >= 0.
Integer binomial(long n, long m);

/// Generalized C(a, m) = a(a-1)...(a-m+1)/m! for rational a; zero for m < 0.
Rational binomial(const Rational& a, long m);

/// (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
Rational rising_factorial(const Rational& a, long n);

Integer factorial(long n);

/// H_n^(order) = sum_{k=1}^{n} 1/k^order, H_0 = 0.
Rational harmonic(long n, int order = 1);

/// Prefix table [H_0, H_1, ..., H_n] of harmonic(., order).
std::vector<Rational> harmonic_table(long n, int order = 1);

/// q_p(a) = (a^{p-1} - 1)/p. Throws BaseDivisibleError when p | a.
Rational fermat_quotient(long a, std::uint64_t p);

}  // namespace supercong
