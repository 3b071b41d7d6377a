#include "supercong/exact.hpp"

#include <stdexcept>

#include "supercong/errors.hpp"

namespace supercong {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t),
              "GMP ui conversions assume a 64-bit unsigned long");

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent >= 0) {
    const auto e = static_cast<unsigned long>(exponent);
    return make_rational(pow(base.get_num(), e), pow(base.get_den(), e));
  }
  if (base == 0) throw std::domain_error("negative power of zero");
  const auto e = static_cast<unsigned long>(-exponent);
  return make_rational(pow(base.get_den(), e), pow(base.get_num(), e));
}

Integer PadicResidue::modulus() const { return pow(Integer(p), static_cast<unsigned long>(k)); }

bool operator==(const PadicResidue& a, const PadicResidue& b) {
  return a.p == b.p && a.k == b.k && a.valuation == b.valuation && a.residue == b.residue;
}

namespace {

void require_precision(std::uint64_t p, int k) {
  if (k < 1) throw std::invalid_argument("precision exponent must be >= 1");
  if (p < 2) throw std::invalid_argument("modulus base must be a prime >= 2");
}

PadicResidue make_residue(Integer residue, std::uint64_t p, int k) {
  PadicResidue r{p, k, std::nullopt, std::move(residue)};
  if (r.residue != 0) r.valuation = static_cast<int>(valuation(r.residue, p));
  return r;
}

}  // namespace

PadicResidue reduce_mod_pk(const Integer& n, std::uint64_t p, int k) {
  require_precision(p, k);
  const Integer m = pow(Integer(p), static_cast<unsigned long>(k));
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return make_residue(std::move(r), p, k);
}

PadicResidue reduce_mod_pk(const Rational& q, std::uint64_t p, int k) {
  require_precision(p, k);
  if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), p) != 0) {
    throw NonIntegralError("value " + to_string(q) + " is not " + std::to_string(p) + "-integral");
  }
  const Integer m = pow(Integer(p), static_cast<unsigned long>(k));
  Integer inv;
  mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), m.get_mpz_t());
  Integer r = q.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return make_residue(std::move(r), p, k);
}

long valuation(const Integer& n, std::uint64_t p) {
  if (n == 0) throw std::domain_error("valuation of zero integer");
  Integer rest;
  const Integer base(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), base.get_mpz_t()));
}

std::optional<long> valuation(const Rational& q, std::uint64_t p) {
  if (q == 0) return std::nullopt;
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

Integer binomial(long n, long m) {
  if (m < 0) return 0;
  Integer r;
  if (n >= 0) {
    if (m > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    return r;
  }
  const Integer top(n);
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

Rational binomial(const Rational& a, long m) {
  if (m < 0) return 0;
  if (a.get_den() == 1 && a.get_num().fits_slong_p()) return Rational(binomial(a.get_num().get_si(), m));
  Rational num = 1;
  for (long i = 0; i < m; ++i) num *= a - i;
  return num / Rational(factorial(m));
}

Rational rising_factorial(const Rational& a, long n) {
  if (n < 0) throw std::invalid_argument("rising factorial length must be >= 0");
  Rational r = 1;
  for (long i = 0; i < n; ++i) r *= a + i;
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

std::vector<Rational> harmonic_table(long n, int order) {
  if (n < 0) throw std::invalid_argument("harmonic index must be >= 0");
  if (order < 1) throw std::invalid_argument("harmonic order must be >= 1");
  std::vector<Rational> table;
  table.reserve(static_cast<std::size_t>(n) + 1);
  table.emplace_back(0);
  for (long i = 1; i <= n; ++i) {
    table.push_back(table.back() + make_rational(Integer(1), pow(Integer(i), static_cast<unsigned long>(order))));
  }
  return table;
}

Rational harmonic(long n, int order) { return harmonic_table(n, order).back(); }

Rational fermat_quotient(long a, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("fermat quotient needs a prime");
  const Integer base(a);
  if (mpz_divisible_ui_p(base.get_mpz_t(), p) != 0) {
    throw BaseDivisibleError("base " + std::to_string(a) + " divisible by " + std::to_string(p));
  }
  return make_rational(pow(base, p - 1) - 1, Integer(p));
}

}  // namespace supercong
