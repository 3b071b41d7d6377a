#include "supercong/gamma_p.hpp"

#include <stdexcept>
#include <string>

#include "supercong/errors.hpp"
#include "supercong/modular.hpp"

namespace supercong {
namespace {

constexpr std::uint64_t kMaxTableSize = 1ULL << 26U;

std::uint64_t prime_power(std::uint64_t p, int k) {
  if (k < 1) throw std::invalid_argument("precision exponent must be >= 1");
  std::uint64_t m = 1;
  for (int i = 0; i < k; ++i) {
    if (m > UINT64_MAX / p) throw std::overflow_error("p^k does not fit in 64 bits");
    m *= p;
  }
  return m;
}

void require_gamma_precision(int k) {
  if (k < 1 || k > 2) throw std::invalid_argument("Γ_p precision must be 1 or 2");
}

std::uint64_t reduce_word(const Rational& q, std::uint64_t p, int k) {
  return reduce_mod_pk(q, p, k).residue.get_ui();
}

PadicResidue unit_residue(std::uint64_t value, std::uint64_t p, int k) {
  PadicResidue r = reduce_mod_pk(Integer(value), p, k);
  if (!r.is_unit()) throw std::logic_error("Γ_p value is not a p-adic unit");
  return r;
}

std::uint64_t direct_product(std::uint64_t n, std::uint64_t p, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  for (std::uint64_t j = 1; j < n; ++j) {
    if (j % p != 0) acc = mul_mod(acc, j % m, m);
  }
  if (n % 2 == 1 && acc != 0) acc = m - acc;
  return acc;
}

std::uint64_t wilson_quotient_mod_p(std::uint64_t p) {
  const std::uint64_t p2 = p * p;
  std::uint64_t f = 1;
  for (std::uint64_t j = 2; j < p; ++j) f = mul_mod(f, j, p2);
  return ((f + 1) % p2) / p % p;
}

// Shared property logic over any source of Γ_p(n) mod p^k.
template <typename Source>
struct GammaOps {
  const Source& gamma_of_lift;  // (n, k) -> Γ_p(n) mod p^k
  std::uint64_t p;

  std::uint64_t at(const GammaArgument& a, int k) const {
    if (a.p() != p) throw std::invalid_argument("Γ_p argument belongs to a different prime");
    return gamma_of_lift(a.lift(k), k);
  }

  std::uint64_t derivative_ratio(const GammaArgument& a) const {
    const std::uint64_t p2 = p * p;
    const std::uint64_t g = at(a, 2);
    const std::uint64_t g_shift = at(a.shifted(Rational(static_cast<unsigned long>(p))), 2);
    const std::uint64_t diff = (g_shift + p2 - g) % p2;
    if (diff % p != 0) throw std::logic_error("Γ_p is not 1-Lipschitz at this argument");
    const std::uint64_t inv = pow_mod(g % p, p - 2, p);
    return mul_mod(diff / p, inv, p);
  }

  bool functional_equation(const GammaArgument& x, int k) const {
    const std::uint64_t m = prime_power(p, k);
    const std::uint64_t factor = x.is_unit() ? reduce_word(-x.alpha(), p, k) : m - 1;
    return at(x.shifted(1), k) == mul_mod(factor, at(x, k), m);
  }

  bool reflection(const GammaArgument& x, int k) const {
    const std::uint64_t m = prime_power(p, k);
    const GammaArgument mirror(1 - x.alpha(), p);
    const std::uint64_t expected = x.a0() % 2 == 0 ? 1 : m - 1;
    return mul_mod(at(mirror, k), at(x, k), m) == expected;
  }

  bool taylor_shift(const GammaArgument& alpha, const Rational& s) const {
    const std::uint64_t p2 = p * p;
    const std::uint64_t lhs = at(alpha.shifted(s * static_cast<unsigned long>(p)), 2);
    // ps·Γ'(α) mod p^2 only depends on s·Γ'(α) mod p.
    const std::uint64_t g = at(alpha, 2);
    const std::uint64_t g_shift = at(alpha.shifted(Rational(static_cast<unsigned long>(p))), 2);
    const std::uint64_t derivative = ((g_shift + p2 - g) % p2) / p;
    const std::uint64_t s_mod_p = reduce_word(s, p, 1);
    const std::uint64_t rhs = (g + p * mul_mod(s_mod_p, derivative, p)) % p2;
    return lhs == rhs;
  }

  DerivativeCheck derivative(const GammaArgument& a) const {
    DerivativeCheck out;
    const std::uint64_t ratio = derivative_ratio(a);
    const std::uint64_t base = derivative_ratio(GammaArgument(Rational(0), p));
    const std::uint64_t neg_residue = GammaArgument(-a.alpha(), p).least_residue(1);
    const std::uint64_t h = reduce_word(harmonic(static_cast<long>(p - neg_residue - 1)), p, 1);
    const std::uint64_t w = wilson_quotient_mod_p(p);
    out.finite_difference = static_cast<unsigned long>(ratio);
    out.formula = static_cast<unsigned long>((1 + h) % p);
    out.base_ratio = static_cast<unsigned long>(base);
    out.harmonic_term = static_cast<unsigned long>(h);
    out.wilson_quotient = static_cast<unsigned long>(w);
    out.verbatim_pass = ratio == (1 + h) % p;
    out.relative_pass = (ratio + p - base) % p == h;
    out.offset_is_wilson = base == (p - w) % p;
    return out;
  }
};

struct DirectSource {
  std::uint64_t p;
  std::uint64_t operator()(std::uint64_t n, int k) const { return direct_product(n, p, prime_power(p, k)); }
};

}  // namespace

GammaArgument::GammaArgument(Rational alpha, std::uint64_t p) : alpha_(std::move(alpha)), p_(p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("Γ_p needs an odd prime, got " + std::to_string(p));
  if (mpz_divisible_ui_p(alpha_.get_den().get_mpz_t(), p) != 0) {
    throw NonIntegralError(to_string(alpha_) + " is not in Z_" + std::to_string(p));
  }
}

bool GammaArgument::is_unit() const { return least_residue(1) != 0; }

std::uint64_t GammaArgument::a0() const {
  const std::uint64_t r = least_residue(1);
  return r == 0 ? p_ : r;
}

std::uint64_t GammaArgument::least_residue(int k) const { return reduce_word(alpha_, p_, k); }

std::uint64_t GammaArgument::lift(int k) const {
  const std::uint64_t r = least_residue(k);
  return r == 0 ? prime_power(p_, k) : r;
}

PadicResidue gamma_p_int(std::uint64_t n, std::uint64_t p, int k) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("Γ_p needs an odd prime");
  return unit_residue(direct_product(n, p, prime_power(p, k)), p, k);
}

PadicResidue gamma_p(const GammaArgument& arg, int k) {
  require_gamma_precision(k);
  return gamma_p_int(arg.lift(k), arg.p(), k);
}

PadicResidue gamma_p_derivative_ratio(const GammaArgument& arg) {
  const DirectSource src{arg.p()};
  const GammaOps<DirectSource> ops{src, arg.p()};
  return reduce_mod_pk(Integer(static_cast<unsigned long>(ops.derivative_ratio(arg))), arg.p(), 1);
}

PadicResidue gamma_p_derivative_formula(const GammaArgument& arg) {
  const std::uint64_t p = arg.p();
  const std::uint64_t neg_residue = GammaArgument(-arg.alpha(), p).least_residue(1);
  return reduce_mod_pk(1 + harmonic(static_cast<long>(p - neg_residue - 1)), p, 1);
}

bool check_functional_equation(const GammaArgument& x, int k) {
  require_gamma_precision(k);
  const DirectSource src{x.p()};
  return GammaOps<DirectSource>{src, x.p()}.functional_equation(x, k);
}

bool check_reflection(const GammaArgument& x, int k) {
  require_gamma_precision(k);
  const DirectSource src{x.p()};
  return GammaOps<DirectSource>{src, x.p()}.reflection(x, k);
}

bool check_taylor_shift(const GammaArgument& alpha, const Rational& s) {
  const DirectSource src{alpha.p()};
  return GammaOps<DirectSource>{src, alpha.p()}.taylor_shift(alpha, s);
}

DerivativeCheck check_derivative_formula(const GammaArgument& arg) {
  const DirectSource src{arg.p()};
  return GammaOps<DirectSource>{src, arg.p()}.derivative(arg);
}

GammaEvaluator::GammaEvaluator(std::uint64_t p) : p_(p), p2_(prime_power(p, 2)) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("Γ_p needs an odd prime");
  if (p2_ > kMaxTableSize) throw std::invalid_argument("p^2 too large for a Γ_p table");
  table_.resize(p2_ + 1);
  table_[0] = 1;
  for (std::uint64_t n = 0; n < p2_; ++n) {
    const std::uint64_t factor = n % p == 0 ? 1 : n;
    table_[n + 1] = (p2_ - mul_mod(table_[n], factor, p2_)) % p2_;
  }
}

std::uint64_t GammaEvaluator::value(std::uint64_t n, int k) const {
  if (n > p2_) throw std::out_of_range("Γ_p table index beyond p^2");
  return k == 1 ? table_[n] % p_ : table_[n];
}

PadicResidue GammaEvaluator::gamma_int(std::uint64_t n, int k) const {
  require_gamma_precision(k);
  return unit_residue(value(n, k), p_, k);
}

namespace {

struct TableSource {
  const GammaEvaluator& eval;
  std::uint64_t operator()(std::uint64_t n, int k) const { return eval.gamma_int(n, k).residue.get_ui(); }
};

}  // namespace

PadicResidue GammaEvaluator::gamma(const GammaArgument& arg, int k) const {
  require_gamma_precision(k);
  return gamma_int(arg.lift(k), k);
}

PadicResidue GammaEvaluator::derivative_ratio(const GammaArgument& arg) const {
  const TableSource src{*this};
  return reduce_mod_pk(Integer(static_cast<unsigned long>(GammaOps<TableSource>{src, p_}.derivative_ratio(arg))), p_, 1);
}

bool GammaEvaluator::functional_equation(const GammaArgument& x, int k) const {
  require_gamma_precision(k);
  const TableSource src{*this};
  return GammaOps<TableSource>{src, p_}.functional_equation(x, k);
}

bool GammaEvaluator::reflection(const GammaArgument& x, int k) const {
  require_gamma_precision(k);
  const TableSource src{*this};
  return GammaOps<TableSource>{src, p_}.reflection(x, k);
}

bool GammaEvaluator::taylor_shift(const GammaArgument& alpha, const Rational& s) const {
  const TableSource src{*this};
  return GammaOps<TableSource>{src, p_}.taylor_shift(alpha, s);
}

DerivativeCheck GammaEvaluator::derivative(const GammaArgument& arg) const {
  const TableSource src{*this};
  return GammaOps<TableSource>{src, p_}.derivative(arg);
}

}  // namespace supercong
