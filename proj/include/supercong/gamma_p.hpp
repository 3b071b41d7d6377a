#pragma once

// Morita's p-adic Gamma function on Z_p, evaluated modulo p or p^2.
//
// Γ_p(n) = (-1)^n prod_{1 <= j < n, p ∤ j} j for n >= 1, Γ_p(0) = 1. A p-adic
// integer α is evaluated through its integer lift n0 ∈ [1, p^k], n0 = α
// (mod p^k); Γ_p is constant on residue classes mod p^k for odd p, so the
// choice of lift does not matter.
//
// Γ_p' is defined operationally as the finite difference
// (Γ_p(α+p) - Γ_p(α))/p taken mod p, which is exactly the s = 1 case of the
// Taylor shift Γ_p(α+ps) = Γ_p(α) + ps Γ_p'(α) (mod p^2).

#include <cstdint>
#include <vector>

#include "supercong/exact.hpp"

namespace supercong {

/// A p-adic integer α (a rational with denominator prime to p).
class GammaArgument {
 public:
  /// Throws NonIntegralError when p divides the denominator of alpha.
  GammaArgument(Rational alpha, std::uint64_t p);

  const Rational& alpha() const noexcept { return alpha_; }
  std::uint64_t p() const noexcept { return p_; }

  /// |α|_p = 1.
  bool is_unit() const;

  /// a_0(α) ∈ {1, ..., p} with α = a_0 (mod p).
  std::uint64_t a0() const;

  /// <α>_{p^k}: least non-negative residue of α modulo p^k.
  std::uint64_t least_residue(int k = 1) const;

  /// Integer lift in [1, p^k].
  std::uint64_t lift(int k) const;

  GammaArgument shifted(const Rational& delta) const { return {alpha_ + delta, p_}; }

 private:
  Rational alpha_;
  std::uint64_t p_;
};

/// Defining product reduced mod p^k (p^k must fit in 64 bits).
PadicResidue gamma_p_int(std::uint64_t n, std::uint64_t p, int k);

/// Γ_p(α) mod p^k for k ∈ {1, 2} via the integer lift.
PadicResidue gamma_p(const GammaArgument& arg, int k);

/// Finite-difference Γ_p'(α)/Γ_p(α) mod p.
PadicResidue gamma_p_derivative_ratio(const GammaArgument& arg);

/// 1 + H_{p - <-α>_p - 1} mod p, the closed form being tested against the
/// finite difference.
PadicResidue gamma_p_derivative_formula(const GammaArgument& arg);

bool check_functional_equation(const GammaArgument& x, int k);
bool check_reflection(const GammaArgument& x, int k);
bool check_taylor_shift(const GammaArgument& alpha, const Rational& s);

struct DerivativeCheck {
  Integer finite_difference;  // Γ'/Γ(α) mod p
  Integer formula;            // 1 + H_{p-<-α>_p-1} mod p
  Integer base_ratio;         // Γ'/Γ(0) mod p
  Integer harmonic_term;      // H_{p-<-α>_p-1} mod p
  Integer wilson_quotient;    // ((p-1)! + 1)/p mod p
  bool verbatim_pass = false;  // finite_difference == formula
  bool relative_pass = false;  // finite_difference - base_ratio == harmonic_term
  bool offset_is_wilson = false;  // base_ratio == -wilson_quotient
};

DerivativeCheck check_derivative_formula(const GammaArgument& arg);

/// Memo of Γ_p(n) for n ∈ [0, p^k], k = 1, 2, used for batch evaluation.
/// Produces the same residues as gamma_p / gamma_p_int.
class GammaEvaluator {
 public:
  /// Tables cover p^2 entries; p^2 is capped at 2^26.
  explicit GammaEvaluator(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }

  PadicResidue gamma_int(std::uint64_t n, int k) const;
  PadicResidue gamma(const GammaArgument& arg, int k) const;
  PadicResidue derivative_ratio(const GammaArgument& arg) const;

  bool functional_equation(const GammaArgument& x, int k) const;
  bool reflection(const GammaArgument& x, int k) const;
  bool taylor_shift(const GammaArgument& alpha, const Rational& s) const;
  DerivativeCheck derivative(const GammaArgument& arg) const;

 private:
  std::uint64_t value(std::uint64_t n, int k) const;

  std::uint64_t p_;
  std::uint64_t p2_;
  std::vector<std::uint64_t> table_;  // Γ_p(n) mod p^2, n ∈ [0, p^2]
};

}  // namespace supercong
