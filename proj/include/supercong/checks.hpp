#pragma once

// Registry of congruence checks.
//
// A check evaluates one or more instances (lhs, rhs) exactly as rationals,
// reduces both sides modulo p^k and compares residues. Quantified statements
// (over j, k, t, r or a grid of p-adic arguments) produce one instance per
// index; the check passes when every counted instance does. Informational
// instances record alternative readings of a formula and never affect the
// outcome.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/exact.hpp"
#include "supercong/quadform.hpp"

namespace supercong {

/// Per-prime evaluation state shared by the instances of one check run.
/// Everything is computed on first use and kept for the lifetime of the
/// context. Not thread-safe; each run owns its context.
class CheckContext {
 public:
  CheckContext(std::uint64_t p, std::optional<PrimeRepresentation> rep);

  std::uint64_t p() const noexcept { return p_; }
  long pl() const noexcept { return static_cast<long>(p_); }
  long m() const noexcept { return (pl() - 1) / 2; }
  long a() const noexcept { return (pl() - 1) / 3; }
  long b() const noexcept { return (pl() - 1) / 6; }
  /// (-1)^((p-1)/2)
  int sgn_m() const noexcept { return m() % 2 == 0 ? 1 : -1; }

  bool has_representation() const noexcept { return rep_.has_value(); }
  const PrimeRepresentation& representation() const;
  Rational x() const { return Rational(representation().x); }

  /// H_n and H_n^(2) for 0 <= n <= 2p.
  const Rational& H(long n);
  const Rational& H2(long n);
  /// sum_{k=1}^{n} 4^k / (k^2 C(2k,k)) for 0 <= n <= p.
  const Rational& T(long n);

  /// f_0 .. f_{p-1}.
  const std::vector<Integer>& franel();
  /// sum_{k<p} weight(k) f_k / base^k with base in {2, -4}.
  Rational franel_sum(long base, long weight_slope, long weight_offset);

  const Rational& bernoulli_third();  // B_{p-2}(1/3)
  const Integer& euler();             // E_{p-3}
  const Rational& q2();
  const Rational& q3();
  int legendre3() const;  // (p/3)

 private:
  std::uint64_t p_;
  std::optional<PrimeRepresentation> rep_;
  std::vector<Rational> h1_, h2_, t_;
  std::optional<std::vector<Integer>> franel_;
  std::optional<Rational> bernoulli_, q2_, q3_;
  std::optional<Integer> euler_;
};

struct CheckInstance {
  std::string label;
  Rational lhs;
  Rational rhs;
  bool informational = false;
};

struct CheckDefinition {
  std::string id;
  std::string anchor;          // unique slug naming the formula this check binds to
  std::string formula;         // the congruence, as displayed
  std::string applicability;   // human-readable predicate
  std::function<bool(std::uint64_t)> applies;
  int modulus_exponent = 1;
  bool uses_representation = false;
  std::string documentation;
  std::function<std::vector<CheckInstance>(CheckContext&)> evaluate;
};

struct CheckResult {
  std::string check_id;
  std::uint64_t p = 0;
  std::optional<std::int64_t> x, y;
  Integer lhs;  // residue in [0, p^k)
  Integer rhs;
  Integer modulus;
  bool pass = false;
  std::string note;
};

/// Sorted by id.
const std::vector<CheckDefinition>& list_checks();

/// Throws UnknownCheckError.
const CheckDefinition& find_check(std::string_view id);

/// Throws UnknownCheckError, NotApplicableError (p not prime or outside the
/// check's predicate). NonIntegral reductions become failures with a note.
CheckResult run_check(std::string_view id, std::uint64_t p);

/// Same with an explicit representation in place of represent(p); used to
/// confirm that x-dependent checks are sensitive to the sign of x.
CheckResult run_check(std::string_view id, std::uint64_t p, const PrimeRepresentation& rep);

/// Predicates shared by the registry.
bool applies_one_mod_three(std::uint64_t p);  // p = 1 (mod 3), p >= 7
bool applies_above_five(std::uint64_t p);
bool applies_above_three(std::uint64_t p);

}  // namespace supercong
