// Properties of the p-adic Gamma function, evaluated over argument grids.
//
// Integer arguments run over [1, min(p^2, 2500)]; rational arguments and
// Taylor shifts come from a fixed-seed generator, so every run sees the same
// grid.

#include <random>

#include "common.hpp"
#include "supercong/gamma_p.hpp"

namespace supercong::detail {

namespace {

using Instances = std::vector<CheckInstance>;

constexpr std::uint64_t kIntegerArgumentCap = 2500;
constexpr std::uint64_t kGridSeed = 0x9e3779b97f4a7c15ULL;
// GammaEvaluator tables hold p^2 entries, capped at 2^26.
constexpr std::uint64_t kLargestPrime = 8191;

bool applies(std::uint64_t p) { return p > 3 && p <= kLargestPrime; }

std::vector<Rational> rational_grid(std::uint64_t p, std::size_t count, std::mt19937_64& rng) {
  std::vector<Rational> out;
  while (out.size() < count) {
    const long num = static_cast<long>(rng() % 2001) - 1000;
    const long den = static_cast<long>(rng() % 60) + 1;
    if (den % static_cast<long>(p) == 0) continue;
    out.push_back(make_rational(num, den));
  }
  return out;
}

std::vector<Rational> argument_grid(std::uint64_t p) {
  std::vector<Rational> args;
  const std::uint64_t top = std::min(p * p, kIntegerArgumentCap);
  for (std::uint64_t n = 1; n <= top; ++n) args.emplace_back(n);
  std::mt19937_64 rng(kGridSeed ^ p);
  for (auto& q : rational_grid(p, 50, rng)) args.push_back(std::move(q));
  return args;
}

Rational residue(const PadicResidue& r) { return Rational(r.residue); }

std::string label(const Rational& x) { return "x=" + to_string(x); }

}  // namespace

void register_gamma_checks(std::vector<CheckDefinition>& out) {
  const std::string when = "3 < p <= 8191";

  out.push_back({
      "CHK-GAMMA-FUNC", "gamma-functional-equation",
      R"(\Gamma_p(x+1)=-x\Gamma_p(x)\text{ if }p\nmid x,\ -\Gamma_p(x)\text{ otherwise}\pmod{p^2})", when, applies, 2, false,
      "Arguments: integers in [1, min(p^2, 2500)] and 50 seeded rationals prime to p.",
      [](CheckContext& c) {
        const GammaEvaluator eval(c.p());
        Instances v;
        for (const auto& x : argument_grid(c.p())) {
          const GammaArgument arg(x, c.p());
          const Rational factor = arg.is_unit() ? Rational(-x) : Rational(-1);
          v.push_back(inst(label(x), residue(eval.gamma(arg.shifted(Rational(1)), 2)), factor * residue(eval.gamma(arg, 2))));
        }
        return v;
      },
  });

  out.push_back({
      "CHK-GAMMA-REFL", "gamma-reflection", R"(\Gamma_p(x)\Gamma_p(1-x)=(-1)^{a_0(x)}\pmod{p^2})", when, applies, 2, false,
      "Arguments: integers in [1, min(p^2, 2500)] and 50 seeded rationals prime to p.",
      [](CheckContext& c) {
        const GammaEvaluator eval(c.p());
        Instances v;
        for (const auto& x : argument_grid(c.p())) {
          const GammaArgument arg(x, c.p());
          const GammaArgument mirror(Rational(1 - x), c.p());
          const Rational product = residue(eval.gamma(arg, 2)) * residue(eval.gamma(mirror, 2));
          v.push_back(inst(label(x), product, Rational(arg.a0() % 2 == 0 ? 1 : -1)));
        }
        return v;
      },
  });

  out.push_back({
      "CHK-GAMMA-TAYLOR", "gamma-taylor-shift", R"(\Gamma_p(\alpha+ps)\equiv\Gamma_p(\alpha)+ps\Gamma_p'(\alpha)\pmod{p^2})", when, applies, 2,
      false, "100 seeded (alpha, s) pairs; the derivative is the finite difference taken mod p.",
      [](CheckContext& c) {
        const GammaEvaluator eval(c.p());
        std::mt19937_64 rng(kGridSeed + c.p());
        const auto alphas = rational_grid(c.p(), 100, rng);
        const auto shifts = rational_grid(c.p(), 100, rng);
        const Rational p(c.pl());
        Instances v;
        for (std::size_t i = 0; i < alphas.size(); ++i) {
          const GammaArgument alpha(alphas[i], c.p());
          const Rational base = residue(eval.gamma(alpha, 2));
          const Rational ratio = residue(eval.derivative_ratio(alpha));
          const Rational lhs = residue(eval.gamma(alpha.shifted(p * shifts[i]), 2));
          v.push_back(inst(label(alphas[i]) + ",s=" + to_string(shifts[i]), lhs, base * (1 + p * shifts[i] * ratio)));
        }
        return v;
      },
  });

  out.push_back({
      "CHK-GAMMA-DERIV", "gamma-logarithmic-derivative",
      R"(\frac{\Gamma_p'(\alpha)}{\Gamma_p(\alpha)}\equiv1+H_{p-\langle-\alpha\rangle_p-1}\pmod p)", when, applies, 1, false,
      "Counted form: Gamma'/Gamma(alpha) - Gamma'/Gamma(0) = H_{p-<-alpha>_p-1} for every residue alpha mod p. The closed form "
      "with the constant 1 is off by -w_p - 1 (w_p the Wilson quotient); its outcome is reported in the note.",
      [](CheckContext& c) {
        const GammaEvaluator eval(c.p());
        Instances v;
        std::size_t verbatim = 0, wilson = 0;
        for (long a = 0; a < c.pl(); ++a) {
          const DerivativeCheck d = eval.derivative(GammaArgument(Rational(a), c.p()));
          v.push_back(inst("alpha=" + std::to_string(a), Rational(d.finite_difference - d.base_ratio), Rational(d.harmonic_term)));
          verbatim += d.verbatim_pass ? 1 : 0;
          wilson += d.offset_is_wilson ? 1 : 0;
        }
        v.push_back(aside("closed form with constant 1 (" + std::to_string(verbatim) + "/" + std::to_string(c.pl()) + " residues)",
                          Rational(verbatim == c.p() ? 1 : 0), Rational(1)));
        v.push_back(aside("offset equals -w_p - 1", Rational(wilson == c.p() ? 1 : 0), Rational(1)));
        return v;
      },
  });
}

}  // namespace supercong::detail
