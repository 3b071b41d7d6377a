// The derivation of the weighted Franel congruences modulo p^2, one check per
// displayed step.
//
// S1 and S2 split sum (3k+4) f_k/2^k; S3 is the boundary part of
// sum (3k+2) f_k/(-4)^k.

#include "common.hpp"

namespace supercong::detail {

namespace {

using Instances = std::vector<CheckInstance>;

Rational main1_sum(CheckContext& c) {
  return c.pl() * sum(0, c.m(), [](long j) -> Rational {
           return C(2 * j, j) / pow4(j) * Q(9 * j + 5, (3 * j + 1) * (3 * j + 2));
         });
}

Rational s1(CheckContext& c) {
  const long m = c.m();
  return c.pl() * sum(0, m, [m](long j) -> Rational { return C(m, j) * sgn(j) * (Q(2, 3 * j + 1) + Q(1, 3 * j + 2)); });
}

Rational s2(CheckContext& c) {
  const long p = c.pl(), a = c.a();
  return Q(3 * p + 2, p + 1) * (C(2 * a, a) / pow4(a) - C(c.m(), a));
}

Rational s3(CheckContext& c) {
  const long p = c.pl(), a = c.a();
  return C(2 * a, a) / (Rational(p + 1) * pow4(a)) - C(c.m(), a) / (p + 1) - C(4 * a, 2 * a) / pow4(2 * a);
}

// 4p/(3p-1) (1)_m/(1/3)_m and 2p/(3p+1) (1)_m/(2/3)_m
Rational pochhammer_third(CheckContext& c) {
  const long p = c.pl();
  return Q(4 * p, 3 * p - 1) * rising_factorial(Rational(1), c.m()) / rising_factorial(Q(1, 3), c.m());
}

Rational pochhammer_two_thirds(CheckContext& c) {
  const long p = c.pl();
  return Q(2 * p, 3 * p + 1) * rising_factorial(Rational(1), c.m()) / rising_factorial(Q(2, 3), c.m());
}

Rational alternating_difference(CheckContext& c) {
  const long m = c.m();
  return c.pl() * sum(0, m, [m](long j) -> Rational { return C(m, j) * sgn(j) * (Q(1, 3 * j + 1) - Q(1, 3 * j + 2)); });
}

CheckDefinition step(std::string id, std::string anchor, std::string formula, int k, bool uses_x,
                     std::function<Instances(CheckContext&)> eval, std::string doc = "") {
  return {std::move(id), std::move(anchor), std::move(formula), "p = 1 (mod 3), p >= 7", applies_one_mod_three, k, uses_x,
          std::move(doc), std::move(eval)};
}

}  // namespace

void register_first_chain(std::vector<CheckDefinition>& out) {
  out.push_back(step("CHK-MAIN1", "weighted-half-sum-reduction",
                     R"(\sum_{k=0}^{p-1}(3k+4)\frac{f_k}{2^k}\equiv p\sum_{j=0}^{(p-1)/2}\frac{\binom{2j}j}{4^j}\frac{9j+5}{(3j+1)(3j+2)}\pmod{p^2})",
                     2, false, [](CheckContext& c) { return Instances{inst("main sum", c.franel_sum(2, 3, 4), main1_sum(c))}; }));

  out.push_back(step("CHK-EQU", "split-into-s1-s2", R"(p\sum_{j}\frac{\binom{2j}j}{4^j}\frac{9j+5}{(3j+1)(3j+2)}\equiv S_1+S_2\pmod{p^2})", 2,
                     false, [](CheckContext& c) { return Instances{inst("S1+S2", main1_sum(c), s1(c) + s2(c))}; }));

  out.push_back(step("CHK-S1POCH", "s1-pochhammer-form",
                     R"(S_1=\frac{4p}{3p-1}\frac{(1)_{\frac{p-1}2}}{(\frac13)_{\frac{p-1}2}}+\frac{2p}{3p+1}\frac{(1)_{\frac{p-1}2}}{(\frac23)_{\frac{p-1}2}})", 3,
                     false,
                     [](CheckContext& c) {
                       return Instances{inst("S1", s1(c), pochhammer_third(c) + pochhammer_two_thirds(c))};
                     },
                     "An exact equality (partial fractions at x = 1/3 and 2/3), compared modulo p^3."));

  out.push_back(step("CHK-4P", "pochhammer-third-value",
                     R"(\frac{4p}{3p-1}\frac{(1)_{\frac{p-1}2}}{(\frac13)_{\frac{p-1}2}}\equiv4x+3pxq_p(3)-\frac{p}{x}\pmod{p^2})", 2, true,
                     [](CheckContext& c) {
                       const Rational x = c.x(), p(c.pl());
                       return Instances{inst("4p/(3p-1) ratio", pochhammer_third(c), 4 * x + 3 * p * x * c.q3() - p / x)};
                     }));

  out.push_back(step("CHK-2P", "pochhammer-two-thirds-value",
                     R"(\frac{2p}{3p+1}\frac{(1)_{\frac{p-1}2}}{(\frac23)_{\frac{p-1}2}}\equiv\frac{p}{x}\pmod{p^2})", 2, true,
                     [](CheckContext& c) {
                       return Instances{inst("2p/(3p+1) ratio", pochhammer_two_thirds(c), Rational(c.pl()) / c.x())};
                     }));

  out.push_back(step("CHK-S1", "s1-value", R"(S_1\equiv4x+3pxq_p(3)\pmod{p^2})", 2, true, [](CheckContext& c) {
    const Rational x = c.x(), p(c.pl());
    return Instances{inst("S1", s1(c), 4 * x + 3 * p * x * c.q3())};
  }));

  out.push_back(step("CHK-S2", "s2-value", R"(S_2\equiv-3pxq_p(3)\pmod{p^2})", 2, true, [](CheckContext& c) {
    const Rational x = c.x(), p(c.pl());
    const long a = c.a(), m = c.m();
    const Rational v = s2(c);
    return Instances{
        inst("S2", v, -3 * p * x * c.q3()),
        inst("S2 via C(-1/2,a)", v, 2 * (C(Q(-1, 2), a) - C(m, a))),
        inst("S2 via harmonic difference", v, -p * C(m, a) * (c.H(m) - c.H(c.b()))),
    };
  }));

  out.push_back(step("CHK-MAIN2", "weighted-quarter-sum-reduction",
                     R"(\sum_{k=0}^{p-1}(3k+2)\frac{f_k}{(-4)^k}\equiv p\sum_{j}\binom{\frac{p-1}2}j(-1)^j\left(\frac1{3j+1}-\frac1{3j+2}\right)+S_3\pmod{p^2})",
                     2, false, [](CheckContext& c) {
                       return Instances{inst("main sum", c.franel_sum(-4, 3, 2), alternating_difference(c) + s3(c))};
                     }));

  out.push_back(step("CHK-3J13J2", "alternating-difference-value",
                     R"(p\sum_{j}\binom{\frac{p-1}2}j(-1)^j\left(\frac1{3j+1}-\frac1{3j+2}\right)\equiv2x+\frac{3px}2q_p(3)-\frac{3p}{2x}\pmod{p^2})", 2,
                     true, [](CheckContext& c) {
                       const Rational x = c.x(), p(c.pl());
                       return Instances{inst("difference sum", alternating_difference(c), 2 * x + 3 * p * x / 2 * c.q3() - 3 * p / (2 * x))};
                     }));

  out.push_back(step("CHK-S3", "s3-value", R"(S_3\equiv-\frac{3px}2q_p(3)+\frac{3p}{2x}\pmod{p^2})", 2, true, [](CheckContext& c) {
    const Rational x = c.x(), p(c.pl());
    const long a = c.a(), m = c.m();
    const Rational v = s3(c);
    const Rational half = Q(-1, 2);
    return Instances{
        inst("S3", v, -3 * p * x / 2 * c.q3() + 3 * p / (2 * x)),
        inst("S3 via C(-1/2,.)", v, (C(half, a) - C(m, a)) / (p + 1) - C(half, 2 * a)),
    };
  }));

  out.push_back(step("CHK-NEGHALF", "negative-half-binomial",
                     R"(\binom{-1/2}{\frac{2p-2}3}\equiv\frac{-3p(-1)^{(p-1)/2}}{\binom{\frac{2p-2}3}{\frac{p-1}2}}\pmod{p^2})", 2, false,
                     [](CheckContext& c) {
                       const long a = c.a();
                       return Instances{inst("C(-1/2,2a)", C(Q(-1, 2), 2 * a), Rational(-3 * c.pl() * c.sgn_m()) / C(2 * a, c.m()))};
                     }));

  out.push_back(step("CHK-2P3P", "pochhammer-third-mod-p",
                     R"(\frac{2p}{3p-1}\frac{(1)_{\frac{p-1}2}}{(\frac13)_{\frac{p-1}2}}\equiv\binom{\frac{p-1}2}{\frac{p-1}3}\pmod{p})", 1, false,
                     [](CheckContext& c) {
                       return Instances{inst("2p/(3p-1) ratio", pochhammer_third(c) / 2, C(c.m(), c.a()))};
                     }));
}

}  // namespace supercong::detail
