// The derivation of the mod p^3 congruence between the two Franel sums.
//
// Notation follows the derivation: m = (p-1)/2, a = (p-1)/3, b = (p-1)/6 and
// T(n) = sum_{k=1}^{n} 4^k/(k^2 C(2k,k)). S5 collects the boundary terms
//   S5 = S3' - S4 + S2' - S1'
// with
//   S1' = C(-1/2,a) C(p-1,a) C(p+a,p)
//   S2' = C(m,a) (1 + p/2 H_a)
//   S3' = C(-1/2,a) C(p-1,a) C(p+2a,p)
//   S4  = C(m,a) (1 + 2p H_{2a} - 3p/2 H_a).
//
// Where the displayed formulas write C(p+2a, a) the evaluators use
// C(p+2a, 2a) = C(p+2a, p), the binomial the expansion actually describes;
// the literal form is kept as an informational instance.

#include "common.hpp"

namespace supercong::detail {

namespace {

using Instances = std::vector<CheckInstance>;

Rational s1_prime(CheckContext& c) {
  const long p = c.pl(), a = c.a();
  return C(Q(-1, 2), a) * C(p - 1, a) * C(p + a, p);
}

Rational s2_prime(CheckContext& c) { return C(c.m(), c.a()) * (1 + Q(c.pl(), 2) * c.H(c.a())); }

Rational s3_prime(CheckContext& c) {
  const long p = c.pl(), a = c.a();
  return C(Q(-1, 2), a) * C(p - 1, a) * C(p + 2 * a, p);
}

Rational s4(CheckContext& c) {
  const long p = c.pl(), a = c.a();
  return C(c.m(), a) * (1 + 2 * p * c.H(2 * a) - Q(3 * p, 2) * c.H(a));
}

Rational s5(CheckContext& c) { return s3_prime(c) - s4(c) + s2_prime(c) - s1_prime(c); }

// 2p^2 sum_j C(m,j) (-1)^j (H_2j - H_j)/(3j+1)
Rational harmonic_part(CheckContext& c) {
  const long p = c.pl(), m = c.m();
  return 2 * p * p * sum(0, m, [&](long j) -> Rational {
           return C(m, j) * sgn(j) * (c.H(2 * j) - c.H(j)) / (3 * j + 1);
         });
}

// sum_{j=1}^{m} 4^j/((3j-1) j C(2j,j))
Rational reciprocal_part(CheckContext& c) {
  return sum(1, c.m(), [](long j) -> Rational { return pow4(j) / (Rational((3 * j - 1) * j) * C(2 * j, j)); });
}

// sum_{k=lo}^{hi} (-1)^k/((k+1) C(m,k))
Rational inverse_binomial_sum(CheckContext& c, long lo, long hi) {
  const long m = c.m();
  return sum(lo, hi, [m](long k) -> Rational { return sgn(k) / (Rational(k + 1) * C(m, k)); });
}

// sum_{k=1}^{m} (-1)^k/(k^2 C(-5/6,k))
Rational five_sixths_sum(CheckContext& c) {
  return sum(1, c.m(), [](long k) -> Rational { return sgn(k) / (Rational(k * k) * C(Q(-5, 6), k)); });
}

// sum_{k=1}^{m} (1/3)_k / (k (lower)_k)
Rational third_over(CheckContext& c, const Rational& lower) {
  return sum(1, c.m(), [&](long k) -> Rational {
    return rising_factorial(Q(1, 3), k) / (Rational(k) * rising_factorial(lower, k));
  });
}

Rational three_j_sum(long lo, long hi) {
  return 3 * sum(lo, hi, [](long j) -> Rational { return pow4(j) / (Rational(3 * j - 1) * C(2 * j, j)); });
}

Rational binomial_expansion(CheckContext& c, long n) {
  const Rational p(c.pl());
  return 1 + p * c.H(n) + p * p / 2 * (c.H(n) * c.H(n) - c.H2(n));
}

CheckDefinition step(std::string id, std::string anchor, std::string formula, int k, bool uses_x,
                     std::function<Instances(CheckContext&)> eval, std::string doc = "") {
  return {std::move(id), std::move(anchor), std::move(formula), "p = 1 (mod 3), p >= 7", applies_one_mod_three, k, uses_x,
          std::move(doc), std::move(eval)};
}

}  // namespace

void register_second_chain(std::vector<CheckDefinition>& out) {
  out.push_back(step(
      "CHK-ZMAIN1", "half-sum-mod-p3",
      R"(\sum_{k=0}^{p-1}\frac{f_k}{2^k}\equiv p\sum_{j\ne\frac{p-1}3}\frac{\binom{2j}j}{4^j}\frac{1-pH_{2j}+pH_j}{3j+1}+S_1\pmod{p^3})", 3, false,
      [](CheckContext& c) {
        const long p = c.pl();
        Rational rest = 0;
        for (long j = 0; j <= c.m(); ++j) {
          if (j == c.a()) continue;
          rest += C(2 * j, j) / pow4(j) * (1 - p * c.H(2 * j) + p * c.H(j)) / (3 * j + 1);
        }
        return Instances{inst("half sum", c.franel_sum(2, 0, 1), p * rest + s1_prime(c))};
      },
      "The displayed summand writes H_{2k}, H_k under a sum over j; the summation index j is used."));

  out.push_back(step(
      "CHK-MAIN", "half-sum-alternating-form",
      R"(\sum_{k=0}^{p-1}\frac{f_k}{2^k}\equiv p\sum_{j}\binom{\frac{p-1}2}j\frac{(-1)^j(1+\frac p2H_j)}{3j+1}+S_1-S_2\pmod{p^3})", 3, false,
      [](CheckContext& c) {
        const long p = c.pl(), m = c.m();
        const Rational alt = p * sum(0, m, [&](long j) -> Rational {
                               return C(m, j) * sgn(j) * (1 + Q(p, 2) * c.H(j)) / (3 * j + 1);
                             });
        return Instances{inst("half sum", c.franel_sum(2, 0, 1), alt + s1_prime(c) - s2_prime(c))};
      },
      "Uses the summation index j inside the harmonic numbers."));

  out.push_back(step(
      "CHK-ZHUYAO", "sum-difference-decomposition",
      R"(\sum\frac{f_k}{(-4)^k}-\sum\frac{f_k}{2^k}\equiv2p^2\sum_{j}\binom{\frac{p-1}2}j\frac{(-1)^j(H_{2j}-H_j)}{3j+1}+S_5+p^2\sum_{j}\frac{4^j}{(3j-1)j\binom{2j}j}\pmod{p^3})",
      3, false, [](CheckContext& c) {
        const long p = c.pl();
        const Rational diff = c.franel_sum(-4, 0, 1) - c.franel_sum(2, 0, 1);
        return Instances{inst("difference", diff, harmonic_part(c) + s5(c) + Rational(p * p) * reciprocal_part(c))};
      }));

  out.push_back(step(
      "CHK-S5", "boundary-terms-vanish", R"(S_5\equiv0\pmod{p^3})", 3, false,
      [](CheckContext& c) {
        const long p = c.pl(), a = c.a(), m = c.m();
        const Rational v = s5(c);
        const Rational tail = 2 * p * C(m, a) * (c.H(a) - c.H(2 * a));
        const Rational front = C(Q(-1, 2), a) * C(p - 1, a);
        return Instances{
            inst("S5", v, Rational(0)),
            inst("S5 regrouped", v, front * (C(p + 2 * a, 2 * a) - C(p + a, a)) + tail),
            aside("S5 regrouped with C(p+2a,a)", v, front * (C(p + 2 * a, a) - C(p + a, a)) + tail),
        };
      }));

  out.push_back(step("CHK-ZHUP3", "sum-difference-mod-p3",
                     R"(\sum_{k=0}^{p-1}\frac{f_k}{(-4)^k}-\sum_{k=0}^{p-1}\frac{f_k}{2^k}\equiv S_5\pmod{p^3})", 3, false,
                     [](CheckContext& c) {
                       return Instances{inst("difference", c.franel_sum(-4, 0, 1) - c.franel_sum(2, 0, 1), s5(c))};
                     }));

  out.push_back(step(
      "CHK-BINEXP-A", "binomial-expansion-two-thirds",
      R"(\binom{p+\frac{2p-2}3}{\frac{2p-2}3}\equiv1+pH_{\frac{2p-2}3}+\frac{p^2}2\left(H_{\frac{2p-2}3}^2-H_{\frac{2p-2}3}^{(2)}\right)\pmod{p^3})", 3, false,
      [](CheckContext& c) {
        const long p = c.pl(), a = c.a();
        const Rational rhs = binomial_expansion(c, 2 * a);
        return Instances{inst("C(p+2a,2a)", C(p + 2 * a, 2 * a), rhs), aside("C(p+2a,a)", C(p + 2 * a, a), rhs)};
      }));

  out.push_back(step("CHK-BINEXP-B", "binomial-expansion-third",
                     R"(\binom{p+\frac{p-1}3}{\frac{p-1}3}\equiv1+pH_{\frac{p-1}3}+\frac{p^2}2\left(H_{\frac{p-1}3}^2-H_{\frac{p-1}3}^{(2)}\right)\pmod{p^3})", 3,
                     false, [](CheckContext& c) {
                       const long a = c.a();
                       return Instances{inst("C(p+a,a)", C(c.pl() + a, a), binomial_expansion(c, a))};
                     }));

  out.push_back(step(
      "CHK-BINDIFF", "binomial-difference",
      R"(\binom{p+\frac{2p-2}3}{\frac{2p-2}3}-\binom{p+\frac{p-1}3}{\frac{p-1}3}\equiv p^2\left(\frac{p}3\right)B_{p-2}\left(\frac13\right)\pmod{p^3})", 3,
      false, [](CheckContext& c) {
        const long p = c.pl(), a = c.a();
        const Rational diff = C(p + 2 * a, 2 * a) - C(p + a, a);
        const Rational target = Rational(p * p) * c.legendre3() * c.bernoulli_third();
        const Rational middle = p * (c.H(2 * a) - c.H(a)) + Q(p * p, 2) * (c.H2(a) - c.H2(2 * a));
        return Instances{
            inst("difference", diff, target),
            inst("difference via harmonic numbers", diff, middle),
            aside("difference with C(p+2a,a)", C(p + 2 * a, a) - C(p + a, a), target),
        };
      }));

  out.push_back(step("CHK-2PH", "harmonic-difference-third",
                     R"(2p\left(H_{\frac{p-1}3}-H_{\frac{2p-2}3}\right)\equiv-p^2\left(\frac{p}3\right)B_{p-2}\left(\frac13\right)\pmod{p^3})", 3, false,
                     [](CheckContext& c) {
                       const long p = c.pl(), a = c.a();
                       return Instances{inst("2p(H_a - H_2a)", 2 * p * (c.H(a) - c.H(2 * a)),
                                             -Rational(p * p) * c.legendre3() * c.bernoulli_third())};
                     }));

  out.push_back(step("CHK-131", "third-pochhammer-over-one",
                     R"(\sum_{k=1}^{\frac{p-1}2}\frac{(\frac13)_k}{k(1)_k}\equiv\frac32q_p(3)-\frac{3p}4q_p^2(3)-\frac{p}3\sum_{k=1}^{\frac{p-1}3}\frac{4^k}{k^2\binom{2k}k}\pmod{p^2})",
                     2, false, [](CheckContext& c) {
                       const Rational p(c.pl());
                       const Rational rhs = Q(3, 2) * c.q3() - Q(3, 4) * p * c.q3() * c.q3() - p / 3 * c.T(c.a());
                       return Instances{inst("sum", third_over(c, Rational(1)), rhs)};
                     }));

  out.push_back(step(
      "CHK-1312", "third-pochhammer-over-half",
      R"(\sum_{k=1}^{\frac{p-1}2}\frac{(\frac13)_k}{k(\frac12)_k}\equiv\frac{4p}3(-1)^{\frac{p-1}2}E_{p-3}+\frac32q_p(3)-\frac{3p}4q^2_p(3)-\frac{2p}3(-1)^{\frac{p-1}2}\sum_{k=1}^{\frac{p-1}3}\frac{4^k}{(2k-1)k\binom{2k}k}\pmod{p^2})",
      2, false, [](CheckContext& c) {
        const Rational p(c.pl());
        const Rational u = sum(1, c.a(), [](long k) -> Rational { return pow4(k) / (Rational((2 * k - 1) * k) * C(2 * k, k)); });
        const Rational rhs = Q(4, 3) * p * c.sgn_m() * Rational(c.euler()) + Q(3, 2) * c.q3() - Q(3, 4) * p * c.q3() * c.q3() -
                             Q(2, 3) * p * c.sgn_m() * u;
        return Instances{inst("sum", third_over(c, Q(1, 2)), rhs)};
      }));

  out.push_back(step("CHK-P121312", "third-pochhammer-over-half-reduced",
                     R"(\sum_{k=1}^{\frac{p-1}2}\frac{(\frac13)_k}{k(\frac12)_k}\equiv\frac32q_p(3)-\frac{3p}4q^2_p(3)+\frac{p}3\sum_{k=1}^{\frac{p-1}6}\frac{4^k}{k^2\binom{2k}k}\pmod{p^2})",
                     2, false, [](CheckContext& c) {
                       const Rational p(c.pl());
                       const Rational rhs = Q(3, 2) * c.q3() - Q(3, 4) * p * c.q3() * c.q3() + p / 3 * c.T(c.b());
                       return Instances{inst("sum", third_over(c, Q(1, 2)), rhs)};
                     }));

  out.push_back(step(
      "CHK-DIYIGE", "harmonic-part-value",
      R"(2p^2\sum_{j=0}^{\frac{p-1}2}\binom{\frac{p-1}2}j\frac{(-1)^j(H_{2j}-H_j)}{3j+1}\equiv-\frac{p^2}3\binom{\frac{p-1}2}{\frac{p-1}3}\left(\sum_{k=1}^{\frac{p-1}3}\frac{4^k}{k^2\binom{2k}k}+\sum_{k=1}^{\frac{p-1}6}\frac{4^k}{k^2\binom{2k}k}\right)\pmod{p^3})",
      3, false, [](CheckContext& c) {
        const long p = c.pl();
        const Rational rhs = -Q(p * p, 3) * C(c.m(), c.a()) * (c.T(c.a()) + c.T(c.b()));
        return Instances{inst("harmonic part", harmonic_part(c), rhs)};
      }));

  out.push_back(step(
      "CHK-P132K1", "odd-central-sum-chain",
      R"(2\sum_{k=1}^{\frac{p-1}3}\frac{4^k}{(2k-1)\binom{2k}k}\equiv2\sum_{k=1}^{\frac{p-1}3}\frac{(-1)^k}{(2k-1)\binom{\frac{p-1}2}k}\equiv(-1)^{\frac{p+1}2}\sum_{k=\frac{p-1}6}^{\frac{p-3}2}\frac{(-1)^k}{(k+1)\binom{\frac{p-1}2}{k}}\pmod{p})",
      1, false, [](CheckContext& c) {
        const long a = c.a(), m = c.m();
        const Rational first = 2 * sum(1, a, [](long k) -> Rational { return pow4(k) / (Rational(2 * k - 1) * C(2 * k, k)); });
        const Rational second = 2 * sum(1, a, [m](long k) -> Rational { return sgn(k) / (Rational(2 * k - 1) * C(m, k)); });
        const Rational third = -c.sgn_m() * inverse_binomial_sum(c, c.b(), (c.pl() - 3) / 2);
        return Instances{inst("first vs second", first, second), inst("second vs third", second, third)};
      }));

  out.push_back(step("CHK-P32", "inverse-binomial-half",
                     R"(\sum_{k=0}^{\frac{p-3}2}\frac{(-1)^k}{(k+1)\binom{\frac{p-1}2}{k}}\equiv2\left((-1)^{\frac{p-1}2}-1\right)-(-1)^{\frac{p-1}2}2E_{p-3}\pmod p)",
                     1, false, [](CheckContext& c) {
                       const int s = c.sgn_m();
                       const Rational rhs = Rational(2 * (s - 1)) - Rational(2 * s * c.euler());
                       return Instances{inst("sum", inverse_binomial_sum(c, 0, (c.pl() - 3) / 2), rhs)};
                     }));

  out.push_back(step(
      "CHK-P76", "inverse-binomial-sixth",
      R"(\sum_{k=0}^{\frac{p-7}6}\frac{(-1)^k}{(k+1)\binom{\frac{p-1}2}{k}}\equiv\frac{(-1)^{\frac{p-1}2}}{x}-2-\frac12\sum_{k=1}^{\frac{p-1}6}\frac{4^k}{k^2\binom{2k}k}\pmod p)", 1, true,
      [](CheckContext& c) {
        const Rational lhs = inverse_binomial_sum(c, 0, (c.pl() - 7) / 6);
        const Rational lead = c.sgn_m() / c.x() - 2;
        const Rational via_bernoulli = lead - Q(5, 4) * c.legendre3() * c.bernoulli_third() - five_sixths_sum(c) / 2;
        return Instances{inst("sum", lhs, lead - c.T(c.b()) / 2), inst("sum via C(-5/6,k)", lhs, via_bernoulli)};
      }));

  out.push_back(step("CHK-NEG56", "negative-five-sixths-sum",
                     R"(\sum_{k=1}^{\frac{p-1}2}\frac{(-1)^k}{k^2\binom{-\frac56}{k}}\equiv\sum_{k=1}^{\frac{p-1}6}\frac{4^k}{k^2\binom{2k}k}-\frac52\left(\frac{p}3\right)B_{p-2}\left(\frac13\right)\pmod p)",
                     1, false, [](CheckContext& c) {
                       const Rational rhs = c.T(c.b()) - Q(5, 2) * c.legendre3() * c.bernoulli_third();
                       return Instances{inst("sum", five_sixths_sum(c), rhs)};
                     }));

  out.push_back(step(
      "CHK-P13", "odd-central-sum-value",
      R"(2\sum_{k=1}^{\frac{p-1}3}\frac{4^k}{(2k-1)\binom{2k}k}\equiv-2+\frac1x+2E_{p-3}-\frac12(-1)^{\frac{p-1}2}\sum_{k=1}^{\frac{p-1}6}\frac{4^k}{k^2\binom{2k}k}\pmod p)",
      1, true,
      [](CheckContext& c) {
        const long a = c.a();
        const Rational rhs = -2 + 1 / c.x() + 2 * Rational(c.euler()) - c.sgn_m() * c.T(c.b()) / 2;
        const Rational binomial_reading = 2 * sum(1, a, [](long k) -> Rational { return pow4(k) / (Rational(2 * k - 1) * C(2 * k, k)); });
        const Rational literal = 2 * sum(1, a, [](long k) -> Rational { return pow4(k) / Rational(2 * k - 1); });
        const Rational k_binomial =
            2 * sum(1, a, [](long k) -> Rational { return pow4(k) / (Rational((2 * k - 1) * k) * C(2 * k, k)); });
        return Instances{
            inst("with C(2k,k)", binomial_reading, rhs),
            aside("literal 4^k/(2k-1)", literal, rhs),
            aside("with k C(2k,k)", k_binomial, rhs),
        };
      },
      "The displayed left side omits the central binomial; the counted reading restores C(2k,k) as in the preceding chain. "
      "The other two readings are reported in the note."));

  out.push_back(step("CHK-EASY", "central-reciprocal-half", R"(\sum_{j=1}^{\frac{p-1}2}\frac{4^j}{j\binom{2j}{j}}\equiv-2+2(-1)^{\frac{p-1}2}\pmod p)",
                     1, false, [](CheckContext& c) {
                       const Rational lhs = sum(1, c.m(), [](long j) -> Rational { return pow4(j) / (Rational(j) * C(2 * j, j)); });
                       return Instances{inst("sum", lhs, Rational(-2 + 2 * c.sgn_m()))};
                     }));

  out.push_back(step(
      "CHK-P133J1", "three-j-sum-low",
      R"(3\sum_{j=1}^{\frac{p-1}3}\frac{4^j}{(3j-1)\binom{2j}{j}}\equiv-2+\frac1x+\frac13\binom{\frac{p-1}2}{\frac{p-1}3}\sum_{k=1}^{\frac{p-1}3}\frac{4^k}{k^2\binom{2k}k}\pmod{p})", 1,
      true, [](CheckContext& c) {
        const long a = c.a();
        const Rational lhs = three_j_sum(1, a);
        const Rational shifted = sum(1, a, [a](long j) -> Rational { return pow4(j) / (Rational(j + a) * C(2 * j, j)); });
        const Rational neg_half = C(Q(-1, 2), a);
        return Instances{
            inst("sum", lhs, -2 + 1 / c.x() + C(c.m(), a) * c.T(a) / 3),
            inst("sum via 1/(j+a)", lhs, shifted),
            inst("sum via C(-1/2,a)", lhs, -2 + 2 / neg_half + neg_half * c.T(a) / 3),
        };
      }));

  out.push_back(step(
      "CHK-P23", "three-j-sum-high",
      R"(3\sum_{j=\frac{p+2}3}^{\frac{p-1}2}\frac{4^j}{(3j-1)\binom{2j}{j}}\equiv2(-1)^{\frac{p-1}2}-\frac1x+\frac13\binom{\frac{p-1}2}{\frac{p-1}3}\sum_{k=1}^{\frac{p-1}6}\frac{4^k}{k^2\binom{2k}k}\pmod p)",
      1, true,
      [](CheckContext& c) {
        const long p = c.pl(), m = c.m(), a = c.a(), top = (p - 7) / 6, shift = (p + 5) / 6;
        const Rational lhs = three_j_sum((p + 2) / 3, m);
        const Rational flip = -Rational(c.sgn_m());  // (-1)^((p+1)/2)
        const Rational reflected = 3 * sum(0, top, [m](long j) -> Rational {
                                     return sgn(m - j) / (Rational(3 * (m - j) - 1) * C(m, j));
                                   });
        const Rational odd = 6 * flip * sum(0, top, [](long j) -> Rational { return pow4(j) / (Rational(6 * j + 5) * C(2 * j, j)); });
        const Rational shifted = flip * sum(0, top, [shift](long j) -> Rational {
                                   return pow4(j) / (Rational(j + shift) * C(2 * j, j));
                                 });
        const Rational tail = sum(1, shift, [shift](long j) -> Rational { return pow4(j) / (Rational(j + shift) * C(2 * j, j)); });
        const Rational completed = Q(6, 5) * flip + flip * tail + 3 / C(m, a);
        return Instances{
            inst("sum", lhs, 2 * c.sgn_m() - 1 / c.x() + C(m, a) * c.T(c.b()) / 3),
            inst("reflected j -> (p-1)/2 - j", lhs, reflected),
            inst("via 1/(6j+5)", lhs, odd),
            inst("via 1/(j+(p+5)/6)", lhs, shifted),
            inst("completed to (p+5)/6", lhs, completed),
        };
      },
      "The intermediate evaluation of sum_{j<=(p+5)/6} 4^j/((j+(p+5)/6) C(2j,j)) is not registered; only the chain and the final "
      "value are checked."));

  out.push_back(step(
      "CHK-3J1FULL", "three-j-reciprocal-full",
      R"(\sum_{j=1}^{\frac{p-1}2}\frac{4^j}{(3j-1)j\binom{2j}{j}}\equiv\frac13\binom{\frac{p-1}2}{\frac{p-1}3}\left(\sum_{k=1}^{\frac{p-1}3}\frac{4^k}{k^2\binom{2k}k}+\sum_{k=1}^{\frac{p-1}6}\frac{4^k}{k^2\binom{2k}k}\right)\pmod p)",
      1, false, [](CheckContext& c) {
        const Rational both = C(c.m(), c.a()) * (c.T(c.a()) + c.T(c.b())) / 3;
        return Instances{
            inst("sum", reciprocal_part(c), both),
            inst("3 sum 4^j/((3j-1)C(2j,j))", three_j_sum(1, c.m()), -2 + 2 * c.sgn_m() + both),
        };
      }));
}

}  // namespace supercong::detail
