// Classical harmonic-number congruences and elementary binomial facts. These
// hold for every prime above a small bound regardless of its class mod 3.

#include "common.hpp"

namespace supercong::detail {

namespace {

CheckDefinition sunh(std::string id, std::string anchor, std::string formula, int k,
                     std::function<std::vector<CheckInstance>(CheckContext&)> eval) {
  return {std::move(id), std::move(anchor), std::move(formula), "p > 5", applies_above_five, k, false, "", std::move(eval)};
}

using Instances = std::vector<CheckInstance>;

}  // namespace

void register_classical_checks(std::vector<CheckDefinition>& out) {
  out.push_back(sunh("CHK-SUNH-H2FULL", "second-order-harmonic-full", R"(H_{p-1}^{(2)}\equiv0\pmod{p})", 1,
                     [](CheckContext& c) { return Instances{inst("H2(p-1)", c.H2(c.pl() - 1), Rational(0))}; }));

  out.push_back(sunh("CHK-SUNH-H2HALF", "second-order-harmonic-half", R"(H_{\frac{p-1}2}^{(2)}\equiv0\pmod{p})", 1,
                     [](CheckContext& c) { return Instances{inst("H2((p-1)/2)", c.H2(c.m()), Rational(0))}; }));

  out.push_back(sunh("CHK-WOLST", "wolstenholme", R"(H_{p-1}\equiv0\pmod{p^2})", 2,
                     [](CheckContext& c) { return Instances{inst("H(p-1)", c.H(c.pl() - 1), Rational(0))}; }));

  out.push_back(sunh("CHK-SUNH-H2SIXTH", "second-order-harmonic-sixth",
                     R"(\frac15H_{\lfloor\frac{p}6\rfloor}^{(2)}\equiv H_{\lfloor\frac{p}3\rfloor}^{(2)}\pmod p)", 1,
                     [](CheckContext& c) {
                       return Instances{inst("H2(p/6)/5 vs H2(p/3)", c.H2(c.pl() / 6) / 5, c.H2(c.pl() / 3))};
                     }));

  out.push_back(sunh("CHK-SUNH-H2THIRD", "second-order-harmonic-third",
                     R"(H_{\lfloor\frac{p}3\rfloor}^{(2)}\equiv\frac12\left(\frac{p}3\right)B_{p-2}\left(\frac13\right)\pmod p)", 1,
                     [](CheckContext& c) {
                       return Instances{inst("H2(p/3)", c.H2(c.pl() / 3), c.legendre3() * c.bernoulli_third() / 2)};
                     }));

  out.push_back(sunh("CHK-SUNH-HSIXTH", "harmonic-sixth",
                     R"(H_{\lfloor\frac{p}6\rfloor}\equiv-2q_p(2)-\frac32q_p(3)+pq^2_p(2)+\frac{3p}4q^2_p(3)-\frac{5p}{12}\left(\frac{p}3\right)B_{p-2}\left(\frac13\right)\pmod{p^2})",
                     2, [](CheckContext& c) {
                       const Rational p(c.pl());
                       const Rational rhs = -2 * c.q2() - Q(3, 2) * c.q3() + p * c.q2() * c.q2() + Q(3, 4) * p * c.q3() * c.q3() -
                                            Q(5, 12) * p * c.legendre3() * c.bernoulli_third();
                       return Instances{inst("H(p/6)", c.H(c.pl() / 6), rhs)};
                     }));

  out.push_back(sunh("CHK-SUNH-HTHIRD", "harmonic-third",
                     R"(H_{\lfloor\frac{p}3\rfloor}\equiv-\frac32q_p(3)+\frac{3p}4q^2_p(3)-\frac{p}6\left(\frac{p}3\right)B_{p-2}\left(\frac13\right)\pmod{p^2})",
                     2, [](CheckContext& c) {
                       const Rational p(c.pl());
                       const Rational rhs =
                           -Q(3, 2) * c.q3() + Q(3, 4) * p * c.q3() * c.q3() - p / 6 * c.legendre3() * c.bernoulli_third();
                       return Instances{inst("H(p/3)", c.H(c.pl() / 3), rhs)};
                     }));

  out.push_back(sunh("CHK-SUNH-HHALF", "harmonic-half", R"(H_{\frac{p-1}2}\equiv-2q_p(2)+pq^2_p(2)\pmod{p^2})", 2,
                     [](CheckContext& c) {
                       const Rational rhs = -2 * c.q2() + Rational(c.pl()) * c.q2() * c.q2();
                       return Instances{inst("H((p-1)/2)", c.H(c.m()), rhs)};
                     }));

  out.push_back(sunh("CHK-SUNH-H2QUARTER", "second-order-harmonic-quarter",
                     R"(H_{\lfloor\frac{p}4\rfloor}^{(2)}\equiv(-1)^{\frac{p-1}2}4E_{p-3}\pmod p)", 1,
                     [](CheckContext& c) {
                       return Instances{inst("H2(p/4)", c.H2(c.pl() / 4), Rational(4 * c.sgn_m() * c.euler()))};
                     }));

  out.push_back(sunh("CHK-SUNH-HTWOTHIRDS", "harmonic-two-thirds",
                     R"(H_{\lfloor\frac{2p}3\rfloor}\equiv-\frac32q_p(3)+\frac{3p}4q^2_p(3)+\frac{p}3\left(\frac{p}3\right)B_{p-2}\left(\frac13\right)\pmod{p^2})",
                     2, [](CheckContext& c) {
                       const Rational p(c.pl());
                       const Rational rhs =
                           -Q(3, 2) * c.q3() + Q(3, 4) * p * c.q3() * c.q3() + p / 3 * c.legendre3() * c.bernoulli_third();
                       return Instances{inst("H(2p/3)", c.H(2 * c.pl() / 3), rhs)};
                     }));

  out.push_back({
      "CHK-CENTRALBIN", "central-binomial-vanishes", R"(\binom{2k}k\equiv0\pmod p,\ \frac{p+1}2\le k\le p-1)", "p > 3",
      applies_above_three, 1, false, "",
      [](CheckContext& c) {
        Instances v;
        for (long k = c.m() + 1; k <= c.pl() - 1; ++k) v.push_back(inst("k=" + std::to_string(k), C(2 * k, k), Rational(0)));
        return v;
      },
  });

  out.push_back({
      "CHK-JBIN2P", "central-binomial-product", R"(j\binom{2j}j\binom{2p-2j}{p-j}\equiv2p\pmod{p^2},\ \frac{p+1}2\le j\le p-1)",
      "p > 3", applies_above_three, 2, false, "",
      [](CheckContext& c) {
        const long p = c.pl();
        Instances v;
        for (long j = c.m() + 1; j <= p - 1; ++j) {
          v.push_back(inst("j=" + std::to_string(j), Rational(j) * C(2 * j, j) * C(2 * p - 2 * j, p - j), Rational(2 * p)));
        }
        return v;
      },
  });

  out.push_back({
      "CHK-H2SYM", "second-order-harmonic-symmetry", R"(H_{p-1-k}^{(2)}\equiv H_k^{(2)}\pmod p,\ 0\le k\le p-1)", "p > 3",
      applies_above_three, 1, false,
      "As displayed the congruence has the wrong sign: 1/(p-i)^2 = 1/i^2 and H_{p-1}^(2) = 0 give "
      "H_{p-1-k}^(2) = -H_k^(2) (mod p). The counted instances are that form together with the first-order "
      "H_{p-1-k} = H_k; the displayed form is tallied in the note.",
      [](CheckContext& c) {
        const long p = c.pl();
        Instances v;
        long literal_holds = 0;
        for (long k = 0; k <= p - 1; ++k) {
          const std::string at = "k=" + std::to_string(k);
          v.push_back(inst(at + " second order", c.H2(p - 1 - k), -c.H2(k)));
          v.push_back(inst(at + " first order", c.H(p - 1 - k), c.H(k)));
          if (reduce_mod_pk(c.H2(p - 1 - k), c.p(), 1) == reduce_mod_pk(c.H2(k), c.p(), 1)) ++literal_holds;
        }
        v.push_back(aside("displayed sign holds at " + std::to_string(literal_holds) + "/" + std::to_string(p) + " indices",
                          Rational(literal_holds == p ? 1 : 0), Rational(1)));
        return v;
      },
  });

  out.push_back({
      "CHK-RATBIN", "central-binomial-ratio",
      R"(\frac{\binom{2k}k}{(-4)^k}\equiv\frac{\binom{(p-1)/2}k}{(1-p\sum_{j=1}^k\frac1{2j-1})}\pmod{p^2},\ 0\le k\le\frac{p-1}2)", "p > 3",
      applies_above_three, 2, false, "",
      [](CheckContext& c) {
        Instances v;
        Rational odd = 0;  // sum_{j<=k} 1/(2j-1)
        for (long k = 0; k <= c.m(); ++k) {
          if (k > 0) odd += Q(1, 2 * k - 1);
          v.push_back(inst("k=" + std::to_string(k), C(2 * k, k) / pow(Rational(-4), k), C(c.m(), k) / (1 - c.pl() * odd)));
        }
        return v;
      },
  });

  out.push_back({
      "CHK-HSHIFT6", "harmonic-shift-sixth", R"(H_{\frac{p-1}6}-\sum_{k=1}^{\frac{p-1}6}\frac1{k+r}\equiv-\sum_{k=1}^r\frac1{k(6k-1)}\pmod p)",
      "p = 1 (mod 3), p >= 7", applies_one_mod_three, 1, false,
      "r runs over 1 <= r <= p-1-(p-1)/6, the range where every k+r stays below p.",
      [](CheckContext& c) {
        const long b = c.b();
        Instances v;
        Rational rhs = 0;
        for (long r = 1; r <= c.pl() - 1 - b; ++r) {
          rhs -= Q(1, r * (6 * r - 1));
          const Rational lhs = c.H(b) - (c.H(b + r) - c.H(r));
          v.push_back(inst("r=" + std::to_string(r), lhs, rhs));
        }
        return v;
      },
  });

  out.push_back({
      "CHK-HSHIFT2", "harmonic-shift-half", R"(H_{\frac{p-1}2}-\sum_{k=1}^{\frac{p-1}2}\frac1{k+r}\equiv-\sum_{k=1}^r\frac1{k(2k-1)}\pmod p)",
      "p > 3", applies_above_three, 1, false, "r runs over 1 <= r <= (p-1)/2, the range where every k+r stays below p.",
      [](CheckContext& c) {
        const long m = c.m();
        Instances v;
        Rational rhs = 0;
        for (long r = 1; r <= m; ++r) {
          rhs -= Q(1, r * (2 * r - 1));
          const Rational lhs = c.H(m) - (c.H(m + r) - c.H(r));
          v.push_back(inst("r=" + std::to_string(r), lhs, rhs));
        }
        return v;
      },
  });
}

}  // namespace supercong::detail
