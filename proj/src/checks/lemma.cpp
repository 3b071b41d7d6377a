#include "common.hpp"

namespace supercong::detail {

void register_lemma_checks(std::vector<CheckDefinition>& out) {
  const std::string when = "p = 1 (mod 3), p >= 7";

  out.push_back({
      "CHK-LEM22", "binomial-product-low",
      R"(\binom{3j}j\binom{p+j}{3j+1}\equiv\frac{p}{3j+1}(1-pH_{2j}+pH_j)\pmod{p^3},\ 0\le j\le\frac{p-1}2,\ j\ne\frac{p-1}3)",
      when, applies_one_mod_three, 3, false, "",
      [](CheckContext& c) {
        const long p = c.pl();
        std::vector<CheckInstance> v;
        for (long j = 0; j <= c.m(); ++j) {
          if (j == c.a()) continue;
          const Rational rhs = Q(p, 3 * j + 1) * (1 - p * c.H(2 * j) + p * c.H(j));
          v.push_back(inst("j=" + std::to_string(j), C(3 * j, j) * C(p + j, 3 * j + 1), rhs));
        }
        return v;
      },
  });

  out.push_back({
      "CHK-P2J-LOW", "binomial-product-alternating-low",
      R"(\binom{3j}j\binom{p+2j}{3j+1}\equiv\frac{p(-1)^j}{3j+1}(1+pH_{2j}-pH_j)\pmod{p^3},\ 0\le j\le\frac{p-1}2,\ j\ne\frac{p-1}3)",
      when, applies_one_mod_three, 3, false, "",
      [](CheckContext& c) {
        const long p = c.pl();
        std::vector<CheckInstance> v;
        for (long j = 0; j <= c.m(); ++j) {
          if (j == c.a()) continue;
          const Rational rhs = Q(p, 3 * j + 1) * sgn(j) * (1 + p * c.H(2 * j) - p * c.H(j));
          v.push_back(inst("j=" + std::to_string(j), C(3 * j, j) * C(p + 2 * j, 3 * j + 1), rhs));
        }
        return v;
      },
  });

  out.push_back({
      "CHK-P2J-HIGH", "binomial-product-alternating-high",
      R"(\binom{3j}j\binom{p+2j}{3j+1}\equiv\frac{2p(-1)^j}{3j+1}\pmod{p^2},\ \frac{p+1}2\le j\le p-1)",
      when, applies_one_mod_three, 2, false, "",
      [](CheckContext& c) {
        const long p = c.pl();
        std::vector<CheckInstance> v;
        for (long j = c.m() + 1; j <= p - 1; ++j) {
          v.push_back(inst("j=" + std::to_string(j), C(3 * j, j) * C(p + 2 * j, 3 * j + 1), Q(2 * p, 3 * j + 1) * sgn(j)));
        }
        return v;
      },
  });

  out.push_back({
      "CHK-MPT", "shifted-binomial-expansion",
      R"(\binom{\frac{p-1}2+pt}{\frac{p-1}3}\equiv\binom{\frac{p-1}2}{\frac{p-1}3}(1+pt(H_{(p-1)/2}-H_{(p-1)/6}))\pmod{p^2})",
      when, applies_one_mod_three, 2, false, "t ranges over {0, 1, 2, 3, (p-1)/2}.",
      [](CheckContext& c) {
        const long p = c.pl(), m = c.m(), a = c.a();
        std::vector<CheckInstance> v;
        for (long t : {0L, 1L, 2L, 3L, m}) {
          const Rational rhs = C(m, a) * (1 + p * t * (c.H(m) - c.H(c.b())));
          v.push_back(inst("t=" + std::to_string(t), C(m + p * t, a), rhs));
        }
        return v;
      },
  });
}

}  // namespace supercong::detail
