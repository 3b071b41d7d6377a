// Top-level congruences for Franel sums modulo p^2 and p^3.

#include "common.hpp"

namespace supercong::detail {

void register_theorem_checks(std::vector<CheckDefinition>& out) {
  const std::string when = "p = 1 (mod 3), p >= 7";

  out.push_back({
      "CHK-FP2", "franel-half-and-quarter-sums",
      R"(\sum_{k<p} f_k/2^k \equiv \sum_{k<p} f_k/(-4)^k \equiv 2x-\frac{p}{2x}\pmod{p^2})",
      when, applies_one_mod_three, 2, true,
      "Both sums are compared against 2x - p/(2x); the reported residues are those of the 1/2^k sum.",
      [](CheckContext& c) {
        const Rational x = c.x();
        const Rational target = 2 * x - Rational(c.pl()) / (2 * x);
        return std::vector<CheckInstance>{
            inst("sum f_k/2^k", c.franel_sum(2, 0, 1), target),
            inst("sum f_k/(-4)^k", c.franel_sum(-4, 0, 1), target),
        };
      },
  });

  out.push_back({
      "CHK-THM11A", "weighted-franel-half-sum",
      R"(\frac14\sum_{k=0}^{p-1}(3k+4)\frac{f_k}{2^k}\equiv x\pmod{p^2})",
      when, applies_one_mod_three, 2, true,
      "Compared in the cleared form sum (3k+4) f_k/2^k = 4x.",
      [](CheckContext& c) {
        return std::vector<CheckInstance>{inst("sum (3k+4) f_k/2^k", c.franel_sum(2, 3, 4), 4 * c.x())};
      },
  });

  out.push_back({
      "CHK-THM11B", "weighted-franel-quarter-sum",
      R"(\frac12\sum_{k=0}^{p-1}(3k+2)\frac{f_k}{(-4)^k}\equiv x\pmod{p^2})",
      when, applies_one_mod_three, 2, true,
      "Compared in the cleared form sum (3k+2) f_k/(-4)^k = 2x.",
      [](CheckContext& c) {
        return std::vector<CheckInstance>{inst("sum (3k+2) f_k/(-4)^k", c.franel_sum(-4, 3, 2), 2 * c.x())};
      },
  });

  out.push_back({
      "CHK-THM12", "franel-sums-mod-p3",
      R"(\sum_{k=0}^{p-1}\frac{f_k}{2^k}\equiv\sum_{k=0}^{p-1}\frac{f_k}{(-4)^k}\pmod{p^3})",
      when, applies_one_mod_three, 3, false, "",
      [](CheckContext& c) {
        return std::vector<CheckInstance>{inst("sum f_k/2^k vs sum f_k/(-4)^k", c.franel_sum(2, 0, 1), c.franel_sum(-4, 0, 1))};
      },
  });
}

}  // namespace supercong::detail
