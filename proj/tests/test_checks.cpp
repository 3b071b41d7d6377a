#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "doctest.h"
#include "supercong/checks.hpp"
#include "supercong/errors.hpp"
#include "supercong/identities.hpp"
#include "supercong/modular.hpp"

using namespace supercong;

TEST_CASE("worked check examples") {
  const CheckResult fp2 = run_check("CHK-FP2", 7);
  CHECK(fp2.pass);
  CHECK(fp2.lhs == 10);
  CHECK(fp2.rhs == 10);
  CHECK(fp2.modulus == 49);
  CHECK(fp2.x == -2);
  CHECK(fp2.y == 1);

  const CheckResult thm = run_check("CHK-THM11A", 7);
  CHECK(thm.pass);
  CHECK(thm.rhs == 41);  // 4x mod 49 with x = -2

  CHECK_THROWS_AS(run_check("CHK-FP2", 5), NotApplicableError);
}

TEST_CASE("applicability") {
  CHECK_THROWS_AS(run_check("CHK-THM12", 11), NotApplicableError);  // 11 = 2 mod 3
  CHECK_THROWS_AS(run_check("CHK-THM12", 49), NotApplicableError);  // composite
  CHECK_THROWS_AS(run_check("CHK-WOLST", 5), NotApplicableError);
  CHECK_THROWS_AS(run_check("CHK-GAMMA-REFL", 3), NotApplicableError);
  CHECK_THROWS_AS(run_check("CHK-NOPE", 7), UnknownCheckError);
  CHECK_THROWS_AS(find_check("chk-fp2"), UnknownCheckError);

  // Classical facts hold in every residue class mod 3.
  CHECK(run_check("CHK-WOLST", 11).pass);
  CHECK(run_check("CHK-SUNH-H2QUARTER", 17).pass);
  CHECK(run_check("CHK-JBIN2P", 5).pass);
  CHECK_FALSE(run_check("CHK-WOLST", 11).x.has_value());
}

TEST_CASE("registry shape") {
  const auto& all = list_checks();
  CHECK(all.size() >= 30);
  CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& l, const auto& r) { return l.id < r.id; }));

  std::set<std::string> ids, anchors;
  for (const auto& def : all) {
    CAPTURE(def.id);
    CHECK(ids.insert(def.id).second);
    CHECK(anchors.insert(def.anchor).second);
    CHECK(!def.formula.empty());
    CHECK(!def.applicability.empty());
    CHECK(def.modulus_exponent >= 1);
    CHECK(def.modulus_exponent <= 3);
  }
  for (const char* id : {"CHK-THM11A", "CHK-THM11B", "CHK-THM12", "CHK-FP2", "CHK-LEM22", "CHK-P2J-LOW", "CHK-P2J-HIGH", "CHK-MPT",
                         "CHK-WOLST", "CHK-P13", "CHK-S5", "CHK-ZHUP3", "CHK-H2SYM", "CHK-GAMMA-DERIV"}) {
    CHECK(ids.count(id) == 1);
  }
}

// Every in-scope formula must be bound to exactly one check or identity. The
// table names each formula by the slug its binding carries.
TEST_CASE("every formula is reachable from exactly one check or identity") {
  const std::map<std::string, std::string> formulas = {
      {"franel-half-and-quarter-sums", "sum f_k/2^k = sum f_k/(-4)^k = 2x - p/(2x) mod p^2"},
      {"weighted-franel-half-sum", "1/4 sum (3k+4) f_k/2^k = x mod p^2"},
      {"weighted-franel-quarter-sum", "1/2 sum (3k+2) f_k/(-4)^k = x mod p^2"},
      {"franel-sums-mod-p3", "sum f_k/2^k = sum f_k/(-4)^k mod p^3"},
      {"barrucand", "sum C(n,k) f_k = g_n"},
      {"gamma-functional-equation", "Gamma_p(x+1) = -x Gamma_p(x)"},
      {"gamma-reflection", "Gamma_p(x) Gamma_p(1-x) = (-1)^{a_0(x)}"},
      {"gamma-taylor-shift", "Gamma_p(a+ps) = Gamma_p(a) + ps Gamma_p'(a)"},
      {"gamma-logarithmic-derivative", "Gamma_p'/Gamma_p(a) = 1 + H_{p-<-a>-1}"},
      {"franel-z-expansion", "sum C(n,k)^3 z^k expansion in z(1+z)"},
      {"franel-minus-four", "f_n as a sum with (-4)^{n-k}"},
      {"binomial-product-low", "C(-1/3,j)C(-2/3,j) products for j <= (p-1)/2"},
      {"second-order-harmonic-full", "H_{p-1}^(2) = 0 mod p"},
      {"second-order-harmonic-half", "H_{(p-1)/2}^(2) = 0 mod p"},
      {"wolstenholme", "H_{p-1} = 0 mod p^2"},
      {"second-order-harmonic-sixth", "H_{p/6}^(2)/5 = H_{p/3}^(2)"},
      {"second-order-harmonic-third", "H_{p/3}^(2) via B_{p-2}(1/3)"},
      {"harmonic-sixth", "H_{p/6} mod p^2"},
      {"harmonic-third", "H_{p/3} mod p^2"},
      {"harmonic-half", "H_{(p-1)/2} mod p^2"},
      {"harmonic-two-thirds", "H_{2p/3} mod p^2"},
      {"second-order-harmonic-quarter", "H_{p/4}^(2) via E_{p-3}"},
      {"partial-fractions", "sum C(n,k)(-1)^k/(k+x) = n!/(x)_{n+1}"},
      {"sum-3k4", "sum (3k+4) C(k+j,3j)"},
      {"sum-3k2", "sum (3k+2) C(k+2j,3j)"},
      {"shifted-binomial-expansion", "binomials shifted by pt"},
      {"binomial-product-alternating-low", "alternating products for j < (p-1)/3"},
      {"binomial-product-alternating-high", "alternating products for j > (p-1)/3"},
      {"weighted-half-sum-reduction", "(9j+5)/((3j+1)(3j+2)) reduction"},
      {"split-into-s1-s2", "sum = S1 + S2 mod p^2"},
      {"s1-pochhammer-form", "S1 through (kx)"},
      {"s1-value", "S1 = 4x + 3px q_p(3)"},
      {"s2-value", "S2 = -3px q_p(3)"},
      {"pochhammer-third-value", "4x + 3px q_p(3) - p/x"},
      {"pochhammer-two-thirds-value", "= p/x mod p^2"},
      {"franel-3k2-alternating", "sum (3k+2) f_k/(-4)^k reindexed"},
      {"weighted-quarter-sum-reduction", "the (-4)^k analogue of the half-sum reduction"},
      {"alternating-difference-value", "2x + 3px q_p(3)/2 - 3p/(2x)"},
      {"s3-value", "S3 = -3px q_p(3)/2 + 3p/(2x)"},
      {"hockey-stick", "sum C(k+j,3j) = C(n+j,3j+1)"},
      {"half-sum-mod-p3", "sum f_k/2^k mod p^3 over j"},
      {"half-sum-alternating-form", "the alternating form of the half sum"},
      {"pochhammer-third-mod-p", "= C((p-1)/2,(p-1)/3) mod p"},
      {"sum-difference-decomposition", "(-1)^j (H_2j - H_j) decomposition"},
      {"harmonic-difference-sum", "2 C(n,j)(-1)^j (H_2j - H_j) forms"},
      {"third-pochhammer-over-one", "-p/3 sum 4^k/(k^2 C(2k,k))"},
      {"third-pochhammer-over-half", "4p/3 (-1)^m E_{p-3}"},
      {"split-2k-1", "4^k/((2k-1)k C(2k,k)) split"},
      {"inverse-binomial-partial-fractions", "1/C(n+1+k,k) expansion"},
      {"odd-central-sum-chain", "(-1)^k/((k+1)C((p-1)/2,k))"},
      {"alternating-inverse-binomial", "sum (-1)^k/((k+1)C(n,k))"},
      {"inverse-binomial-half", "(-1)^m 2E_{p-3} mod p"},
      {"alternating-harmonic-6k", "sum (-1)^r/r C(n,r) sum 1/(k(6k-1))"},
      {"alternating-harmonic-2k", "sum (-1)^r/r C(n,r) sum 1/(k(2k-1))"},
      {"third-pochhammer-over-half-reduced", "+p/3 sum_{k<=(p-1)/6} 4^k/(k^2 C(2k,k))"},
      {"harmonic-part-value", "2p^2 sum over j display"},
      {"split-3j-1", "3 sum 4^j/((3j-1)C(2j,j)) split"},
      {"central-reciprocal-half", "-2 + 2(-1)^m mod p"},
      {"shifted-central-sum", "-n C(2n,n)/4^n sum 4^k/(k^2 C(2k,k))"},
      {"three-j-sum-low", "-2 + 1/x + C((p-1)/2,(p-1)/3)/3"},
      {"three-j-sum-high", "2(-1)^m - 1/x + C((p-1)/2,(p-1)/3)/3"},
      {"odd-central-sum-value", "-2 + 1/x + 2E_{p-3}"},
      {"central-binomial-reciprocal-sum", "-2 + 2*4^n/C(2n,n)"},
      {"sum-difference-mod-p3", "= S5 mod p^3"},
      {"boundary-terms-vanish", "S5 = 0 mod p^3"},
      {"binomial-expansion-two-thirds", "C(p+(2p-2)/3, .) expansion"},
      {"binomial-expansion-third", "C(p+(p-1)/3, (p-1)/3) expansion"},
      {"central-binomial-vanishes", "C(2k,k) = 0 mod p for (p+1)/2 <= k <= p-1"},
      {"central-binomial-product", "j C(2j,j) C(2p-2j,p-j) = 2p mod p^2"},
      {"second-order-harmonic-symmetry", "H_{p-1-k}^(2) against H_k^(2)"},
  };

  std::multiset<std::string> anchors;
  for (const auto& def : list_checks()) anchors.insert(def.anchor);
  for (const auto& def : identity_registry()) anchors.insert(def.anchor);

  for (const auto& [slug, formula] : formulas) {
    CAPTURE(formula);
    CHECK_MESSAGE(anchors.count(slug) == 1, slug);
  }
  // Anchors are unique across both registries.
  CHECK(std::set<std::string>(anchors.begin(), anchors.end()).size() == anchors.size());
}

// A check whose right side depends on x must notice when the sign
// normalization of x is wrong, otherwise it is not testing anything.
TEST_CASE("x-dependent checks are sensitive to the sign of x") {
  std::size_t covered = 0;
  for (const auto& def : list_checks()) {
    if (!def.uses_representation) continue;
    ++covered;
    bool flipped = false;
    for (auto p : primes_between(7, 100)) {
      if (!def.applies(p)) continue;
      const PrimeRepresentation rep = represent(p);
      CHECK(run_check(def.id, p, rep).pass);
      if (!run_check(def.id, p, PrimeRepresentation{p, -rep.x, rep.y}).pass) {
        flipped = true;
        break;
      }
    }
    CHECK_MESSAGE(flipped, def.id);
  }
  CHECK(covered >= 10);
}

TEST_CASE("non-integral evaluations are failures, not crashes") {
  // x = p makes every 1/x term non-integral.
  const CheckResult r = run_check("CHK-P13", 7, PrimeRepresentation{7, 7, 1});
  CHECK_FALSE(r.pass);
  CHECK(r.note.find("non-integral rhs") != std::string::npos);

  CHECK_THROWS_AS(run_check("CHK-P13", 7, PrimeRepresentation{13, 1, 2}), std::invalid_argument);
}

TEST_CASE("quantified checks report instance counts") {
  const CheckResult lem = run_check("CHK-LEM22", 13);
  CHECK(lem.pass);
  CHECK(lem.note == "instances=6 failed=0");  // j = 0..6 except j = 4

  const CheckResult sym = run_check("CHK-H2SYM", 13);
  CHECK(sym.pass);  // the displayed form holds only where H_k^(2) = 0: k = 0, 6, 12
  CHECK(sym.note.find("displayed sign holds at 3/13 indices: fails") != std::string::npos);

  const CheckResult p13 = run_check("CHK-P13", 13);
  CHECK(p13.pass);
  CHECK(p13.note.find("fails") != std::string::npos);
}
