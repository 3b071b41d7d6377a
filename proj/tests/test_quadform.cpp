#include "doctest.h"
#include "supercong/errors.hpp"
#include "supercong/modular.hpp"
#include "supercong/quadform.hpp"

using namespace supercong;

TEST_CASE("represent: worked examples") {
  CHECK(represent(7) == PrimeRepresentation{7, -2, 1});
  CHECK(represent(13) == PrimeRepresentation{13, 1, 2});
  CHECK(represent(43) == PrimeRepresentation{43, 4, 3});
  CHECK(represent(31) == PrimeRepresentation{31, -2, 3});
  CHECK(represent(61) == PrimeRepresentation{61, 7, 2});
  CHECK_THROWS_AS(represent(5), NotRepresentableError);
  CHECK_THROWS_AS(represent(11), NotRepresentableError);
}

TEST_CASE("represent_bruteforce: worked examples") {
  CHECK(represent_bruteforce(7) == PrimeRepresentation{7, -2, 1});
  CHECK(represent_bruteforce(31) == PrimeRepresentation{31, -2, 3});
  CHECK(represent_bruteforce(61) == PrimeRepresentation{61, 7, 2});
  CHECK_THROWS_AS(represent_bruteforce(5), NotRepresentableError);
}

TEST_CASE("represent rejects non-primes and tiny primes") {
  CHECK_THROWS_AS(represent(3), std::invalid_argument);
  CHECK_THROWS_AS(represent(49), std::invalid_argument);
  CHECK_THROWS_AS(represent(1), std::invalid_argument);
}

TEST_CASE("Cornacchia matches exhaustive search for every p = 1 mod 3 below 10^5") {
  std::size_t count = 0;
  for (auto p : primes_between(7, 100000)) {
    if (p % 3 != 1) continue;
    const PrimeRepresentation fast = represent(p);
    const PrimeRepresentation slow = represent_bruteforce(p);
    if (!(fast == slow)) {
      CAPTURE(p);
      CHECK(fast == slow);
    }
    const auto x = fast.x;
    CHECK(static_cast<std::uint64_t>(x * x + 3 * fast.y * fast.y) == p);
    CHECK(((x % 3) + 3) % 3 == 1);
    CHECK(fast.y > 0);
    ++count;
  }
  CHECK(count > 4000);
}

TEST_CASE("Tonelli-Shanks square roots") {
  for (auto p : primes_between(3, 2000)) {
    for (std::uint64_t a = 0; a < 40; ++a) {
      const auto r = sqrt_mod(a, p);
      if (r) {
        CHECK(mul_mod(*r, *r, p) == a % p);
      } else {
        CHECK(pow_mod(a % p, (p - 1) / 2, p) == p - 1);
      }
    }
  }
}

TEST_CASE("primality agrees with trial division") {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    bool trial = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        trial = false;
        break;
      }
    }
    if (trial != is_prime(n)) {
      CAPTURE(n);
      CHECK(trial == is_prime(n));
    }
  }
  CHECK(is_prime(1000000007ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}
