#include <thread>

#include "doctest.h"
#include "supercong/exact.hpp"
#include "supercong/modular.hpp"
#include "supercong/sequences.hpp"

using namespace supercong;

namespace {

// sum_{j=0}^{n-1} j^m = (B_{m+1}(n) - B_{m+1}(0)) / (m+1)
Rational power_sum(long n, long m) {
  Rational s = 0;
  for (long j = 0; j < n; ++j) s += pow(Integer(j), static_cast<unsigned long>(m));
  return s;
}

}  // namespace

TEST_CASE("Franel numbers") {
  CHECK(franel(0) == 1);
  CHECK(franel(1) == 2);
  CHECK(franel(3) == 56);
  CHECK(franel(7) == 104960);
}

TEST_CASE("direct summation equals the recurrence for n <= 300") {
  const auto rec = franel_by_recurrence(300);
  for (long n = 0; n <= 300; ++n) CHECK(rec[n] == franel(n));
  CHECK(check_franel_recurrence(2));
  CHECK(check_franel_recurrence(50));
  CHECK(check_franel_recurrence(300));
}

TEST_CASE("companion g_n and the Barrucand identity") {
  CHECK(companion_g(0) == 1);
  CHECK(companion_g(1) == 3);
  CHECK(companion_g(2) == 15);
  CHECK(companion_g(7) == 272835);
  CHECK(check_barrucand(0));
  CHECK(check_barrucand(1));
  CHECK(check_barrucand(100));
}

TEST_CASE("sequence values are positive and strictly increasing") {
  SequenceCache cache;
  for (long n = 1; n <= 80; ++n) {
    CHECK(cache.franel(n) > cache.franel(n - 1));
    CHECK(cache.companion(n) > cache.companion(n - 1));
  }
}

TEST_CASE("Bernoulli numbers use B_1 = -1/2") {
  SequenceCache cache;
  CHECK(cache.bernoulli(0) == 1);
  CHECK(cache.bernoulli(1) == make_rational(-1, 2));
  CHECK(cache.bernoulli(2) == make_rational(1, 6));
  CHECK(cache.bernoulli(12) == make_rational(-691, 2730));
  for (long n = 3; n <= 41; n += 2) CHECK(cache.bernoulli(n) == 0);
}

TEST_CASE("Bernoulli polynomials") {
  CHECK(bernoulli_poly_at(1, make_rational(1, 2)) == 0);
  CHECK(bernoulli_poly_at(0, Rational(0)) == 1);
  CHECK(bernoulli_poly_at(1, Rational(0)) == make_rational(-1, 2));
  CHECK(bernoulli_poly_at(2, Rational(0)) == make_rational(1, 6));
  CHECK(bernoulli_poly_at(5, make_rational(1, 3)) == make_rational(-5, 243));
  CHECK(bernoulli_poly_at(11, make_rational(1, 3)) == make_rational(20317, 177147));

  // Faulhaber oracle at integer points.
  for (long m = 0; m <= 12; ++m) {
    for (long n = 1; n <= 9; ++n) {
      const Rational via_poly = (bernoulli_poly_at(m + 1, Rational(n)) - bernoulli_poly_at(m + 1, Rational(0))) / (m + 1);
      CHECK(via_poly == power_sum(n, m));
    }
  }
}

TEST_CASE("B_{p-2} has a p-integral denominator for 5 <= p <= 300") {
  for (auto p : primes_between(5, 300)) {
    const Rational b = bernoulli_number(static_cast<long>(p) - 2);
    CHECK(mpz_divisible_ui_p(b.get_den().get_mpz_t(), p) == 0);
    CHECK(mpz_divisible_ui_p(bernoulli_poly_at(static_cast<long>(p) - 2, make_rational(1, 3)).get_den().get_mpz_t(), p) == 0);
  }
}

TEST_CASE("Euler (secant) numbers") {
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(4) == 5);
  CHECK(euler_number(10) == -50521);
  CHECK(euler_number(20) == Integer("370371188237525"));
  for (long n = 1; n <= 21; n += 2) CHECK(euler_number(n) == 0);
  for (long m = 0; 2 * m <= 20; ++m) CHECK(sgn(euler_number(2 * m)) == (m % 2 == 0 ? 1 : -1));
}

TEST_CASE("legendre symbol (p/3)") {
  CHECK(legendre_p_over_3(7) == 1);
  CHECK(legendre_p_over_3(5) == -1);
  CHECK(legendre_p_over_3(13) == 1);
  CHECK_THROWS_AS(legendre_p_over_3(3), std::invalid_argument);
  CHECK_THROWS_AS(legendre_p_over_3(9), std::invalid_argument);
}

TEST_CASE("cache is interleaving independent") {
  SequenceCache shared;
  std::vector<std::thread> workers;
  std::vector<Integer> seen(8);
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&, t] {
      for (long n = 0; n < 200; n += 1 + t) shared.franel(n);
      seen[t] = shared.franel(150 + t);
    });
  }
  for (auto& w : workers) w.join();
  for (int t = 0; t < 8; ++t) CHECK(seen[t] == franel(150 + t));
  const auto prefix = shared.franel_prefix(10);
  REQUIRE(prefix.size() == 10);
  CHECK(prefix[9] == franel(9));
}
