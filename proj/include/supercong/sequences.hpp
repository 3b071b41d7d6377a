#pragma once

// Franel numbers, Barrucand companions, Bernoulli and Euler numbers.
//
// Bernoulli convention: B_1 = -1/2, i.e. sum_{k=0}^{n} C(n+1,k) B_k = 0 for
// n >= 1. B_n(x) = sum_k C(n,k) B_k x^{n-k}. The opposite convention flips the
// sign of every odd-index term and with it B_{p-2}(1/3).
//
// Euler numbers are the secant numbers: E_0 = 1, E_2 = -1, E_4 = 5, odd
// indices zero.

#include <cstdint>
#include <mutex>
#include <vector>

#include "supercong/exact.hpp"

namespace supercong {

/// f_n = sum_k C(n,k)^3 by direct summation.
Integer franel(long n);

/// g_n = sum_k C(n,k)^2 C(2k,k).
Integer companion_g(long n);

/// f_0..f_n from (n+1)^2 f_{n+1} = (7n^2+7n+2) f_n + 8n^2 f_{n-1}.
std::vector<Integer> franel_by_recurrence(long n);

/// Recurrence holds against direct summation for every 1 <= n < N.
bool check_franel_recurrence(long N);

/// sum_k C(n,k) f_k == g_n for every 0 <= n <= N.
bool check_barrucand(long N);

Rational bernoulli_number(long n);
Rational bernoulli_poly_at(long n, const Rational& x);
Integer euler_number(long n);

/// (p/3): +1 when p = 1 (mod 3), -1 otherwise. Requires p > 3 prime.
int legendre_p_over_3(std::uint64_t p);

/// Grow-on-demand memo of the sequences above. Population is idempotent and
/// guarded by a mutex; readers get copies.
class SequenceCache {
 public:
  Integer franel(long n);
  Integer companion(long n);
  Rational bernoulli(long n);
  Integer euler(long n);

  /// f_0..f_{n-1} in one locked pass.
  std::vector<Integer> franel_prefix(long n);

 private:
  void grow_franel(long n);
  void grow_companion(long n);
  void grow_bernoulli(long n);
  void grow_euler(long n);

  std::mutex mutex_;
  std::vector<Integer> franel_;
  std::vector<Integer> companion_;
  std::vector<Rational> bernoulli_;
  std::vector<Integer> euler_even_;  // E_0, E_2, E_4, ...
};

/// Process-wide cache used by the check registry.
SequenceCache& shared_sequences();

}  // namespace supercong
