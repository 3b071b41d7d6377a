#include "supercong/sequences.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "supercong/modular.hpp"

namespace supercong {
namespace {

void require_index(long n) {
  if (n < 0) throw std::invalid_argument("sequence index must be >= 0, got " + std::to_string(n));
}

}  // namespace

Integer franel(long n) {
  require_index(n);
  Integer sum = 0;
  for (long k = 0; k <= n; ++k) {
    const Integer c = binomial(n, k);
    sum += c * c * c;
  }
  return sum;
}

Integer companion_g(long n) {
  require_index(n);
  Integer sum = 0;
  for (long k = 0; k <= n; ++k) {
    const Integer c = binomial(n, k);
    sum += c * c * binomial(2 * k, k);
  }
  return sum;
}

std::vector<Integer> franel_by_recurrence(long n) {
  require_index(n);
  std::vector<Integer> f{Integer(1), Integer(2)};
  for (long i = 1; static_cast<long>(f.size()) <= n; ++i) {
    const Integer ii(i);
    Integer next = (7 * ii * ii + 7 * ii + 2) * f[i] + 8 * ii * ii * f[i - 1];
    const Integer d = (ii + 1) * (ii + 1);
    if (!mpz_divisible_p(next.get_mpz_t(), d.get_mpz_t())) {
      throw std::logic_error("Franel recurrence produced a non-integer at n = " + std::to_string(i + 1));
    }
    mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), d.get_mpz_t());
    f.push_back(std::move(next));
  }
  f.resize(static_cast<std::size_t>(n) + 1);
  return f;
}

bool check_franel_recurrence(long N) {
  if (N < 2) throw std::invalid_argument("check_franel_recurrence needs N >= 2");
  std::vector<Integer> f;
  f.reserve(static_cast<std::size_t>(N) + 1);
  for (long n = 0; n <= N; ++n) f.push_back(franel(n));
  for (long n = 1; n < N; ++n) {
    const Integer nn(n);
    if ((nn + 1) * (nn + 1) * f[n + 1] != (7 * nn * nn + 7 * nn + 2) * f[n] + 8 * nn * nn * f[n - 1]) return false;
  }
  return true;
}

bool check_barrucand(long N) {
  require_index(N);
  std::vector<Integer> f;
  for (long n = 0; n <= N; ++n) f.push_back(franel(n));
  for (long n = 0; n <= N; ++n) {
    Integer lhs = 0;
    for (long k = 0; k <= n; ++k) lhs += binomial(n, k) * f[k];
    if (lhs != companion_g(n)) return false;
  }
  return true;
}

Rational bernoulli_number(long n) { return shared_sequences().bernoulli(n); }

Rational bernoulli_poly_at(long n, const Rational& x) {
  require_index(n);
  // Horner in x over coefficients C(n,k) B_k of x^{n-k}.
  Rational acc = 0;
  for (long k = 0; k <= n; ++k) acc = acc * x + Rational(binomial(n, k)) * bernoulli_number(k);
  return acc;
}

Integer euler_number(long n) { return shared_sequences().euler(n); }

int legendre_p_over_3(std::uint64_t p) {
  if (p <= 3 || !is_prime(p)) throw std::invalid_argument("legendre_p_over_3 needs a prime > 3");
  return p % 3 == 1 ? 1 : -1;
}

void SequenceCache::grow_franel(long n) {
  if (static_cast<long>(franel_.size()) > n) return;
  franel_ = franel_by_recurrence(std::max(n, 2 * static_cast<long>(franel_.size())));
}

void SequenceCache::grow_companion(long n) {
  for (auto i = static_cast<long>(companion_.size()); i <= n; ++i) companion_.push_back(companion_g(i));
}

void SequenceCache::grow_bernoulli(long n) {
  if (bernoulli_.empty()) bernoulli_.emplace_back(1);
  for (auto m = static_cast<long>(bernoulli_.size()); m <= n; ++m) {
    if (m >= 3 && m % 2 == 1) {
      bernoulli_.emplace_back(0);
      continue;
    }
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    Rational s = 0;
    for (long k = 0; k < m; ++k) {
      if (bernoulli_[k] != 0) s += Rational(binomial(m + 1, k)) * bernoulli_[k];
    }
    bernoulli_.push_back(-s / (m + 1));
  }
}

void SequenceCache::grow_euler(long n) {
  if (euler_even_.empty()) euler_even_.emplace_back(1);
  for (auto h = static_cast<long>(euler_even_.size()); 2 * h <= n; ++h) {
    // sum_{j=0}^{h} C(2h,2j) E_{2j} = 0
    Integer s = 0;
    for (long j = 0; j < h; ++j) s += binomial(2 * h, 2 * j) * euler_even_[j];
    euler_even_.push_back(-s);
  }
}

Integer SequenceCache::franel(long n) {
  require_index(n);
  std::lock_guard lock(mutex_);
  grow_franel(n);
  return franel_[n];
}

std::vector<Integer> SequenceCache::franel_prefix(long n) {
  require_index(n);
  std::lock_guard lock(mutex_);
  if (n == 0) return {};
  grow_franel(n - 1);
  return {franel_.begin(), franel_.begin() + n};
}

Integer SequenceCache::companion(long n) {
  require_index(n);
  std::lock_guard lock(mutex_);
  grow_companion(n);
  return companion_[n];
}

Rational SequenceCache::bernoulli(long n) {
  require_index(n);
  std::lock_guard lock(mutex_);
  grow_bernoulli(n);
  return bernoulli_[n];
}

Integer SequenceCache::euler(long n) {
  require_index(n);
  if (n % 2 == 1) return 0;
  std::lock_guard lock(mutex_);
  grow_euler(n);
  return euler_even_[n / 2];
}

SequenceCache& shared_sequences() {
  static SequenceCache cache;
  return cache;
}

}  // namespace supercong
