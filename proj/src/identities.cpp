#include "supercong/identities.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <set>
#include <thread>

#include "supercong/errors.hpp"
#include "supercong/sequences.hpp"

namespace supercong {

namespace {

constexpr long kHardCap = 2000;

Rational C(long n, long k) { return Rational(binomial(n, k)); }

Rational sign(long e) { return Rational(e % 2 == 0 ? 1 : -1); }

Rational pow4(long k) { return Rational(pow(Integer(4), static_cast<unsigned long>(k))); }

Rational inv(long d) { return make_rational(1, d); }

// sum_{k=lo}^{hi} term(k)
template <typename F>
Rational sum(long lo, long hi, F term) {
  Rational s = 0;
  for (long k = lo; k <= hi; ++k) s += term(k);
  return s;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Grid helpers.

std::vector<IdentityParams> n_only(long bound) {
  std::vector<IdentityParams> out;
  for (long n = 0; n <= bound; ++n) out.push_back({n, 0, std::nullopt});
  return out;
}

std::vector<IdentityParams> with_points(std::string_view id, long bound, std::uint64_t seed,
                                        const std::vector<Rational>& fixed, long int_points,
                                        const std::function<bool(long, const Rational&)>& pole) {
  std::vector<IdentityParams> out;
  for (long n = 0; n <= bound; ++n) {
    std::set<Rational> used;
    auto add = [&](const Rational& x) {
      if (pole(n, x) || !used.insert(x).second) return;
      out.push_back({n, 0, x});
    };
    for (const auto& x : fixed) add(x);
    for (long k = 0; k <= int_points; ++k) add(Rational(k));
    const auto reject = [&](const Rational& x) { return pole(n, x) || used.count(x) > 0; };
    for (const auto& x : sample_points(id, n, static_cast<std::size_t>(n + 2), seed, reject)) add(x);
  }
  return out;
}

// sum_{k<n} weight(k) f_k / base^k, the left side shared by the reindexed Franel sums.
Rational franel_weighted(long n, long base, const std::function<Rational(long)>& weight) {
  Rational s = 0;
  Rational b = 1;
  for (long k = 0; k < n; ++k) {
    s += weight(k) * Rational(franel(k)) / b;
    b *= base;
  }
  return s;
}

Rational central3(long j) { return Rational(binomial(2 * j, j) * binomial(3 * j, j)); }

// The (3j-2)/(3j) style products in the closed forms of the harmonic identity.
Rational zhu_form_products(long n) {
  Rational lead = make_rational(1, 3 * n + 1);
  for (long k = 1; k <= n; ++k) lead *= make_rational(3 * k, 3 * k - 2);
  Rational a = 0, b = 0, pa = 1, pb = 1;
  for (long k = 1; k <= n; ++k) {
    pa *= make_rational(3 * k - 2, 3 * k);
    pb *= make_rational(2 * (3 * k - 2), 3 * (2 * k - 1));
    a += pa / k;
    b += pb / k;
  }
  return lead * (a - b);
}

Rational zhu_form_pochhammer(long n) {
  const Rational third = make_rational(1, 3);
  const Rational half = make_rational(1, 2);
  const Rational lead = rising_factorial(Rational(1), n) / (Rational(3 * n + 1) * rising_factorial(third, n));
  const Rational a = sum(1, n, [&](long k) -> Rational { return rising_factorial(third, k) / (Rational(k) * rising_factorial(Rational(1), k)); });
  const Rational b = sum(1, n, [&](long k) -> Rational { return rising_factorial(third, k) / (Rational(k) * rising_factorial(half, k)); });
  return lead * (a - b);
}

std::vector<IdentityDefinition> build_registry() {
  const auto no_pole = [](long, const Rational&) { return false; };
  std::vector<IdentityDefinition> r;

  r.push_back({
      "ID-21", "franel-z-expansion",
      "sum_k C(n,k)^3 z^k = sum_{k<=n/2} C(n+k,3k) C(2k,k) C(3k,k) z^k (1+z)^{n-2k}", 40, false, true,
      [no_pole](long bound, std::uint64_t seed) {
        const std::vector<Rational> fixed{Rational(1), Rational(-4), Rational(2), make_rational(-1, 2), Rational(3)};
        return with_points("ID-21", bound, seed, fixed, -1, no_pole);
      },
      [](const IdentityParams& q) {
        const long n = q.n;
        const Rational& z = *q.point;
        const Rational lhs = sum(0, n, [&](long k) -> Rational {
          const Integer c = binomial(n, k);
          return Rational(c * c * c) * pow(z, k);
        });
        const Rational rhs = sum(0, n / 2, [&](long k) -> Rational {
          return C(n + k, 3 * k) * central3(k) * pow(z, k) * pow(Rational(1 + z), n - 2 * k);
        });
        return std::vector<Rational>{lhs, rhs};
      },
      no_pole,
  });

  r.push_back({
      "ID-22", "franel-minus-four",
      "f_n = sum_k C(n+2k,3k) C(2k,k) C(3k,k) (-4)^{n-k}", 60, false, false,
      [](long bound, std::uint64_t) { return n_only(bound); },
      [](const IdentityParams& q) {
        const long n = q.n;
        const Rational rhs = sum(0, n, [&](long k) -> Rational { return C(n + 2 * k, 3 * k) * central3(k) * pow(Rational(-4), n - k); });
        return std::vector<Rational>{Rational(franel(n)), rhs};
      },
      no_pole,
  });

  r.push_back({
      "ID-2K1K-SPLIT", "split-2k-1",
      "sum_{k<=n} 4^k/((2k-1)k C(2k,k)) = 2 sum 4^k/((2k-1)C(2k,k)) - sum 4^k/(k C(2k,k))", 40, false, false,
      [](long bound, std::uint64_t) { return n_only(bound); },
      [](const IdentityParams& q) {
        const long n = q.n;
        const Rational lhs = sum(1, n, [](long k) -> Rational { return pow4(k) / (Rational((2 * k - 1) * k) * C(2 * k, k)); });
        const Rational rhs = 2 * sum(1, n, [](long k) -> Rational { return pow4(k) / (Rational(2 * k - 1) * C(2 * k, k)); }) -
                             sum(1, n, [](long k) -> Rational { return pow4(k) / (Rational(k) * C(2 * k, k)); });
        return std::vector<Rational>{lhs, rhs};
      },
      no_pole,
  });

  r.push_back({
      "ID-3J1-SPLIT", "split-3j-1",
      "sum_{j<=n} 4^j/((3j-1)j C(2j,j)) = 3 sum 4^j/((3j-1)C(2j,j)) - sum 4^j/(j C(2j,j))", 40, false, false,
      [](long bound, std::uint64_t) { return n_only(bound); },
      [](const IdentityParams& q) {
        const long n = q.n;
        const Rational lhs = sum(1, n, [](long j) -> Rational { return pow4(j) / (Rational((3 * j - 1) * j) * C(2 * j, j)); });
        const Rational rhs = 3 * sum(1, n, [](long j) -> Rational { return pow4(j) / (Rational(3 * j - 1) * C(2 * j, j)); }) -
                             sum(1, n, [](long j) -> Rational { return pow4(j) / (Rational(j) * C(2 * j, j)); });
        return std::vector<Rational>{lhs, rhs};
      },
      no_pole,
  });

  r.push_back({
      "ID-3K2FK", "franel-3k2-alternating",
      "sum_{k<n} (3k+2) f_k/(-4)^k = sum_j C(2j,j)C(3j,j)/(-4)^j (9nj+3n+1)/(3j+2) C(n+2j,3j+1)", 40, false, false,
      [](long bound, std::uint64_t) { return n_only(bound); },
      [](const IdentityParams& q) {
        const long n = q.n;
        const Rational lhs = franel_weighted(n, -4, [](long k) -> Rational { return Rational(3 * k + 2); });
        const Rational rhs = sum(0, n, [&](long j) -> Rational {
          return central3(j) / pow(Rational(-4), j) * make_rational(9 * n * j + 3 * n + 1, 3 * j + 2) * C(n + 2 * j, 3 * j + 1);
        });
        return std::vector<Rational>{lhs, rhs};
      },
      no_pole,
  });

  r.push_back({
      "ID-3K4F", "franel-3k4",
      "sum_{k<n} (3k+4) f_k/2^k = sum_j C(2j,j)C(3j,j)/4^j (9nj+3n+9j+5)/(3j+2) C(n+j,3j+1)", 40, false, false,
      [](long bound, std::uint64_t) { return n_only(bound); },
      [](const IdentityParams& q) {
        const long n = q.n;
        const Rational lhs = franel_weighted(n, 2, [](long k) -> Rational { return Rational(3 * k + 4); });
        const Rational rhs = sum(0, n, [&](long j) -> Rational {
          return central3(j) / pow4(j) * make_rational(9 * n * j + 3 * n + 9 * j + 5, 3 * j + 2) * C(n + j, 3 * j + 1);
        });
        return std::vector<Rational>{lhs, rhs};
      },
      no_pole,
  });

  r.push_back({
      "ID-4F", "franel-half",
      "sum_{k<n} f_k/2^k = sum_j C(2j,j)C(3j,j)/4^j C(n+j,3j+1)", 40, false, false,
      [](long bound, std::uint64_t) { return n_only(bound); },
      [](const IdentityParams& q) {
        const long n = q.n;
        const Rational lhs = franel_weighted(n, 2, [](long) -> Rational { return Rational(1); });
        const Rational rhs = sum(0, n, [&](long j) -> Rational { return central3(j) / pow4(j) * C(n + j, 3 * j + 1); });
        return std::vector<Rational>{lhs, rhs};
      },
      no_pole,
  });

  r.push_back({
      "ID-4FNEG", "franel-quarter-alternating",
      "sum_{k<n} f_k/(-4)^k = sum_j C(2j,j)C(3j,j)/(-4)^j C(n+2j,3j+1)", 40, false, false,
      [](long bound, std::uint64_t) { return n_only(bound); },
      [](const IdentityParams& q) {
        const long n = q.n;
        const Rational lhs = franel_weighted(n, -4, [](long) -> Rational { return Rational(1); });
        const Rational rhs = sum(0, n, [&](long j) -> Rational { return central3(j) / pow(Rational(-4), j) * C(n + 2 * j, 3 * j + 1); });
        return std::vector<Rational>{lhs, rhs};
      },
      no_pole,
  });

  r.push_back({
      "ID-BARRUCAND", "barrucand",
      "sum_k C(n,k) f_k = g_n", 100, false, false,
      [](long bound, std::uint64_t) { return n_only(bound); },
      [](const IdentityParams& q) {
        const long n = q.n;
        Integer lhs = 0;
        for (long k = 0; k <= n; ++k) lhs += binomial(n, k) * franel(k);
        return std::vector<Rational>{Rational(lhs), Rational(companion_g(n))};
      },
      no_pole,
  });

  const auto cyid_pole = [](long n, const Rational& k) {
    return k.get_den() == 1 && k <= -1 && k >= -(n + 1);
  };
  r.push_back({
      "ID-CYID", "inverse-binomial-partial-fractions",
      "1/C(n+1+k,k) = (n+1) sum_r C(n,r) (-1)^r / (k+r+1)", 25, false, true,
      [cyid_pole](long bound, std::uint64_t seed) { return with_points("ID-CYID", bound, seed, {}, 25, cyid_pole); },
      [](const IdentityParams& q) {
        const long n = q.n;
        const Rational& k = *q.point;
        // 1/C(n+1+k, k) = (n+1)! / ((k+1)(k+2)...(k+n+1)) as a rational function of k
        const Rational lhs = Rational(factorial(n + 1)) / rising_factorial(Rational(k + 1), n + 1);
        const Rational rhs = Rational(n + 1) * sum(0, n, [&](long j) -> Rational { return C(n, j) * sign(j) / Rational(k + j + 1); });
        return std::vector<Rational>{lhs, rhs};
      },
      cyid_pole,
  });

  r.push_back({
      "ID-HENG", "central-binomial-reciprocal-sum",
      "sum_{k<=n} 4^k/(k C(2k,k)) = -2 + 2*4^n/C(2n,n)", 60, false, false,
      [](long bound, std::uint64_t) { return n_only(bound); },
      [](const IdentityParams& q) {
        const long n = q.n;
        const Rational lhs = sum(1, n, [](long k) -> Rational { return pow4(k) / (Rational(k) * C(2 * k, k)); });
        return std::vector<Rational>{lhs, Rational(-2 + 2 * pow4(n) / C(2 * n, n))};
      },
      no_pole,
  });

  r.push_back({
      "ID-HSHIFT-6", "harmonic-shift",
      "H_m - sum_{k<=m} 1/(k+r) = sum_{k<=r} m/(k(k+m))", 40, true, false,
      [](long bound, std::uint64_t) {
        std::vector<IdentityParams> out;
        for (long m = 0; m <= bound; ++m) {
          for (long rr = 0; rr <= bound; ++rr) out.push_back({m, rr, std::nullopt});
        }
        return out;
      },
      [](const IdentityParams& q) {
        const long m = q.n, rr = q.j;
        const Rational lhs = harmonic(m) - sum(1, m, [&](long k) -> Rational { return inv(k + rr); });
        const Rational rhs = sum(1, rr, [&](long k) -> Rational { return make_rational(m, k * (k + m)); });
        return std::vector<Rational>{lhs, rhs};
      },
      no_pole,
  });

  r.push_back({
      "ID-IMPORTANT", "shifted-central-sum",
      "sum_{k<=n} 4^k/((k+n)C(2k,k)) = -2 + 2*4^n/C(2n,n) - n C(2n,n)/4^n sum_{k<=n} 4^k/(k^2 C(2k,k))", 40, false, false,
      [](long bound, std::uint64_t) { return n_only(bound); },
      [](const IdentityParams& q) {
        const long n = q.n;
        const Rational lhs = sum(1, n, [&](long k) -> Rational { return pow4(k) / (Rational(k + n) * C(2 * k, k)); });
        const Rational tail = sum(1, n, [](long k) -> Rational { return pow4(k) / (Rational(k * k) * C(2 * k, k)); });
        const Rational rhs = -2 + 2 * pow4(n) / C(2 * n, n) - Rational(n) * C(2 * n, n) / pow4(n) * tail;
        return std::vector<Rational>{lhs, rhs};
      },
      no_pole,
  });

  r.push_back({
      "ID-INVBINOM", "alternating-inverse-binomial",
      "sum_{k<=n} (-1)^k/((k+1)C(n,k)) = (2(-1)^n-1)/(n+1) - (n+1)H_n^(2) - 2(n+1) sum_{k<=n} (-1)^k/k^2", 40, false, false,
      [](long bound, std::uint64_t) { return n_only(bound); },
      [](const IdentityParams& q) {
        const long n = q.n;
        const Rational lhs = sum(0, n, [&](long k) -> Rational { return sign(k) / (Rational(k + 1) * C(n, k)); });
        const Rational rhs = (2 * sign(n) - 1) / Rational(n + 1) - Rational(n + 1) * harmonic(n, 2) -
                             2 * Rational(n + 1) * sum(1, n, [](long k) -> Rational { return sign(k) / Rational(k * k); });
        return std::vector<Rational>{lhs, rhs};
      },
      no_pole,
  });

  const auto kx_pole = [](long n, const Rational& x) { return x.get_den() == 1 && x <= 0 && x >= -n; };
  r.push_back({
      "ID-KX", "partial-fractions",
      "sum_k C(n,k) (-1)^k/(k+x) = n!/(x(x+1)...(x+n))", 30, false, true,
      [kx_pole](long bound, std::uint64_t seed) {
        const std::vector<Rational> fixed{make_rational(1, 3), make_rational(2, 3), make_rational(1, 2), Rational(5)};
        return with_points("ID-KX", bound, seed, fixed, -1, kx_pole);
      },
      [](const IdentityParams& q) {
        const long n = q.n;
        const Rational& x = *q.point;
        const Rational lhs = sum(0, n, [&](long k) -> Rational { return C(n, k) * sign(k) / Rational(x + k); });
        const Rational rhs = Rational(factorial(n)) / rising_factorial(x, n + 1);
        return std::vector<Rational>{lhs, rhs};
      },
      kx_pole,
  });

  r.push_back({
      "ID-R2K", "alternating-harmonic-2k",
      "sum_{r<=n} (-1)^r/r C(n,r) sum_{k<=r} 1/(k(2k-1)) = H_n^(2) - sum_{k<=n} 4^k/(k^2 C(2k,k))", 30, false, false,
      [](long bound, std::uint64_t) { return n_only(bound); },
      [](const IdentityParams& q) {
        const long n = q.n;
        Rational inner = 0;
        Rational lhs = 0;
        for (long rr = 1; rr <= n; ++rr) {
          inner += inv(rr * (2 * rr - 1));
          lhs += sign(rr) / Rational(rr) * C(n, rr) * inner;
        }
        const Rational rhs = harmonic(n, 2) - sum(1, n, [](long k) -> Rational { return pow4(k) / (Rational(k * k) * C(2 * k, k)); });
        return std::vector<Rational>{lhs, rhs};
      },
      no_pole,
  });

  r.push_back({
      "ID-R6K", "alternating-harmonic-6k",
      "sum_{r<=n} (-1)^r/r C(n,r) sum_{k<=r} 1/(k(6k-1)) = H_n^(2) - sum_{k<=n} (1)_k/(k^2 (5/6)_k)", 30, false, false,
      [](long bound, std::uint64_t) { return n_only(bound); },
      [](const IdentityParams& q) {
        const long n = q.n;
        Rational inner = 0;
        Rational lhs = 0;
        for (long rr = 1; rr <= n; ++rr) {
          inner += inv(rr * (6 * rr - 1));
          lhs += sign(rr) / Rational(rr) * C(n, rr) * inner;
        }
        const Rational five_sixths = make_rational(5, 6);
        const Rational rhs = harmonic(n, 2) - sum(1, n, [&](long k) -> Rational {
                               return rising_factorial(Rational(1), k) / (Rational(k * k) * rising_factorial(five_sixths, k));
                             });
        return std::vector<Rational>{lhs, rhs};
      },
      no_pole,
  });

  r.push_back({
      "ID-SIGMA-A", "sum-3k4",
      "sum_{k=2j}^{n-1} (3k+4) C(k+j,3j) = (9nj+3n+9j+5)/(3j+2) C(n+j,3j+1)", 40, true, false,
      [](long bound, std::uint64_t) {
        std::vector<IdentityParams> out;
        for (long n = 0; n <= bound; ++n) {
          for (long j = 0; 2 * j <= n; ++j) out.push_back({n, j, std::nullopt});
        }
        return out;
      },
      [](const IdentityParams& q) {
        const long n = q.n, j = q.j;
        const Rational lhs = sum(2 * j, n - 1, [&](long k) -> Rational { return Rational(3 * k + 4) * C(k + j, 3 * j); });
        const Rational rhs = make_rational(9 * n * j + 3 * n + 9 * j + 5, 3 * j + 2) * C(n + j, 3 * j + 1);
        return std::vector<Rational>{lhs, rhs};
      },
      no_pole,
  });

  r.push_back({
      "ID-SIGMA-B", "sum-3k2",
      "sum_{k=j}^{n-1} (3k+2) C(k+2j,3j) = (9nj+3n+1)/(3j+2) C(n+2j,3j+1)", 40, true, false,
      [](long bound, std::uint64_t) {
        std::vector<IdentityParams> out;
        for (long n = 0; n <= bound; ++n) {
          for (long j = 0; j <= n; ++j) out.push_back({n, j, std::nullopt});
        }
        return out;
      },
      [](const IdentityParams& q) {
        const long n = q.n, j = q.j;
        const Rational lhs = sum(j, n - 1, [&](long k) -> Rational { return Rational(3 * k + 2) * C(k + 2 * j, 3 * j); });
        const Rational rhs = make_rational(9 * n * j + 3 * n + 1, 3 * j + 2) * C(n + 2 * j, 3 * j + 1);
        return std::vector<Rational>{lhs, rhs};
      },
      no_pole,
  });

  r.push_back({
      "ID-SIGMA-C", "hockey-stick",
      "sum_{k=2j}^{n-1} C(k+j,3j) = C(n+j,3j+1)", 60, true, false,
      [](long bound, std::uint64_t) {
        std::vector<IdentityParams> out;
        for (long n = 1; n <= bound; ++n) {
          for (long j = 0; 2 * j < n; ++j) out.push_back({n, j, std::nullopt});
        }
        return out;
      },
      [](const IdentityParams& q) {
        const long n = q.n, j = q.j;
        return std::vector<Rational>{sum(2 * j, n - 1, [&](long k) -> Rational { return C(k + j, 3 * j); }), C(n + j, 3 * j + 1)};
      },
      no_pole,
  });

  r.push_back({
      "ID-ZHUID", "harmonic-difference-sum",
      "sum_j 2C(n,j)(-1)^j (H_2j - H_j)/(3j+1), its product form and its Pochhammer form agree", 30, false, false,
      [](long bound, std::uint64_t) { return n_only(bound); },
      [](const IdentityParams& q) {
        const long n = q.n;
        const auto h = harmonic_table(2 * n, 1);
        const Rational direct = sum(0, n, [&](long j) -> Rational {
          return 2 * C(n, j) * sign(j) * (h[2 * j] - h[j]) / Rational(3 * j + 1);
        });
        return std::vector<Rational>{direct, zhu_form_products(n), zhu_form_pochhammer(n)};
      },
      no_pole,
  });

  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return r;
}

IdentityCase evaluate(const IdentityDefinition& def, const IdentityParams& params) {
  const auto forms = def.forms(params);
  IdentityCase out{def.id, params, forms.at(0), forms.at(1), true};
  for (const auto& f : forms) out.pass = out.pass && f == forms[0];
  return out;
}

}  // namespace

std::string IdentityParams::to_string() const {
  std::string s = "n=" + std::to_string(n);
  if (j != 0) s += ",j=" + std::to_string(j);
  if (point) s += ",x=" + supercong::to_string(*point);
  return s;
}

const std::vector<IdentityDefinition>& identity_registry() {
  static const std::vector<IdentityDefinition> registry = build_registry();
  return registry;
}

const IdentityDefinition& find_identity(std::string_view id) {
  for (const auto& def : identity_registry()) {
    if (def.id == id) return def;
  }
  throw UnknownIdentityError("unknown identity: " + std::string(id));
}

IdentityCase verify_identity(std::string_view id, const IdentityParams& params) {
  const IdentityDefinition& def = find_identity(id);
  if (params.n < 0 || params.j < 0) throw ParamOutOfRangeError(def.id + ": negative index");
  if (params.n > kHardCap || params.j > kHardCap) throw ParamOutOfRangeError(def.id + ": index above " + std::to_string(kHardCap));
  if (def.uses_point && !params.point) throw ParamOutOfRangeError(def.id + ": missing sample point");
  if (def.uses_point && def.is_pole(params.n, *params.point)) {
    throw PoleSampleError(def.id + ": sample " + to_string(*params.point) + " is a pole at n=" + std::to_string(params.n));
  }
  return evaluate(def, params);
}

bool verify_rational_function_identity(std::string_view id, long n, std::span<const Rational> samples) {
  const IdentityDefinition& def = find_identity(id);
  if (!def.uses_point) throw ParamOutOfRangeError(def.id + " has no free variable");
  bool ok = true;
  for (const auto& x : samples) ok = verify_identity(id, {n, 0, x}).pass && ok;
  return ok;
}

bool verify_rational_function_identity(std::string_view id, long n, std::size_t sample_count, std::uint64_t seed) {
  const IdentityDefinition& def = find_identity(id);
  if (!def.uses_point) throw ParamOutOfRangeError(def.id + " has no free variable");
  if (n < 0) throw ParamOutOfRangeError(def.id + ": negative index");
  if (sample_count < static_cast<std::size_t>(n) + 2) {
    throw ParamOutOfRangeError(def.id + ": need at least n+2 samples to certify");
  }
  const auto points = sample_points(id, n, sample_count, seed, [&](const Rational& x) { return def.is_pole(n, x); });
  return verify_rational_function_identity(id, n, std::span<const Rational>(points));
}

std::vector<Rational> sample_points(std::string_view id, long n, std::size_t count, std::uint64_t seed,
                                    const std::function<bool(const Rational&)>& reject) {
  const std::uint64_t h = fnv1a(id);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(h),
                    static_cast<std::uint32_t>(h >> 32), static_cast<std::uint32_t>(n)};
  std::mt19937_64 rng(seq);
  std::set<Rational> seen;
  std::vector<Rational> out;
  while (out.size() < count) {
    const long num = static_cast<long>(rng() % 241) - 120;
    const long den = static_cast<long>(rng() % 17) + 1;
    const Rational x = make_rational(num, den);
    if (reject(x) || !seen.insert(x).second) continue;
    out.push_back(x);
  }
  return out;
}

bool IdentityReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed == e.cases; });
}

std::size_t IdentityReport::total_cases() const {
  std::size_t total = 0;
  for (const auto& e : entries) total += e.cases;
  return total;
}

IdentityReport sweep_identities(long max_n, std::uint64_t seed, unsigned jobs) {
  IdentityReport report{max_n, seed, {}};
  const auto& registry = identity_registry();

  struct Task {
    std::size_t def;
    IdentityParams params;
  };
  std::vector<Task> tasks;
  for (std::size_t d = 0; d < registry.size(); ++d) {
    if (max_n > 0) {
      for (auto& params : registry[d].grid(std::min(max_n, registry[d].grid_bound), seed)) tasks.push_back({d, std::move(params)});
    }
  }

  std::vector<IdentityCase> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = evaluate(registry[tasks[i].def], tasks[i].params);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& def : registry) report.entries.push_back({def.id, 0, 0, std::nullopt});
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    IdentitySummary& entry = report.entries[tasks[i].def];
    ++entry.cases;
    if (results[i].pass) {
      ++entry.passed;
    } else if (!entry.first_failure) {
      entry.first_failure = results[i];
    }
  }
  return report;
}

std::uint64_t identity_seed_from_env() {
  const char* raw = std::getenv("VERIFIER_SEED");
  if (raw == nullptr || *raw == '\0') return kDefaultIdentitySeed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  return (end != nullptr && *end == '\0') ? static_cast<std::uint64_t>(v) : kDefaultIdentitySeed;
}

}  // namespace supercong
