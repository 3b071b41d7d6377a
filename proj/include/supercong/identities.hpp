#pragma once

// Exact verification of finite combinatorial identities.
//
// Every identity is evaluated by direct exact summation of each of its forms
// and compared as rationals; nothing is reduced modulo anything here. Where a
// form is a rational function of a free variable, agreement at more points
// than the degree bound certifies the identity for that n.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/exact.hpp"

namespace supercong {

struct IdentityParams {
  long n = 0;
  long j = 0;                     // second index (j, k or r) where the identity has one
  std::optional<Rational> point;  // free variable (x, z or k) where the identity has one

  std::string to_string() const;
};

struct IdentityCase {
  std::string identity_id;
  IdentityParams params;
  Rational lhs;
  Rational rhs;
  bool pass = false;  // every form equal, exactly
};

struct IdentityDefinition {
  std::string id;
  std::string anchor;
  std::string statement;
  long grid_bound = 0;  // largest n in the full grid
  bool uses_j = false;
  bool uses_point = false;
  /// Grid for n <= bound; seeded sample points for rational-variable forms.
  std::function<std::vector<IdentityParams>(long bound, std::uint64_t seed)> grid;
  /// Two or more forms that must agree.
  std::function<std::vector<Rational>(const IdentityParams&)> forms;
  /// Poles of the rational-variable forms (empty for polynomial identities).
  std::function<bool(long n, const Rational& point)> is_pole;
};

/// All registered identities, sorted by id.
const std::vector<IdentityDefinition>& identity_registry();

/// Throws UnknownIdentityError.
const IdentityDefinition& find_identity(std::string_view id);

/// Evaluates every form at params. Throws UnknownIdentityError,
/// ParamOutOfRangeError (negative indices, missing point, n above the cap) and
/// PoleSampleError.
IdentityCase verify_identity(std::string_view id, const IdentityParams& params);

/// Agreement at each given sample of the free variable, n fixed. Requires at
/// least n + 2 distinct samples. Throws PoleSampleError when a sample is a pole.
bool verify_rational_function_identity(std::string_view id, long n, std::span<const Rational> samples);

/// Same, with `sample_count` points drawn deterministically from `seed`
/// (poles are skipped and redrawn).
bool verify_rational_function_identity(std::string_view id, long n, std::size_t sample_count, std::uint64_t seed);

/// Deterministic pseudo-random rationals for identity `id` at index n.
std::vector<Rational> sample_points(std::string_view id, long n, std::size_t count, std::uint64_t seed,
                                    const std::function<bool(const Rational&)>& reject);

struct IdentitySummary {
  std::string identity_id;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::optional<IdentityCase> first_failure;
};

struct IdentityReport {
  long max_n = 0;
  std::uint64_t seed = 0;
  std::vector<IdentitySummary> entries;  // sorted by identity id

  bool all_pass() const;
  std::size_t total_cases() const;
};

/// Runs every registered identity over n <= min(max_n, its grid bound);
/// max_n <= 0 gives empty grids. Identities are spread over `jobs` threads;
/// the report does not depend on `jobs`.
IdentityReport sweep_identities(long max_n, std::uint64_t seed, unsigned jobs = 1);

constexpr std::uint64_t kDefaultIdentitySeed = 20240917;

/// VERIFIER_SEED when set to a valid integer, else kDefaultIdentitySeed.
std::uint64_t identity_seed_from_env();

}  // namespace supercong
