#pragma once

// Prime sweeps over the check registry and their serialized reports.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/checks.hpp"

namespace supercong {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct CheckTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;  // primes outside the applicability predicate
};

struct SweepReport {
  std::string version{kToolVersion};
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<CheckResult> results;           // sorted by (check, p)
  std::map<std::string, CheckTally> summary;  // one entry per requested check

  bool all_pass() const;
};

/// "all" or a comma-separated list of ids. Throws UnknownCheckError.
std::vector<std::string> resolve_check_ids(std::string_view selection);

/// Runs every requested check at every prime in [lo, hi]. Work is spread over
/// `jobs` threads; the report is identical for any value of `jobs`. Throws
/// UnknownCheckError, and std::invalid_argument when lo > hi.
SweepReport sweep(const std::vector<std::string>& check_ids, std::uint64_t lo, std::uint64_t hi, unsigned jobs = 1);

std::string to_json(const SweepReport& report);
std::string to_csv(const SweepReport& report);
std::string to_table(const SweepReport& report);

}  // namespace supercong
