// verifier: command-line front end for the check registry, the identity lab
// and the p-adic Gamma evaluator.
//
// Exit status: 0 when everything passed, 1 when a check or identity failed,
// 2 on usage or configuration errors.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "supercong/errors.hpp"
#include "supercong/gamma_p.hpp"
#include "supercong/identities.hpp"
#include "supercong/modular.hpp"
#include "supercong/sweep.hpp"

namespace {

using namespace supercong;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--primes expects LO..HI, got '" + text + "'");
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo_text = text.substr(0, dots), hi_text = text.substr(dots + 2);
    const auto lo = std::stoull(lo_text, &used_lo);
    const auto hi = std::stoull(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size()) throw std::invalid_argument("trailing characters");
    if (lo > hi) throw UsageError("--primes range is empty: " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--primes expects LO..HI with non-negative integers, got '" + text + "'");
  }
}

int list_checks_command() {
  for (const auto& def : list_checks()) {
    std::cout << std::left << std::setw(22) << def.id << " mod p^" << def.modulus_exponent << "  " << std::setw(24) << def.applicability
              << "  " << def.anchor << '\n';
  }
  return kPass;
}

int run_command(const std::string& checks, const std::string& primes, unsigned jobs, const std::string& format, const std::string& out_path) {
  const auto ids = resolve_check_ids(checks);
  const auto [lo, hi] = parse_range(primes);
  const SweepReport report = sweep(ids, lo, hi, jobs);

  std::string text;
  if (format == "json") {
    text = to_json(report);
  } else if (format == "csv") {
    text = to_csv(report);
  } else {
    text = to_table(report);
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file " + out_path);
    file << text;
  }
  return report.all_pass() ? kPass : kFail;
}

int identities_command(long max_n, unsigned jobs) {
  const std::uint64_t seed = identity_seed_from_env();
  const IdentityReport report = sweep_identities(max_n, seed, jobs);
  std::cout << "identity sweep  max-n " << max_n << "  seed " << seed << "\n\n";
  for (const auto& e : report.entries) {
    std::cout << "  " << std::left << std::setw(16) << e.identity_id << std::right << std::setw(7) << e.passed << "/" << std::left
              << std::setw(7) << e.cases << (e.passed == e.cases ? "pass" : "FAIL");
    if (e.first_failure) {
      std::cout << "  first failure " << e.first_failure->params.to_string() << ": " << to_string(e.first_failure->lhs)
                << " != " << to_string(e.first_failure->rhs);
    }
    std::cout << '\n';
  }
  std::cout << '\n' << report.total_cases() << " cases, " << (report.all_pass() ? "all identities hold" : "FAILURES present") << '\n';
  return report.all_pass() ? kPass : kFail;
}

int gamma_command(std::uint64_t p, int precision) {
  if (p <= 3 || !is_prime(p)) throw UsageError("--p must be a prime greater than 3");
  if (p * p > (1ULL << 26)) throw UsageError("--p is too large for the tabulated evaluator (p <= 8191)");
  const GammaEvaluator eval(p);
  const std::uint64_t modulus = precision == 1 ? p : p * p;
  std::cout << "Gamma_p for p = " << p << ", values mod " << modulus << "\n\n";
  for (std::uint64_t n = 0; n <= p; ++n) {
    std::cout << "  Gamma_p(" << n << ") = " << eval.gamma_int(n, precision).residue << '\n';
  }
  for (auto [num, den] : {std::pair{1L, 2L}, {1L, 3L}, {2L, 3L}, {1L, 6L}, {5L, 6L}}) {
    const GammaArgument arg(make_rational(num, den), p);
    std::cout << "  Gamma_p(" << num << '/' << den << ") = " << eval.gamma(arg, precision).residue << '\n';
  }

  std::size_t functional = 0, reflection = 0, derivative = 0;
  for (std::uint64_t n = 1; n <= modulus; ++n) {
    const GammaArgument arg(Rational(n), p);
    functional += eval.functional_equation(arg, precision) ? 1 : 0;
    reflection += eval.reflection(arg, precision) ? 1 : 0;
  }
  for (std::uint64_t a = 0; a < p; ++a) derivative += eval.derivative(GammaArgument(Rational(a), p)).relative_pass ? 1 : 0;
  std::cout << "\n  functional equation  " << functional << "/" << modulus << "\n  reflection           " << reflection << "/" << modulus
            << "\n  derivative (relative) " << derivative << "/" << p << '\n';
  const bool ok = functional == modulus && reflection == modulus && derivative == p;
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Congruence verifier for Franel-number supercongruences"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list-checks", "List registered checks");

  std::string checks, primes, format = "table", out_path;
  unsigned jobs = 1;
  auto* run = app.add_subcommand("run", "Sweep checks over a prime range");
  run->add_option("--checks", checks, "Comma-separated check ids, or 'all'")->required();
  run->add_option("--primes", primes, "Prime range LO..HI")->required();
  run->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  run->add_option("--format", format, "Report format")->check(CLI::IsMember({"table", "json", "csv"}));
  run->add_option("--out", out_path, "Write the report to FILE");

  long max_n = 100;
  unsigned identity_jobs = 1;
  auto* identities = app.add_subcommand("identities", "Verify the identity registry exactly");
  identities->add_option("--max-n", max_n, "Largest n in every grid")->check(CLI::Range(0L, 2000L));
  identities->add_option("--jobs", identity_jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  std::uint64_t gamma_p_value = 0;
  int precision = 2;
  auto* gamma = app.add_subcommand("gamma", "Tabulate Gamma_p and check its identities");
  gamma->add_option("--p", gamma_p_value, "Prime p > 3")->required();
  gamma->add_option("--precision", precision, "Exponent k of the modulus p^k")->check(CLI::IsMember({1, 2}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*list) return list_checks_command();
    if (*run) return run_command(checks, primes, jobs, format, out_path);
    if (*identities) return identities_command(max_n, identity_jobs);
    if (*gamma) return gamma_command(gamma_p_value, precision);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnknownCheckError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
