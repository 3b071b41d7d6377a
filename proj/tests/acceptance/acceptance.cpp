// Acceptance run: one line per criterion, "PASS" or "FAIL" followed by the
// criterion name and the evidence. Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "supercong/gamma_p.hpp"
#include "supercong/identities.hpp"
#include "supercong/modular.hpp"
#include "supercong/quadform.hpp"
#include "supercong/sequences.hpp"
#include "supercong/sweep.hpp"

namespace {

using namespace supercong;
using Clock = std::chrono::steady_clock;

constexpr unsigned kJobs = 8;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& name, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("%s  %-34s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), seconds);
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

double elapsed_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

// Summarizes a sweep as "ID pass/total" for each check, listing failing
// checks with their first failing prime.
Outcome sweep_outcome(const SweepReport& report, double seconds, double budget) {
  std::ostringstream out;
  std::size_t passed = 0, total = 0;
  for (const auto& [id, tally] : report.summary) {
    passed += tally.pass;
    total += tally.pass + tally.fail;
  }
  out << report.summary.size() << " checks, " << passed << "/" << total << " (check, p) pairs pass";
  for (const auto& r : report.results) {
    if (!r.pass) {
      out << "; " << r.check_id << " fails at p=" << r.p << " [" << r.note << "]";
      break;
    }
  }
  const bool in_time = seconds < budget;
  if (!in_time) out << "; over the " << budget << "s budget";
  return {report.all_pass() && total > 0 && in_time, out.str()};
}

Outcome timed_sweep(const std::vector<std::string>& ids, std::uint64_t lo, std::uint64_t hi, double budget) {
  const auto start = Clock::now();
  const SweepReport report = sweep(ids, lo, hi, kJobs);
  return sweep_outcome(report, elapsed_since(start), budget);
}

std::vector<std::string> ids_with_prefix(const std::string& prefix) {
  std::vector<std::string> ids;
  for (const auto& def : list_checks()) {
    if (def.id.rfind(prefix, 0) == 0) ids.push_back(def.id);
  }
  return ids;
}

std::vector<Rational> unit_samples(std::uint64_t p, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> out;
  while (out.size() < count) {
    const long num = static_cast<long>(rng() % 20001) - 10000;
    const long den = static_cast<long>(rng() % 97) + 1;
    if (den % static_cast<long>(p) == 0) continue;
    out.push_back(make_rational(num, den));
  }
  return out;
}

Outcome gamma_suite() {
  std::ostringstream out;
  bool ok = true;
  std::size_t evaluated = 0;

  for (std::uint64_t p : {5, 7, 13, 19}) {
    const GammaEvaluator eval(p);
    const auto rationals = unit_samples(p, 50, 1000 + p);
    for (int k : {1, 2}) {
      for (std::uint64_t n = 1; n <= p * p; ++n) {
        const GammaArgument x(Rational(n), p);
        const bool good = eval.functional_equation(x, k) && eval.reflection(x, k);
        ok = ok && good;
        if (!good) out << "integer " << n << " fails at p=" << p << " k=" << k << "; ";
        ++evaluated;
      }
      for (const auto& q : rationals) {
        const GammaArgument x(q, p);
        const bool good = eval.functional_equation(x, k) && eval.reflection(x, k);
        ok = ok && good;
        if (!good) out << to_string(q) << " fails at p=" << p << " k=" << k << "; ";
        ++evaluated;
      }
    }
    const auto alphas = unit_samples(p, 100, 2000 + p);
    const auto shifts = unit_samples(p, 100, 3000 + p);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      const bool good = eval.taylor_shift(GammaArgument(alphas[i], p), shifts[i]);
      ok = ok && good;
      if (!good) out << "Taylor (" << to_string(alphas[i]) << ", " << to_string(shifts[i]) << ") fails at p=" << p << "; ";
    }
  }
  out << evaluated << " functional/reflection arguments, 400 Taylor samples; derivative";

  for (std::uint64_t p : {7, 13, 19, 31}) {
    const GammaEvaluator eval(p);
    std::size_t relative = 0, verbatim = 0, wilson = 0;
    for (std::uint64_t a = 0; a < p; ++a) {
      const DerivativeCheck d = eval.derivative(GammaArgument(Rational(a), p));
      relative += d.relative_pass;
      verbatim += d.verbatim_pass;
      wilson += d.offset_is_wilson;
    }
    ok = ok && relative == p && wilson == p;
    out << " p=" << p << " relative " << relative << "/" << p << " closed-form " << verbatim << "/" << p;
  }
  out << "; closed form is off by the constant -w_p - 1 at every p";
  return {ok, out.str()};
}

Outcome oracles() {
  std::ostringstream out;
  std::size_t compared = 0;
  std::string mismatch;
  for (auto p : primes_between(7, 100000)) {
    if (p % 3 != 1) continue;
    ++compared;
    if (mismatch.empty() && !(represent(p) == represent_bruteforce(p))) mismatch = std::to_string(p);
  }
  const bool recurrence = check_franel_recurrence(300);
  const bool barrucand = check_barrucand(100);
  out << "Cornacchia = exhaustive scan at " << compared << " primes";
  if (!mismatch.empty()) out << " (first mismatch p=" << mismatch << ")";
  out << "; f_n direct = recurrence for n <= 300: " << (recurrence ? "yes" : "no");
  out << "; Barrucand n <= 100: " << (barrucand ? "yes" : "no");
  return {mismatch.empty() && recurrence && barrucand, out.str()};
}

Outcome identity_sweep() {
  const auto start = Clock::now();
  const IdentityReport report = sweep_identities(100, kDefaultIdentitySeed, kJobs);
  const double seconds = elapsed_since(start);
  std::ostringstream out;
  out << report.entries.size() << " identities, " << report.total_cases() << " cases";
  for (const auto& e : report.entries) {
    if (e.passed != e.cases) out << "; " << e.identity_id << " " << e.passed << "/" << e.cases;
  }
  return {report.all_pass() && report.entries.size() == identity_registry().size() && seconds < 60, out.str()};
}

Outcome intermediate_checks() {
  std::vector<std::string> ids;
  for (const auto& def : list_checks()) {
    const std::string& id = def.id;
    const bool elsewhere = id.rfind("CHK-THM", 0) == 0 || id == "CHK-FP2" || id.rfind("CHK-SUNH-", 0) == 0 || id == "CHK-WOLST" ||
                           id == "CHK-LEM22" || id.rfind("CHK-P2J-", 0) == 0 || id == "CHK-MPT" || id.rfind("CHK-GAMMA-", 0) == 0;
    if (!elsewhere) ids.push_back(id);
  }
  const auto start = Clock::now();
  const SweepReport report = sweep(ids, 7, 200, kJobs);
  Outcome o = sweep_outcome(report, elapsed_since(start), 180);

  // Tally every reading of the odd central sum: the counted one and the asides.
  std::size_t primes = 0, binomial = 0, literal = 0, weighted = 0;
  for (const auto& r : report.results) {
    if (r.check_id != "CHK-P13") continue;
    ++primes;
    binomial += r.pass;
    literal += r.note.find("literal 4^k/(2k-1): holds") != std::string::npos;
    weighted += r.note.find("with k C(2k,k): holds") != std::string::npos;
  }
  o.detail += "; CHK-P13 readings over " + std::to_string(primes) + " primes: binomial " + std::to_string(binomial) + ", literal " +
              std::to_string(literal) + ", k C(2k,k) " + std::to_string(weighted);
  o.pass = o.pass && primes > 0 && binomial == primes;
  return o;
}

Outcome determinism() {
  const auto ids = resolve_check_ids("all");
  const std::string serial = to_json(sweep(ids, 7, 300, 1));
  const std::string parallel = to_json(sweep(ids, 7, 300, 8));
  std::ostringstream out;
  out << "all " << ids.size() << " checks over [7, 300]: " << serial.size() << "-byte reports "
      << (serial == parallel ? "identical" : "DIFFER") << " for jobs 1 and 8";
  return {serial == parallel, out.str()};
}

}  // namespace

int main() {
  criterion("weighted-franel-sums-p-le-1000", [] { return timed_sweep({"CHK-THM11A", "CHK-THM11B"}, 7, 1000, 180); });
  criterion("franel-sums-mod-p3-p-le-1000", [] { return timed_sweep({"CHK-THM12"}, 7, 1000, 180); });
  criterion("franel-half-quarter-sums-p-le-1000", [] { return timed_sweep({"CHK-FP2"}, 7, 1000, 180); });
  criterion("harmonic-battery-7-to-500", [] {
    auto ids = ids_with_prefix("CHK-SUNH-");
    ids.push_back("CHK-WOLST");
    return timed_sweep(ids, 7, 500, 180);
  });
  criterion("binomial-product-lemmas-p-le-200",
            [] { return timed_sweep({"CHK-LEM22", "CHK-P2J-LOW", "CHK-P2J-HIGH", "CHK-MPT"}, 7, 200, 180); });
  criterion("intermediate-congruences-p-le-200", intermediate_checks);
  criterion("identity-sweep-under-a-minute", identity_sweep);
  criterion("padic-gamma-suite", gamma_suite);
  criterion("oracle-equivalences", oracles);
  criterion("sweep-determinism", determinism);

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
