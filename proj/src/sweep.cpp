#include "supercong/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "supercong/errors.hpp"
#include "supercong/modular.hpp"

namespace supercong {

bool SweepReport::all_pass() const {
  return std::all_of(summary.begin(), summary.end(), [](const auto& kv) { return kv.second.fail == 0; });
}

std::vector<std::string> resolve_check_ids(std::string_view selection) {
  std::vector<std::string> ids;
  if (selection == "all") {
    for (const auto& def : list_checks()) ids.push_back(def.id);
    return ids;
  }
  std::set<std::string> seen;
  std::size_t start = 0;
  while (start <= selection.size()) {
    const std::size_t comma = selection.find(',', start);
    const std::string_view token = selection.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!token.empty()) {
      const std::string id = find_check(token).id;
      if (seen.insert(id).second) ids.push_back(id);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ids;
}

SweepReport sweep(const std::vector<std::string>& check_ids, std::uint64_t lo, std::uint64_t hi, unsigned jobs) {
  if (lo > hi) throw std::invalid_argument("empty prime range: lo > hi");
  SweepReport report;
  report.lo = lo;
  report.hi = hi;

  std::vector<const CheckDefinition*> defs;
  for (const auto& id : check_ids) {
    const CheckDefinition& def = find_check(id);
    if (report.summary.emplace(def.id, CheckTally{}).second) defs.push_back(&def);
  }
  std::sort(defs.begin(), defs.end(), [](const auto* l, const auto* r) { return l->id < r->id; });

  struct Task {
    const CheckDefinition* def;
    std::uint64_t p;
  };
  std::vector<Task> tasks;
  const auto primes = primes_between(lo, hi);
  for (const auto* def : defs) {
    for (auto p : primes) {
      if (def->applies(p)) {
        tasks.push_back({def, p});
      } else {
        ++report.summary[def->id].skipped;
      }
    }
  }

  std::vector<CheckResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      try {
        results[i] = run_check(t.def->id, t.p);
      } catch (const std::exception& e) {
        CheckResult& r = results[i];
        r.check_id = t.def->id;
        r.p = t.p;
        r.modulus = pow(Integer(t.p), static_cast<unsigned long>(t.def->modulus_exponent));
        r.pass = false;
        r.note = std::string("error: ") + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& r : results) {
    CheckTally& tally = report.summary[r.check_id];
    ++(r.pass ? tally.pass : tally.fail);
  }
  report.results = std::move(results);
  return report;
}

namespace {

std::string opt(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); }

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_json(const SweepReport& report) {
  using nlohmann::ordered_json;
  ordered_json root;
  root["version"] = report.version;
  root["range"] = {{"lo", std::to_string(report.lo)}, {"hi", std::to_string(report.hi)}};
  ordered_json results = ordered_json::array();
  for (const auto& r : report.results) {
    ordered_json row;
    row["check"] = r.check_id;
    row["p"] = std::to_string(r.p);
    row["x"] = r.x ? ordered_json(std::to_string(*r.x)) : ordered_json(nullptr);
    row["y"] = r.y ? ordered_json(std::to_string(*r.y)) : ordered_json(nullptr);
    row["lhs"] = r.lhs.get_str();
    row["rhs"] = r.rhs.get_str();
    row["modulus"] = r.modulus.get_str();
    row["pass"] = r.pass;
    row["note"] = r.note;
    results.push_back(std::move(row));
  }
  root["results"] = std::move(results);
  ordered_json summary = ordered_json::object();
  for (const auto& [id, t] : report.summary) {
    summary[id] = {{"pass", std::to_string(t.pass)}, {"fail", std::to_string(t.fail)}, {"skipped", std::to_string(t.skipped)}};
  }
  root["summary"] = std::move(summary);
  return root.dump(2) + "\n";
}

std::string to_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "check,p,x,y,lhs,rhs,modulus,pass,note\n";
  for (const auto& r : report.results) {
    out << r.check_id << ',' << r.p << ',' << opt(r.x) << ',' << opt(r.y) << ',' << r.lhs.get_str() << ',' << r.rhs.get_str() << ','
        << r.modulus.get_str() << ',' << (r.pass ? "true" : "false") << ',' << csv_field(r.note) << '\n';
  }
  return out.str();
}

std::string to_table(const SweepReport& report) {
  std::ostringstream out;
  out << "verifier " << report.version << "  primes " << report.lo << ".." << report.hi << "\n\n";
  out << std::left << std::setw(22) << "check" << std::right << std::setw(7) << "p" << std::setw(6) << "x" << std::setw(5) << "y"
      << std::setw(14) << "lhs" << std::setw(14) << "rhs" << std::setw(14) << "modulus" << "  result\n";
  for (const auto& r : report.results) {
    out << std::left << std::setw(22) << r.check_id << std::right << std::setw(7) << r.p << std::setw(6) << opt(r.x) << std::setw(5)
        << opt(r.y) << std::setw(14) << r.lhs.get_str() << std::setw(14) << r.rhs.get_str() << std::setw(14) << r.modulus.get_str()
        << "  " << (r.pass ? "pass" : "FAIL");
    if (!r.note.empty()) out << "  " << r.note;
    out << '\n';
  }
  out << "\nsummary\n";
  for (const auto& [id, t] : report.summary) {
    out << "  " << std::left << std::setw(22) << id << std::right << " pass " << std::setw(5) << t.pass << "  fail " << std::setw(5)
        << t.fail << "  skipped " << std::setw(5) << t.skipped << '\n';
  }
  out << (report.all_pass() ? "all checks passed\n" : "FAILURES present\n");
  return out.str();
}

}  // namespace supercong
