#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "common.hpp"
#include "supercong/errors.hpp"
#include "supercong/modular.hpp"
#include "supercong/sequences.hpp"

namespace supercong {

bool applies_one_mod_three(std::uint64_t p) { return p >= 7 && p % 3 == 1; }
bool applies_above_five(std::uint64_t p) { return p > 5; }
bool applies_above_three(std::uint64_t p) { return p > 3; }

CheckContext::CheckContext(std::uint64_t p, std::optional<PrimeRepresentation> rep) : p_(p), rep_(std::move(rep)) {}

const PrimeRepresentation& CheckContext::representation() const {
  if (!rep_) throw std::logic_error("check context has no representation");
  return *rep_;
}

const Rational& CheckContext::H(long n) {
  if (h1_.empty()) h1_ = harmonic_table(2 * pl(), 1);
  return h1_.at(static_cast<std::size_t>(n));
}

const Rational& CheckContext::H2(long n) {
  if (h2_.empty()) h2_ = harmonic_table(2 * pl(), 2);
  return h2_.at(static_cast<std::size_t>(n));
}

const Rational& CheckContext::T(long n) {
  if (t_.empty()) {
    t_.reserve(p_ + 1);
    t_.emplace_back(0);
    for (long k = 1; k <= pl(); ++k) {
      t_.push_back(t_.back() + detail::pow4(k) / (Rational(k * k) * detail::C(2 * k, k)));
    }
  }
  return t_.at(static_cast<std::size_t>(n));
}

const std::vector<Integer>& CheckContext::franel() {
  if (!franel_) franel_ = shared_sequences().franel_prefix(pl());
  return *franel_;
}

Rational CheckContext::franel_sum(long base, long weight_slope, long weight_offset) {
  const auto& f = franel();
  Integer num = 0;
  Integer scale = 1;  // base^(p-1-k), walking k downwards
  for (long k = pl() - 1; k >= 0; --k) {
    num += (weight_slope * k + weight_offset) * f[static_cast<std::size_t>(k)] * scale;
    scale *= base;
  }
  return make_rational(num, pow(Integer(base), static_cast<unsigned long>(pl() - 1)));
}

const Rational& CheckContext::bernoulli_third() {
  if (!bernoulli_) bernoulli_ = bernoulli_poly_at(pl() - 2, make_rational(1, 3));
  return *bernoulli_;
}

const Integer& CheckContext::euler() {
  if (!euler_) euler_ = shared_sequences().euler(pl() - 3);
  return *euler_;
}

const Rational& CheckContext::q2() {
  if (!q2_) q2_ = fermat_quotient(2, p_);
  return *q2_;
}

const Rational& CheckContext::q3() {
  if (!q3_) q3_ = fermat_quotient(3, p_);
  return *q3_;
}

int CheckContext::legendre3() const { return legendre_p_over_3(p_); }

namespace {

std::vector<CheckDefinition> build() {
  std::vector<CheckDefinition> all;
  detail::register_theorem_checks(all);
  detail::register_classical_checks(all);
  detail::register_lemma_checks(all);
  detail::register_first_chain(all);
  detail::register_second_chain(all);
  detail::register_gamma_checks(all);
  std::sort(all.begin(), all.end(), [](const auto& l, const auto& r) { return l.id < r.id; });
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i].id == all[i - 1].id) throw std::logic_error("duplicate check id " + all[i].id);
  }
  return all;
}

struct Reduced {
  bool ok = false;
  std::optional<PadicResidue> lhs, rhs;
  std::string failed_side;
};

Reduced reduce_instance(const CheckInstance& in, std::uint64_t p, int k) {
  Reduced r;
  try {
    r.lhs = reduce_mod_pk(in.lhs, p, k);
  } catch (const NonIntegralError&) {
    r.failed_side = "lhs";
  }
  try {
    r.rhs = reduce_mod_pk(in.rhs, p, k);
  } catch (const NonIntegralError&) {
    r.failed_side = r.failed_side.empty() ? "rhs" : "lhs and rhs";
  }
  r.ok = r.lhs && r.rhs && r.lhs->residue == r.rhs->residue;
  return r;
}

void append(std::string& note, const std::string& part) {
  if (!note.empty()) note += "; ";
  note += part;
}

CheckResult evaluate(const CheckDefinition& def, std::uint64_t p, std::optional<PrimeRepresentation> rep) {
  CheckResult res;
  res.check_id = def.id;
  res.p = p;
  if (def.uses_representation) {
    res.x = rep->x;
    res.y = rep->y;
  }
  const int k = def.modulus_exponent;
  res.modulus = pow(Integer(p), static_cast<unsigned long>(k));

  CheckContext ctx(p, std::move(rep));
  const std::vector<CheckInstance> instances = def.evaluate(ctx);

  std::size_t counted = 0, failed = 0;
  bool reported = false;
  std::string asides;
  std::string first_failure;
  for (const auto& in : instances) {
    const Reduced r = reduce_instance(in, p, k);
    if (in.informational) {
      append(asides, in.label + ": " + (r.ok ? "holds" : (r.failed_side.empty() ? "fails" : "non-integral")));
      continue;
    }
    ++counted;
    const bool take = !reported || (!r.ok && failed == 0);
    if (!r.ok) {
      ++failed;
      if (first_failure.empty()) {
        first_failure = "first failure at " + in.label;
        if (!r.failed_side.empty()) first_failure += " (non-integral " + r.failed_side + ")";
      }
    }
    if (take) {
      res.lhs = r.lhs ? r.lhs->residue : Integer(0);
      res.rhs = r.rhs ? r.rhs->residue : Integer(0);
      reported = true;
    }
  }
  res.pass = failed == 0;

  if (counted > 1) append(res.note, "instances=" + std::to_string(counted) + " failed=" + std::to_string(failed));
  if (!first_failure.empty()) append(res.note, first_failure);
  if (!asides.empty()) append(res.note, asides);
  return res;
}

}  // namespace

const std::vector<CheckDefinition>& list_checks() {
  static const std::vector<CheckDefinition> registry = build();
  return registry;
}

const CheckDefinition& find_check(std::string_view id) {
  const auto& all = list_checks();
  const auto it = std::lower_bound(all.begin(), all.end(), id, [](const auto& d, std::string_view v) { return d.id < v; });
  if (it == all.end() || it->id != id) throw UnknownCheckError("unknown check: " + std::string(id));
  return *it;
}

CheckResult run_check(std::string_view id, std::uint64_t p) {
  const CheckDefinition& def = find_check(id);
  if (!is_prime(p) || !def.applies(p)) {
    throw NotApplicableError(def.id + " does not apply to p=" + std::to_string(p) + " (" + def.applicability + ")");
  }
  std::optional<PrimeRepresentation> rep;
  if (def.uses_representation) rep = represent(p);
  return evaluate(def, p, std::move(rep));
}

CheckResult run_check(std::string_view id, std::uint64_t p, const PrimeRepresentation& rep) {
  const CheckDefinition& def = find_check(id);
  if (!is_prime(p) || !def.applies(p)) {
    throw NotApplicableError(def.id + " does not apply to p=" + std::to_string(p) + " (" + def.applicability + ")");
  }
  if (rep.p != p) throw std::invalid_argument("representation is for a different prime");
  return evaluate(def, p, rep);
}

}  // namespace supercong
