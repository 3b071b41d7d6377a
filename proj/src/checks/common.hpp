#pragma once

#include <vector>

#include "supercong/checks.hpp"
#include "supercong/exact.hpp"

namespace supercong::detail {

inline Rational Q(long num, long den = 1) { return make_rational(num, den); }

inline Rational C(long n, long k) { return Rational(binomial(n, k)); }

inline Rational C(const Rational& top, long k) { return binomial(top, k); }

inline Rational sgn(long e) { return Rational(e % 2 == 0 ? 1 : -1); }

inline Rational pow4(long k) { return Rational(pow(Integer(4), static_cast<unsigned long>(k))); }

/// sum_{k=lo}^{hi} term(k). Summands must return Rational, not a GMP
/// expression template, or the temporaries they reference are gone.
template <typename F>
Rational sum(long lo, long hi, F term) {
  Rational s = 0;
  for (long k = lo; k <= hi; ++k) s += term(k);
  return s;
}

inline CheckInstance inst(std::string label, Rational lhs, Rational rhs) {
  return {std::move(label), std::move(lhs), std::move(rhs), false};
}

inline CheckInstance aside(std::string label, Rational lhs, Rational rhs) {
  return {std::move(label), std::move(lhs), std::move(rhs), true};
}

void register_theorem_checks(std::vector<CheckDefinition>& out);
void register_classical_checks(std::vector<CheckDefinition>& out);
void register_lemma_checks(std::vector<CheckDefinition>& out);
void register_first_chain(std::vector<CheckDefinition>& out);
void register_second_chain(std::vector<CheckDefinition>& out);
void register_gamma_checks(std::vector<CheckDefinition>& out);

}  // namespace supercong::detail
