#include "mgonal/errors.hpp"
#include "mgonal/localdensity.hpp"

namespace mgonal {

namespace {

void require_formula_rank(const JordanDecomposition& jd) {
  const auto n = jd.rank();
  if (n < 4 || n % 2 != 0) {
    throw DomainError("density formulas need even rank >= 4, got " + std::to_string(n));
  }
}

struct Target {
  int a;         // ord_p h
  Rational unit;  // alpha = h / p^a
};

Target split_target(const Rational& h, std::int64_t p) {
  if (h <= 0) throw DomainError("target must be positive");
  const int a = ord_p(h, p);
  if (a < 0) throw DomainError("target is not p-integral (ord_p h < 0)");
  return {a, h / rational_pow(p, a)};
}

// p^{e/2}, where e must be even.
Rational half_power(std::int64_t p, int twice_exponent, const char* where) {
  if (twice_exponent % 2 != 0) {
    throw InternalError(std::string("non-integral power of p in ") + where);
  }
  return rational_pow(p, twice_exponent / 2);
}

}  // namespace

YangOddTerms yang_odd_terms(const JordanDecomposition& jd, int t) {
  YangOddTerms terms;
  terms.t = t;
  terms.twice_d = 2 * t;
  int symbol_product = 1;
  for (const auto& e : jd.entries) {
    const int diff = e.exponent - t;
    if (diff < 0) {
      terms.twice_d += diff;
      if (diff % 2 != 0) {
        ++terms.l;
        symbol_product *= legendre(e.unit, jd.p);
      }
    }
  }
  const int minus_one = legendre(-1, jd.p);
  terms.epsilon = ((terms.l / 2) % 2 == 1 ? minus_one : 1) * symbol_product;
  return terms;
}

YangTwoTerms yang_two_terms(const JordanDecomposition& jd, int t, std::int64_t alpha_mod8, int a) {
  if (t > a + 3) throw DomainError("yang_two_terms needs t <= a + 3");
  YangTwoTerms terms;
  terms.t = t;
  terms.twice_d = 2 * t;
  std::int64_t unit_sum = 0;
  for (const auto& e : jd.entries) {
    if (e.exponent == t - 1) terms.delta = false;
    if (e.exponent < t - 1) {
      terms.twice_d += e.exponent - t + 1;
      unit_sum += e.unit;
    }
    const int diff = e.exponent - (t - 1);
    if (diff < 0 && diff % 2 != 0) {
      ++terms.l_prev;
      terms.epsilon = mod(terms.epsilon * e.unit, 8);
    }
  }
  // alpha * 2^{a+3-t} mod 8; the power is at least 2^0.
  const int shift = a + 3 - t;
  const std::int64_t lead = shift >= 3 ? 0 : mod(alpha_mod8 << shift, 8);
  terms.mu_mod8 = mod(lead - unit_sum, 8);
  return terms;
}

int e2_mu_over_8(std::int64_t mu_mod8) {
  switch (mod(mu_mod8, 8)) {
    case 0:
      return 1;
    case 4:
      return -1;
    default:
      return 0;
  }
}

namespace {

Rational r1_odd(const JordanDecomposition& jd, const Rational& h) {
  const auto p = jd.p;
  const auto [a, alpha] = split_target(h, p);
  const Rational one_minus = Rational(1) - rational_pow(p, -1);

  Rational sum = 0;
  for (int t = 1; t <= a; ++t) {
    const auto terms = yang_odd_terms(jd, t);
    if (terms.l % 2 != 0) continue;
    sum += terms.epsilon * half_power(p, terms.twice_d, "yang_odd sum");
  }
  Rational r1 = one_minus * sum;

  const auto last = yang_odd_terms(jd, a + 1);
  if (last.l % 2 == 0) {
    // f_1 = -1/p
    r1 -= last.epsilon * half_power(p, last.twice_d, "yang_odd tail") * rational_pow(p, -1);
  } else {
    // f_1 = (alpha/p) p^{-1/2}; the combined exponent d(a+1) - 1/2 is integral.
    const int symbol = legendre(reduce_mod(alpha, p), p);
    r1 += last.epsilon * symbol * half_power(p, last.twice_d - 1, "yang_odd f_1");
  }
  return r1;
}

Rational r1_two(const JordanDecomposition& jd, const Rational& h) {
  if (jd.entries.front().exponent != 0) {
    throw DomainError("the 2-adic formula needs r_1 = 0 (a 2-primitive lattice)");
  }
  const auto [a, alpha] = split_target(h, 2);
  const std::int64_t alpha8 = reduce_mod(alpha, 8);

  Rational r1 = 0;
  for (int t = 2; t <= a + 3; ++t) {
    const auto terms = yang_two_terms(jd, t, alpha8, a);
    if (!terms.delta) continue;
    if (terms.l_prev % 2 != 0) {
      const int symbol = hilbert_two(terms.mu_mod8 * terms.epsilon);
      if (symbol != 0) r1 += symbol * half_power(2, terms.twice_d - 3, "yang_two odd sum");
    } else {
      const int character = e2_mu_over_8(terms.mu_mod8);
      if (character != 0) {
        r1 += hilbert_two(terms.epsilon) * character * half_power(2, terms.twice_d - 2, "yang_two even sum");
      }
    }
  }
  return r1;
}

}  // namespace

Rational yang_r1(const JordanDecomposition& jd, const Rational& h) {
  require_formula_rank(jd);
  return jd.p == 2 ? r1_two(jd, h) : r1_odd(jd, h);
}

Density yang_density_odd(const JordanDecomposition& jd, const Rational& h) {
  if (jd.p == 2) throw DomainError("yang_density_odd needs an odd prime");
  require_formula_rank(jd);
  return {Rational(1) + r1_odd(jd, h), DensityMethod::yang_odd, std::nullopt};
}

Density yang_density_two(const JordanDecomposition& jd, const Rational& h) {
  if (jd.p != 2) throw DomainError("yang_density_two needs p = 2");
  require_formula_rank(jd);
  return {Rational(1) + r1_two(jd, h), DensityMethod::yang_two, std::nullopt};
}

}  // namespace mgonal
