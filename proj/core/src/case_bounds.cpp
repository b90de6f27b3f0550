#include <algorithm>

#include "mgonal/errors.hpp"
#include "mgonal/localdensity.hpp"

namespace mgonal {

namespace {

Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

CaseBoundRow row(std::string check, std::optional<Rational> h, Rational value, Rational bound, bool pass) {
  return {std::move(check), std::move(h), std::move(value), std::move(bound), pass};
}

void odd_rows(const JordanDecomposition& jd, UniversalityCase pattern, const Rational& h,
              std::vector<CaseBoundRow>& rows) {
  const auto p = jd.p;
  const Rational r1 = yang_r1(jd, h);
  const int r4 = jd.entries[3].exponent;
  const int rn = jd.entries.back().exponent;
  const int a = ord_p(h, p);

  switch (pattern) {
    case UniversalityCase::case1: {
      const Rational bound = Rational(2) * rational_pow(p, -1);
      rows.push_back(row("case1: |R1| <= 2/p", h, abs_value(r1), bound, abs_value(r1) <= bound));
      break;
    }
    case UniversalityCase::case2:
      if (a == 0) {
        const Rational bound = rational_pow(p, -1);
        rows.push_back(row("case2 (a=0): R1^2 <= 1/p", h, r1 * r1, bound, r1 * r1 <= bound));
      } else {
        const Rational lower = Rational(1) - Rational(2) * rational_pow(p, -1);
        rows.push_back(row("case2: R1 >= 1-2/p", h, r1, lower, r1 >= lower));
        rows.push_back(row("case2: R1 <= r4", h, r1, Rational(r4), r1 <= r4));
      }
      break;
    case UniversalityCase::case3: {
      const Rational bound = Rational(1) - (rational_pow(p, -rn) - rational_pow(p, -(rn + 1)));
      rows.push_back(row("case3: |R1| <= 1-(p^-rn - p^-(rn+1))", h, abs_value(r1), bound, abs_value(r1) <= bound));
      break;
    }
    default:
      throw DomainError("pattern does not apply to odd primes");
  }
  const Rational density = Rational(1) + r1;
  rows.push_back(row("b_p > 0", h, density, Rational(0), density > 0));
}

// 2^{d(t) - 3/2} when l(t-1,1) is odd, else 2^{d(t) - 1}.
Rational two_adic_term(const JordanDecomposition& jd, int t, bool& delta) {
  const auto terms = yang_two_terms(jd, t, 1, t);
  delta = terms.delta;
  const int twice = terms.l_prev % 2 != 0 ? terms.twice_d - 3 : terms.twice_d - 2;
  if (twice % 2 != 0) throw InternalError("non-integral power of 2 in a 2-adic tail term");
  return rational_pow(2, twice / 2);
}

void two_adic_lemma_rows(const JordanDecomposition& jd, std::vector<CaseBoundRow>& rows) {
  const auto r = jd.exponents();
  const int r4 = r[3];
  const int rn = r.back();
  const int n = static_cast<int>(r.size());
  const bool improved = (r[0] == 0 && r[1] == 0 && r[2] == 0 && r4 == 2) ||
                        (r[0] == 0 && r[1] == 0 && r[2] == 1 && r4 == 3);

  // Tail over t >= r_n + 2: exact up to r_n + 40, then a geometric majorant. In that
  // range 2d(t) drops by n - 2 per step.
  const int last = rn + 40;
  Rational tail_sum = 0;
  bool delta = true;
  for (int t = rn + 2; t <= last; ++t) tail_sum += two_adic_term(jd, t, delta);
  const auto beyond = yang_two_terms(jd, last + 1, 1, last + 1);
  const int top = beyond.twice_d - 2;
  const Rational first = rational_pow(2, top % 2 == 0 ? top / 2 : (top + 1) / 2);
  const Rational ratio = rational_pow(2, -(n - 2) / 2);
  tail_sum += first / (Rational(1) - ratio);

  const Rational bound4 = rational_pow(2, r4 - rn - (improved ? 2 : 1));
  rows.push_back(row(improved ? "lemma4 (improved): tail <= 2^(r4-rn-2)" : "lemma4: tail <= 2^(r4-rn-1)",
                     std::nullopt, tail_sum, bound4, tail_sum <= bound4));

  if (r4 + 2 <= rn) {
    Rational middle = 0;
    for (int t = r4 + 2; t <= rn; ++t) {
      const Rational term = two_adic_term(jd, t, delta);
      if (delta) middle += term;
    }
    Rational bound5 = 0;
    const int from = improved ? 2 : 1;
    const int to = improved ? rn - r4 : rn - r4 - 1;
    for (int k = from; k <= to; ++k) bound5 += rational_pow(2, -k);
    rows.push_back(row(improved ? "lemma5 (improved): middle <= 2^-2+...+2^(r4-rn)"
                                : "lemma5: middle <= 2^-1+...+2^(r4-rn+1)",
                       std::nullopt, middle, bound5, middle <= bound5));
  }
}

}  // namespace

std::size_t CaseBoundReport::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.pass; }));
}

CaseBoundReport verify_case_bounds(const JordanDecomposition& jd, std::span<const Rational> h_sweep) {
  CaseBoundReport report;
  report.jd = jd;
  report.pattern = classify_universality_pattern(jd);
  if (report.pattern == UniversalityCase::unclassified) {
    throw DomainError("verify_case_bounds needs a classified decomposition");
  }
  if (jd.p == 2) {
    two_adic_lemma_rows(jd, report.rows);
    for (const auto& h : h_sweep) {
      const Rational density = Rational(1) + yang_r1(jd, h);
      report.rows.push_back(row("0 < b_2 <= 2", h, density, Rational(2), density > 0 && density <= 2));
    }
  } else {
    for (const auto& h : h_sweep) odd_rows(jd, report.pattern, h, report.rows);
  }
  return report;
}

}  // namespace mgonal
