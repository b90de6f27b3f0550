#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mgonal/arith.hpp"
#include "mgonal/lattice.hpp"

namespace mgonal {

// ---------------------------------------------------------------------------
// Local structure

struct JordanComponent {
  int exponent = 0;       // r_i
  std::int64_t unit = 1;  // b_i, coprime to p

  friend bool operator==(const JordanComponent&, const JordanComponent&) = default;
};

/// L_p = <b_1 p^{r_1}, ..., b_n p^{r_n}> with r_1 <= ... <= r_n.
struct JordanDecomposition {
  std::int64_t p = 2;
  std::vector<JordanComponent> entries;

  std::size_t rank() const noexcept { return entries.size(); }
  std::vector<int> exponents() const;
  /// The diagonal entries b_i p^{r_i}, in stored order.
  std::vector<std::uint64_t> gram() const;

  friend bool operator==(const JordanDecomposition&, const JordanDecomposition&) = default;
};

/// For a diagonal lattice the components are (ord_p a_j, a_j / p^{ord_p a_j}),
/// stable-sorted by exponent.
JordanDecomposition jordan_decompose(std::int64_t p, std::span<const std::uint32_t> gram);

// ---------------------------------------------------------------------------
// Densities

enum class DensityMethod { closed_form, yang_odd, yang_two, oracle };
std::string_view to_string(DensityMethod method);

struct Density {
  Rational value;
  DensityMethod method = DensityMethod::closed_form;
  std::optional<int> stabilization_t;  // set for oracle values
};

/// Closed forms at primes dividing the conductor: p^{-ord_p N} for odd p,
/// 2 when 2 || N, 2^{-(ord_2 N - 1)} when 4 | N. Throws DispatchError if p does not divide N.
Density density_p_dividing_N(std::int64_t p, std::int64_t conductor);

/// Yang's formula 1 + R_1(1, h, L_p) for odd p. Needs even rank >= 4 and ord_p h >= 0.
Density yang_density_odd(const JordanDecomposition& jd, const Rational& h);

/// Yang's 2-adic formula. Needs even rank >= 4, ord_2 h >= 0 and r_1 = 0.
Density yang_density_two(const JordanDecomposition& jd, const Rational& h);

/// R_1(1, h, L_p) for either kind of prime (the density minus one).
Rational yang_r1(const JordanDecomposition& jd, const Rational& h);

/// Per-t ingredients of Yang's odd-p sum.
struct YangOddTerms {
  int t = 0;
  int l = 0;        // l(t,1) = #{i : r_i - t < 0 odd}
  int twice_d = 0;  // 2 d(t) = 2t + sum_{r_i < t} (r_i - t)
  int epsilon = 1;  // (-1/p)^{[l/2]} prod_{i in L(t,1)} (b_i/p)
};
YangOddTerms yang_odd_terms(const JordanDecomposition& jd, int t);

/// Per-t ingredients of Yang's 2-adic sums.
struct YangTwoTerms {
  int t = 0;
  int l_prev = 0;             // l(t-1, 1)
  int twice_d = 0;            // 2 d(t) = 2t + sum_{r_i < t-1} (r_i - t + 1)
  std::int64_t epsilon = 1;   // prod_{i in L(t-1,1)} b_i, mod 8
  bool delta = true;          // false iff some r_i = t - 1
  std::int64_t mu_mod8 = 0;   // mu_t(h) = alpha 2^{a+3-t} - sum_{r_i < t-1} b_i, mod 8
};
/// `alpha_mod8` is h / 2^a reduced mod 8, `a` = ord_2 h; requires t <= a + 3.
YangTwoTerms yang_two_terms(const JordanDecomposition& jd, int t, std::int64_t alpha_mod8, int a);

/// e_2(mu / 8) restricted to mu in 4 Z_2: +1 for mu = 0 mod 8, -1 for mu = 4 mod 8, 0 otherwise.
int e2_mu_over_8(std::int64_t mu_mod8);

// ---------------------------------------------------------------------------
// Residue-count oracle

inline constexpr std::int64_t kDefaultResidueCap = std::int64_t{1} << 22;

struct OracleResult {
  Density density;                 // value at t
  std::array<Rational, 3> values;  // at t, t+1, t+2
  bool stabilized = false;         // all three agree
};

/// #{lambda in (Z/p^t)^n : phi(lambda + nu) = h mod p^t} / p^{(n-1)t}, for primes not
/// dividing the conductor (the shift becomes c N^{-1} mod p^t). Counts are cached per t.
class CountingOracle {
 public:
  CountingOracle(std::int64_t p, ShiftedDiagonalLattice lattice, std::int64_t residue_cap = kDefaultResidueCap);

  std::int64_t p() const noexcept { return p_; }
  Rational density_at(const Rational& h, int t);
  OracleResult evaluate(const Rational& h, int t);
  /// Starts at t = ord_p h + 1 (odd p) or ord_2 h + 3 and steps up until three
  /// consecutive levels agree; throws ResourceError when the residue cap is reached first.
  OracleResult stabilized(const Rational& h);

  /// First level the stabilization search tries for h.
  int starting_level(const Rational& h) const;

 private:
  const std::vector<unsigned __int128>& counts(int t);

  std::int64_t p_;
  ShiftedDiagonalLattice lattice_;
  std::int64_t residue_cap_;
  std::map<int, std::vector<unsigned __int128>> tables_;
};

OracleResult siegel_count_density(std::int64_t p, const ShiftedDiagonalLattice& lattice, const Rational& h, int t);

// ---------------------------------------------------------------------------
// Gauss sums

/// p^{-t} sum_{x mod p^t} exp(-2 pi i alpha (N x^2 - 2 c x) / p^t).
std::complex<double> tau_gauss_sum(std::int64_t p, int t, std::int64_t alpha, std::int64_t conductor, std::int64_t c);

/// The 0/1 value tau_p(p^{-t} alpha) must take when p | N, or nullopt when p does not divide N.
std::optional<int> tau_lemma_value(std::int64_t p, int t, std::int64_t conductor);

// ---------------------------------------------------------------------------
// Dispatcher

/// b_p(h, lambda, 0) for an admissible h: closed forms when p | N, Yang's formulas otherwise.
Density local_density(const ShiftedDiagonalLattice& lattice, const TargetValue& h, std::int64_t p);

struct CheckedDensity {
  Density formula;
  std::optional<OracleResult> oracle;  // only when p does not divide N
  bool agrees() const { return !oracle || (oracle->stabilized && oracle->density.value == formula.value); }
};

CheckedDensity checked_local_density(const ShiftedDiagonalLattice& lattice, const TargetValue& h, std::int64_t p);

// ---------------------------------------------------------------------------
// Local universality patterns and the bounds used to prove them

enum class UniversalityCase { unclassified, case1, case2, case3, case4 };
std::string to_string(UniversalityCase c);

/// Matches [r_1, r_2, r_3, r_4] (and the character condition on b_1 b_2 for odd p)
/// against the locally universal patterns. Needs even rank >= 6.
UniversalityCase classify_universality_pattern(const JordanDecomposition& jd);

struct CaseBoundRow {
  std::string check;           // which inequality
  std::optional<Rational> h;   // empty for h-independent lattice sums
  Rational value;              // the bounded quantity
  Rational bound;              // lower or upper bound, see `check`
  bool pass = false;
};

struct CaseBoundReport {
  JordanDecomposition jd;
  UniversalityCase pattern = UniversalityCase::unclassified;
  std::vector<CaseBoundRow> rows;

  std::size_t failures() const;
};

/// Evaluates, for every h of the sweep, the inequality of the matching case, plus the
/// 2-adic tail lemmas. Throws DomainError for unclassified decompositions.
CaseBoundReport verify_case_bounds(const JordanDecomposition& jd, std::span<const Rational> h_sweep);

}  // namespace mgonal
