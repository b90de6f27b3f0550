#pragma once

#include <cstdint>
#include <vector>

#include "mgonal/arith.hpp"
#include "mgonal/polygonal.hpp"

namespace mgonal {

inline constexpr std::uint64_t kDefaultCellCap = 100'000'000;

/// The coset X = L + nu with L = <a_1, ..., a_n> diagonal and
/// nu = -(c/N)(v_1 + ... + v_n). c is kept in [0, N) and gcd(c, N) = 1, so N is
/// the conductor of X.
class ShiftedDiagonalLattice {
 public:
  ShiftedDiagonalLattice(std::vector<std::uint32_t> gram, std::int64_t c, std::int64_t conductor);

  const std::vector<std::uint32_t>& gram() const noexcept { return gram_; }
  std::size_t rank() const noexcept { return gram_.size(); }
  std::int64_t shift_numerator() const noexcept { return c_; }
  std::int64_t conductor() const noexcept { return n_; }
  /// c / N
  Rational shift() const;
  /// phi(nu) = sum a_j (c/N)^2
  Rational shift_norm() const;
  /// gcd of the Gram entries; 1 means L is primitive.
  std::uint64_t content() const;

  friend bool operator==(const ShiftedDiagonalLattice&, const ShiftedDiagonalLattice&) = default;

 private:
  std::vector<std::uint32_t> gram_;
  std::int64_t c_;
  std::int64_t n_;
};

/// A target value h for phi(v) = h, v in X.
struct TargetValue {
  Rational h;
};

/// Gram = coefficients, c/N = (m-4)/(2(m-2)) in lowest terms.
ShiftedDiagonalLattice lattice_from_form(const PolygonalForm& form);

/// h(l) = 2l/(m-2) + sum a_j ((m-4)/(2(m-2)))^2
TargetValue h_of_ell(const PolygonalForm& form, std::uint64_t ell);

/// #{v in X : phi(v) = h}, by enumeration of the box |lambda_j - c/N| <= sqrt(h/a_j).
/// Throws ResourceError when the box holds more than cell_cap points.
std::uint64_t representation_count(const ShiftedDiagonalLattice& lattice, const TargetValue& h,
                                   std::uint64_t cell_cap = kDefaultCellCap);

/// Checks that l is in the value set of `form` exactly when h(l) is represented by
/// the corresponding shifted lattice. Returns the shared answer; throws
/// InternalError if the two sides disagree.
bool represents_equivalence_check(const PolygonalForm& form, std::uint64_t ell, std::uint64_t bound);
/// Same, reusing a value set the caller already computed for `form`.
bool represents_equivalence_check(const PolygonalForm& form, const RepresentationSet& set, std::uint64_t ell);

/// (h - phi(nu)) * gcd(N, 4) * N / 8 is an integer.
bool admissible(const ShiftedDiagonalLattice& lattice, const TargetValue& h);

}  // namespace mgonal
