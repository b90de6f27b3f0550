#include "mgonal/lattice.hpp"

#include <cmath>
#include <numeric>

#include "mgonal/errors.hpp"
#include "mgonal/parallel.hpp"

namespace mgonal {

ShiftedDiagonalLattice::ShiftedDiagonalLattice(std::vector<std::uint32_t> gram, std::int64_t c,
                                               std::int64_t conductor)
    : gram_(std::move(gram)), c_(c), n_(conductor) {
  if (gram_.empty()) throw DomainError("lattice rank must be positive");
  for (auto a : gram_) {
    if (a == 0) throw DomainError("Gram entries must be positive");
  }
  if (n_ < 1) throw DomainError("conductor must be >= 1");
  c_ = mod(c_, n_);
  if (std::gcd(c_, n_) != 1) throw DomainError("shift numerator must be coprime to the conductor");
}

Rational ShiftedDiagonalLattice::shift() const {
  return make_rational(mpz_class(static_cast<long>(c_)), mpz_class(static_cast<long>(n_)));
}

Rational ShiftedDiagonalLattice::shift_norm() const {
  mpz_class sum = 0;
  for (auto a : gram_) sum += static_cast<unsigned long>(a);
  const Rational s = shift();
  return Rational(sum) * s * s;
}

std::uint64_t ShiftedDiagonalLattice::content() const {
  std::uint64_t g = 0;
  for (auto a : gram_) g = std::gcd(g, std::uint64_t{a});
  return g;
}

ShiftedDiagonalLattice lattice_from_form(const PolygonalForm& form) {
  const std::int64_t m = form.m();
  std::int64_t num = m - 4;
  std::int64_t den = 2 * (m - 2);
  const std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  return ShiftedDiagonalLattice({form.coeffs().begin(), form.coeffs().end()}, num, den);
}

TargetValue h_of_ell(const PolygonalForm& form, std::uint64_t ell) {
  const long m = form.m();
  const Rational shift = make_rational(m - 4, 2 * (m - 2));
  mpz_class sum = 0;
  for (auto a : form.coeffs()) sum += static_cast<unsigned long>(a);
  const Rational lead = make_rational(mpz_class(2) * mpz_class(static_cast<unsigned long>(ell)), m - 2);
  return {lead + Rational(sum) * shift * shift};
}

std::uint64_t representation_count(const ShiftedDiagonalLattice& lattice, const TargetValue& target,
                                   std::uint64_t cell_cap) {
  if (target.h < 0) throw DomainError("target must be nonnegative");
  // With y_j = N*lambda_j - c the condition reads sum a_j y_j^2 = N^2 h, y_j = -c mod N.
  const std::int64_t n_cond = lattice.conductor();
  const Rational scaled = target.h * Rational(mpz_class(n_cond * n_cond));
  if (scaled.get_den() != 1) return 0;
  if (!scaled.get_num().fits_slong_p()) throw ResourceError("target too large for enumeration");
  const std::int64_t total = scaled.get_num().get_si();
  const auto& gram = lattice.gram();
  const std::size_t n = gram.size();
  const std::int64_t residue = mod(-lattice.shift_numerator(), n_cond);

  // Admissible y values per coordinate: y = residue (mod N), a*y^2 <= total.
  std::vector<std::vector<std::int64_t>> candidates(n);
  double cells = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    const auto ymax = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(total) / gram[j])) + 1;
    for (std::int64_t y = -ymax - n_cond; y <= ymax + n_cond; ++y) {
      if (mod(y, n_cond) != residue) continue;
      if (static_cast<__int128>(gram[j]) * y * y <= total) candidates[j].push_back(y);
    }
    cells *= static_cast<double>(candidates[j].size());
    if (cells > static_cast<double>(cell_cap)) {
      throw ResourceError("enumeration box exceeds the cell cap " + std::to_string(cell_cap));
    }
  }
  if (cells == 0) return 0;

  // Depth-first over coordinates 1..n-2; the last coordinate is solved directly.
  auto count_from = [&](std::size_t first_choice) {
    std::uint64_t found = 0;
    auto recurse = [&](auto&& self, std::size_t j, std::int64_t remaining) -> void {
      if (j + 1 == n) {
        for (std::int64_t y : candidates[j]) {
          if (static_cast<std::int64_t>(gram[j]) * y * y == remaining) ++found;
        }
        return;
      }
      for (std::int64_t y : candidates[j]) {
        const std::int64_t r = remaining - static_cast<std::int64_t>(gram[j]) * y * y;
        if (r >= 0) self(self, j + 1, r);
      }
    };
    const std::int64_t y0 = candidates[0][first_choice];
    const std::int64_t rest = total - static_cast<std::int64_t>(gram[0]) * y0 * y0;
    if (rest < 0) return found;
    if (n == 1) return static_cast<std::uint64_t>(rest == 0 ? 1 : 0);
    recurse(recurse, 1, rest);
    return found;
  };

  const auto partial = parallel_map<std::uint64_t>(candidates[0].size(), count_from);
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

bool represents_equivalence_check(const PolygonalForm& form, const RepresentationSet& set, std::uint64_t ell) {
  if (ell > set.bound()) throw DomainError("l exceeds the bound of the value set");
  const bool by_form = set.contains(ell);
  const bool by_lattice = representation_count(lattice_from_form(form), h_of_ell(form, ell)) > 0;
  if (by_form != by_lattice) {
    throw InternalError("form/lattice disagreement for " + form.to_string() + " at l=" + std::to_string(ell));
  }
  return by_form;
}

bool represents_equivalence_check(const PolygonalForm& form, std::uint64_t ell, std::uint64_t bound) {
  if (ell > bound) throw DomainError("l exceeds the bound");
  return represents_equivalence_check(form, represented_set(form, bound), ell);
}

bool admissible(const ShiftedDiagonalLattice& lattice, const TargetValue& target) {
  const std::int64_t n = lattice.conductor();
  const Rational scaled = (target.h - lattice.shift_norm()) * make_rational(mpz_class(std::gcd(n, std::int64_t{4}) * n), mpz_class(8));
  return scaled.get_den() == 1;
}

}  // namespace mgonal
