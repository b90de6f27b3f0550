#include "mgonal/constructions.hpp"

#include <utility>

#include "mgonal/errors.hpp"
#include "mgonal/parallel.hpp"

namespace mgonal {

namespace {

void require_guy_range(int m, int ell) {
  if (m < 6) throw DomainError("Guy forms need m >= 6");
  if (ell < 1 || ell > m - 4) {
    throw DomainError("l must lie in [1, m-4] = [1, " + std::to_string(m - 4) + "], got " + std::to_string(ell));
  }
}

}  // namespace

GuyForm guy_form(int m, int ell) {
  require_guy_range(m, ell);
  std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(ell - 1), 1U);
  coeffs.insert(coeffs.end(), static_cast<std::size_t>(m), static_cast<std::uint32_t>(ell + 1));
  coeffs.push_back(static_cast<std::uint32_t>(2 * ell + 1));
  return {m, ell, PolygonalForm(m, std::move(coeffs))};
}

std::string GuyReport::summary() const {
  std::string s = "misses exactly {";
  for (std::size_t i = 0; i < missing.size(); ++i) {
    if (i) s += ',';
    if (i == 8) {
      s += "...";
      break;
    }
    s += std::to_string(missing[i]);
  }
  s += "}: ";
  s += pass() ? "PASS" : "FAIL";
  s += " (verified up to " + std::to_string(bound) + ")";
  return s;
}

GuyReport verify_guy(const GuyForm& gf, std::uint64_t bound) {
  if (bound < static_cast<std::uint64_t>(gf.ell) + 1) throw DomainError("verify_guy needs bound >= l + 1");
  GuyReport r;
  r.m = gf.m;
  r.ell = gf.ell;
  r.bound = bound;
  r.missing = represented_set(gf.form, bound).missing();
  return r;
}

bool lower_bound_witness(int m, int ell) {
  require_guy_range(m, ell);
  const auto bound = static_cast<std::uint64_t>(ell);
  const auto values = polygonal_values_up_to(m, bound);
  auto set = RepresentationSet::zero_only(bound);
  for (int i = 0; i < ell - 1; ++i) set = set.folded(values, 1);
  return !set.contains(bound);
}

std::vector<GuyReport> verify_guy_grid(int m_min, int m_max, std::uint64_t bound) {
  std::vector<std::pair<int, int>> cells;
  for (int m = std::max(m_min, 6); m <= m_max; ++m) {
    for (int ell = 1; ell <= m - 4; ++ell) cells.emplace_back(m, ell);
  }
  return parallel_map<GuyReport>(cells.size(), [&](std::size_t i) {
    return verify_guy(guy_form(cells[i].first, cells[i].second), bound);
  });
}

}  // namespace mgonal
