#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mgonal/polygonal.hpp"

namespace mgonal {

/// [1 x (l-1), (l+1) x m, (2l+1)]: represents every nonnegative integer except l.
struct GuyForm {
  int m;
  int ell;
  PolygonalForm form;
};

/// Needs m >= 6 and 1 <= l <= m - 4.
GuyForm guy_form(int m, int ell);

struct GuyReport {
  int m = 0;
  int ell = 0;
  std::uint64_t bound = 0;
  std::vector<std::uint64_t> missing;  // values in [0, bound] the form does not represent

  bool pass() const { return missing.size() == 1 && missing.front() == static_cast<std::uint64_t>(ell); }
  /// "misses exactly {5}: PASS" (verified up to the bound).
  std::string summary() const;
};

GuyReport verify_guy(const GuyForm& gf, std::uint64_t bound);

/// l is not a sum of l-1 generalized m-gonal numbers.
bool lower_bound_witness(int m, int ell);

/// verify_guy for every m in [m_min, m_max] and l in [1, m-4], in (m, l) order.
std::vector<GuyReport> verify_guy_grid(int m_min, int m_max, std::uint64_t bound);

}  // namespace mgonal
