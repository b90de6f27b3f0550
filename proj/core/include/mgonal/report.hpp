#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mgonal/arith.hpp"
#include "mgonal/constructions.hpp"
#include "mgonal/localdensity.hpp"

namespace mgonal {

/// One line of a density conformance or case-bound CSV.
struct DensityCsvRow {
  std::int64_t p = 0;
  std::vector<std::uint64_t> gram;
  std::int64_t conductor = 1;
  std::int64_t c = 0;
  std::optional<Rational> h;
  std::string method;
  std::optional<Rational> value;
  std::optional<Rational> oracle;
  std::string pass;  // "true", "false" or "skipped"
};

inline constexpr const char* kDensityCsvHeader =
    "p,gram,N,c,h_num,h_den,method,value_num,value_den,oracle_num,oracle_den,pass";
inline constexpr const char* kGuyCsvHeader = "m,ell,B,missing_values,pass";

void write_density_csv(std::ostream& out, const std::vector<DensityCsvRow>& rows);

/// Case-bound rows in the density CSV layout: method = the inequality, value = the
/// bounded quantity, oracle columns = the bound.
std::vector<DensityCsvRow> case_bound_rows(const CaseBoundReport& report, std::int64_t conductor, std::int64_t c);

/// missing_values is ';'-separated.
void write_guy_csv(std::ostream& out, const std::vector<GuyReport>& reports);

}  // namespace mgonal
