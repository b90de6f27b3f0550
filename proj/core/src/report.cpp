#include "mgonal/report.hpp"

namespace mgonal {

namespace {

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(xs[i]);
  }
  return s;
}

void fraction(std::ostream& out, const std::optional<Rational>& x) {
  if (x) {
    out << x->get_num().get_str() << ',' << x->get_den().get_str();
  } else {
    out << ',';
  }
}

}  // namespace

void write_density_csv(std::ostream& out, const std::vector<DensityCsvRow>& rows) {
  out << kDensityCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.p << ',' << join(r.gram) << ',' << r.conductor << ',' << r.c << ',';
    fraction(out, r.h);
    out << ',' << r.method << ',';
    fraction(out, r.value);
    out << ',';
    fraction(out, r.oracle);
    out << ',' << r.pass << '\n';
  }
}

std::vector<DensityCsvRow> case_bound_rows(const CaseBoundReport& report, std::int64_t conductor, std::int64_t c) {
  std::vector<DensityCsvRow> out;
  for (const auto& row : report.rows) {
    DensityCsvRow r;
    r.p = report.jd.p;
    r.gram = report.jd.gram();
    r.conductor = conductor;
    r.c = c;
    r.h = row.h;
    r.method = to_string(report.pattern) + " " + row.check;
    r.value = row.value;
    r.oracle = row.bound;
    r.pass = row.pass ? "true" : "false";
    out.push_back(std::move(r));
  }
  return out;
}

void write_guy_csv(std::ostream& out, const std::vector<GuyReport>& reports) {
  out << kGuyCsvHeader << '\n';
  for (const auto& r : reports) {
    out << r.m << ',' << r.ell << ',' << r.bound << ',' << join(r.missing) << ',' << (r.pass() ? "true" : "false")
        << '\n';
  }
}

}  // namespace mgonal
