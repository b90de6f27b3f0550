#include <algorithm>

#include "mgonal/errors.hpp"
#include "mgonal/localdensity.hpp"

namespace mgonal {

std::vector<int> JordanDecomposition::exponents() const {
  std::vector<int> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.exponent);
  return out;
}

std::vector<std::uint64_t> JordanDecomposition::gram() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : entries) out.push_back(static_cast<std::uint64_t>(e.unit * ipow(p, e.exponent)));
  return out;
}

JordanDecomposition jordan_decompose(std::int64_t p, std::span<const std::uint32_t> gram) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  JordanDecomposition jd;
  jd.p = p;
  for (auto a : gram) {
    if (a == 0) throw DomainError("Gram entries must be positive");
    std::int64_t unit = a;
    int r = 0;
    while (unit % p == 0) {
      unit /= p;
      ++r;
    }
    jd.entries.push_back({r, unit});
  }
  std::stable_sort(jd.entries.begin(), jd.entries.end(),
                   [](const JordanComponent& x, const JordanComponent& y) { return x.exponent < y.exponent; });
  return jd;
}

std::string_view to_string(DensityMethod method) {
  switch (method) {
    case DensityMethod::closed_form:
      return "closed_form";
    case DensityMethod::yang_odd:
      return "yang_odd";
    case DensityMethod::yang_two:
      return "yang_two";
    case DensityMethod::oracle:
      return "oracle";
  }
  return "unknown";
}

}  // namespace mgonal
