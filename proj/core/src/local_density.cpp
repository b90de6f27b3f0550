#include "mgonal/errors.hpp"
#include "mgonal/localdensity.hpp"

namespace mgonal {

Density density_p_dividing_N(std::int64_t p, std::int64_t conductor) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (conductor < 1 || conductor % p != 0) {
    throw DispatchError("closed-form density needs p | N (p=" + std::to_string(p) + ", N=" + std::to_string(conductor) + ")");
  }
  const int k = ord_p(conductor, p);
  Rational value;
  if (p != 2) {
    value = rational_pow(p, -k);
  } else if (k == 1) {
    value = 2;
  } else {
    value = rational_pow(2, -(k - 1));
  }
  return {value, DensityMethod::closed_form, std::nullopt};
}

Density local_density(const ShiftedDiagonalLattice& lattice, const TargetValue& h, std::int64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (h.h <= 0) throw DomainError("target must be positive");
  if (!admissible(lattice, h)) throw DomainError("target " + h.h.get_str() + " is not admissible");
  if (lattice.conductor() % p == 0) {
    if (lattice.content() != 1) throw DomainError("closed-form densities need a primitive lattice");
    return density_p_dividing_N(p, lattice.conductor());
  }
  const auto jd = jordan_decompose(p, lattice.gram());
  return p == 2 ? yang_density_two(jd, h.h) : yang_density_odd(jd, h.h);
}

CheckedDensity checked_local_density(const ShiftedDiagonalLattice& lattice, const TargetValue& h, std::int64_t p) {
  CheckedDensity out{local_density(lattice, h, p), std::nullopt};
  if (lattice.conductor() % p != 0) {
    CountingOracle oracle(p, lattice);
    out.oracle = oracle.stabilized(h.h);
  }
  return out;
}

std::string to_string(UniversalityCase c) {
  switch (c) {
    case UniversalityCase::case1:
      return "case1";
    case UniversalityCase::case2:
      return "case2";
    case UniversalityCase::case3:
      return "case3";
    case UniversalityCase::case4:
      return "case4";
    case UniversalityCase::unclassified:
      break;
  }
  return "unclassified";
}

UniversalityCase classify_universality_pattern(const JordanDecomposition& jd) {
  if (jd.rank() < 6 || jd.rank() % 2 != 0) throw DomainError("pattern classification needs even rank >= 6");
  const auto r = jd.exponents();
  const auto p = jd.p;

  if (p == 2) {
    if (r[0] != 0) return UniversalityCase::unclassified;
    if (r[1] == 0 && r[2] == 0 && r[3] <= 2) return UniversalityCase::case1;
    if (r[1] == 0 && r[2] == 1 && r[3] >= 1 && r[3] <= 3) return UniversalityCase::case2;
    if (r[1] == 1 && r[2] == 1 && r[3] >= 1 && r[3] <= 2) return UniversalityCase::case3;
    if (r[1] == 1 && r[2] == 2 && r[3] >= 2 && r[3] <= 3) return UniversalityCase::case4;
    return UniversalityCase::unclassified;
  }

  if (r[0] != 0 || r[1] != 0) return UniversalityCase::unclassified;
  if (r[2] == 0) return UniversalityCase::case1;
  const int chi = legendre(jd.entries[0].unit * jd.entries[1].unit, p);
  const bool split = (p % 4 == 1 && chi == 1) || (p % 4 == 3 && chi == -1);
  if (split) return UniversalityCase::case2;
  if (r[2] == 1 && r[3] == 1) return UniversalityCase::case3;
  return UniversalityCase::unclassified;
}

}  // namespace mgonal
