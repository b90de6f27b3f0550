#include <cmath>

#include "mgonal/errors.hpp"
#include "mgonal/localdensity.hpp"

namespace mgonal {

namespace {

mpz_class to_mpz(unsigned __int128 v) {
  mpz_class hi = static_cast<unsigned long>(v >> 64);
  mpz_class lo = static_cast<unsigned long>(v & ~std::uint64_t{0});
  return (hi << 64) + lo;
}

// Orbits of Z/p^t under multiplication by squares of units: p^v u is classified by v
// and the square class of u mod p^{t-v}. Every count table below is constant on
// orbits, so a convolution only has to be evaluated at one residue per orbit.
struct OrbitMap {
  std::vector<std::uint16_t> orbit_of;
  std::vector<std::int64_t> representative;
};

OrbitMap orbits(std::int64_t p, int t, std::int64_t q) {
  const int classes = p == 2 ? 4 : 2;
  OrbitMap om;
  om.orbit_of.resize(static_cast<std::size_t>(q));
  om.representative.assign(static_cast<std::size_t>(classes * t + 1), -1);
  for (std::int64_t z = 0; z < q; ++z) {
    int id;
    if (z == 0) {
      id = classes * t;
    } else {
      int v = 0;
      std::int64_t u = z;
      while (u % p == 0) {
        u /= p;
        ++v;
      }
      int cls;
      if (p == 2) {
        const int k = t - v;
        const std::int64_t modulus = k >= 3 ? 8 : (std::int64_t{1} << k);
        cls = static_cast<int>((u % modulus) >> 1);
      } else {
        cls = legendre(u, p) == 1 ? 0 : 1;
      }
      id = classes * v + cls;
    }
    om.orbit_of[static_cast<std::size_t>(z)] = static_cast<std::uint16_t>(id);
    if (om.representative[static_cast<std::size_t>(id)] < 0) om.representative[static_cast<std::size_t>(id)] = z;
  }
  return om;
}

}  // namespace

CountingOracle::CountingOracle(std::int64_t p, ShiftedDiagonalLattice lattice, std::int64_t residue_cap)
    : p_(p), lattice_(std::move(lattice)), residue_cap_(residue_cap) {
  if (!is_prime(p_)) throw DomainError(std::to_string(p_) + " is not prime");
  if (lattice_.conductor() % p_ == 0) {
    throw DispatchError("no residue-count oracle at primes dividing the conductor");
  }
}

int CountingOracle::starting_level(const Rational& h) const {
  if (h <= 0) throw DomainError("oracle target must be positive");
  const int a = ord_p(h, p_);
  if (a < 0) throw DomainError("oracle target is not p-integral");
  return std::max(1, a + (p_ == 2 ? 3 : 1));
}

const std::vector<unsigned __int128>& CountingOracle::counts(int t) {
  if (auto it = tables_.find(t); it != tables_.end()) return it->second;
  if (t < 1) throw DomainError("oracle level t must be >= 1");

  const auto n = lattice_.rank();
  if (static_cast<double>(n) * t * std::log2(static_cast<double>(p_)) >= 126.0) {
    throw ResourceError("residue counts at this level overflow 128 bits");
  }
  std::int64_t q = 1;
  for (int i = 0; i < t; ++i) {
    q *= p_;
    if (q > residue_cap_) throw ResourceError("p^t exceeds the residue cap " + std::to_string(residue_cap_));
  }

  const auto om = orbits(p_, t, q);
  const std::int64_t shift = static_cast<std::int64_t>(
      (__int128)mod(lattice_.shift_numerator(), q) * mod_inverse(lattice_.conductor(), q) % q);

  std::vector<unsigned __int128> running(static_cast<std::size_t>(q), 0);
  running[0] = 1;
  std::vector<std::uint64_t> single(static_cast<std::size_t>(q));
  std::vector<std::int64_t> support;
  std::vector<unsigned __int128> at_rep(om.representative.size());

  for (auto a : lattice_.gram()) {
    // Value distribution of a (x - s)^2 over x mod q.
    std::fill(single.begin(), single.end(), 0);
    for (std::int64_t x = 0; x < q; ++x) {
      const __int128 y = mod(x - shift, q);
      single[static_cast<std::size_t>((__int128)a * y % q * y % q)]++;
    }
    support.clear();
    for (std::int64_t x = 0; x < q; ++x) {
      if (running[static_cast<std::size_t>(x)] != 0) support.push_back(x);
    }
    for (std::size_t id = 0; id < om.representative.size(); ++id) {
      const std::int64_t z = om.representative[id];
      unsigned __int128 acc = 0;
      if (z >= 0) {
        for (std::int64_t x : support) {
          acc += running[static_cast<std::size_t>(x)] * single[static_cast<std::size_t>(mod(z - x, q))];
        }
      }
      at_rep[id] = acc;
    }
    for (std::int64_t z = 0; z < q; ++z) running[static_cast<std::size_t>(z)] = at_rep[om.orbit_of[static_cast<std::size_t>(z)]];
  }
  return tables_.emplace(t, std::move(running)).first->second;
}

Rational CountingOracle::density_at(const Rational& h, int t) {
  if (h != 0 && ord_p(h, p_) < 0) throw DomainError("oracle target is not p-integral");
  const auto& table = counts(t);
  const std::int64_t q = static_cast<std::int64_t>(table.size());
  const std::int64_t residue = h == 0 ? 0 : reduce_mod(h, q);
  const int n = static_cast<int>(lattice_.rank());
  return Rational(to_mpz(table[static_cast<std::size_t>(residue)])) / rational_pow(p_, (n - 1) * t);
}

OracleResult CountingOracle::evaluate(const Rational& h, int t) {
  OracleResult r;
  for (int k = 0; k < 3; ++k) r.values[static_cast<std::size_t>(k)] = density_at(h, t + k);
  r.stabilized = r.values[0] == r.values[1] && r.values[1] == r.values[2];
  r.density = {r.values[0], DensityMethod::oracle, t};
  return r;
}

OracleResult CountingOracle::stabilized(const Rational& h) {
  for (int t = starting_level(h);; ++t) {
    auto r = evaluate(h, t);
    if (r.stabilized) return r;
  }
}

OracleResult siegel_count_density(std::int64_t p, const ShiftedDiagonalLattice& lattice, const Rational& h, int t) {
  CountingOracle oracle(p, lattice);
  return oracle.evaluate(h, t);
}

}  // namespace mgonal
