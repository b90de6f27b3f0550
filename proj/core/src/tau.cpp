#include <cmath>
#include <numbers>
#include <numeric>

#include "mgonal/errors.hpp"
#include "mgonal/localdensity.hpp"

namespace mgonal {

std::complex<double> tau_gauss_sum(std::int64_t p, int t, std::int64_t alpha, std::int64_t conductor,
                                   std::int64_t c) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (t < 1) throw DomainError("tau_gauss_sum needs t >= 1");
  if (std::gcd(c, conductor) != 1) throw DomainError("gcd(c, N) must be 1");
  if (alpha % p == 0) throw DomainError("alpha must be a unit at p");
  const std::int64_t q = ipow(p, t);
  std::complex<double> sum = 0.0;
  for (std::int64_t x = 0; x < q; ++x) {
    const __int128 quadratic = (__int128)mod(conductor, q) * x % q * x % q;
    const __int128 linear = (__int128)mod(2 * c, q) * x % q;
    const std::int64_t value = mod(static_cast<std::int64_t>(quadratic - linear), q);
    const __int128 phase = (__int128)mod(alpha, q) * value % q;
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(q);
    sum += std::polar(1.0, angle);
  }
  return sum / static_cast<double>(q);
}

std::optional<int> tau_lemma_value(std::int64_t p, int t, std::int64_t conductor) {
  if (conductor % p != 0) return std::nullopt;
  if (p != 2) return t <= 0 ? 1 : 0;
  if (conductor % 4 != 0) return t <= 2 ? 1 : 0;  // 2 || N: 1 on 2^{-2} Z_2
  return t <= 1 ? 1 : 0;                          // 4 | N: 1 on 2^{-1} Z_2
}

}  // namespace mgonal
