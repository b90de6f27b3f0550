#pragma once

// Slow reference implementations. Each one is written directly from the
// definitions and shares no code with the library beyond Rational.

#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "mgonal/arith.hpp"

namespace oracle {

/// P_m(x) for |x| <= 2 bound + 2, filtered to [0, bound].
std::set<std::uint64_t> polygonal_values(int m, std::uint64_t bound);

/// { sum a_j P_m(x_j) } intersected with [0, bound], by nested enumeration.
std::set<std::uint64_t> represented(int m, const std::vector<std::uint32_t>& coeffs, std::uint64_t bound);

/// 0 when every value in [1, bound] is represented.
std::uint64_t truant(int m, const std::vector<std::uint32_t>& coeffs, std::uint64_t bound);

/// Escalator tree by recursion over coefficient vectors; map from coefficients to truant
/// (0 for universal up to the bound).
std::map<std::vector<std::uint32_t>, std::uint64_t> escalator(int m, int depth, std::uint64_t bound);

/// Coefficient of q^h in prod_j theta_j, theta_j = sum_{y = -c mod N} q^{a_j y^2 / N^2}.
/// The product is built as a convolution of one-dimensional value lists.
std::uint64_t theta_coefficient(const std::vector<std::uint32_t>& gram, std::int64_t c, std::int64_t n,
                                const mgonal::Rational& h);

/// #{lambda in (Z/p^t)^n : sum a_j (lambda_j + s)^2 = h mod p^t} by visiting every vector,
/// where s = -c N^{-1} mod p^t and h is p-integral.
mgonal::Rational brute_density(std::int64_t p, int t, const std::vector<std::uint32_t>& gram, std::int64_t c,
                               std::int64_t n, const mgonal::Rational& h);

/// p^{-t} sum_x e(-alpha (N x^2 - 2 c x) / p^t), phases reduced in integers first.
std::complex<long double> gauss_sum(std::int64_t p, int t, std::int64_t alpha, std::int64_t n, std::int64_t c);

}  // namespace oracle
