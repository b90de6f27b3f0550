#pragma once

#include <cstdint>
#include <gmpxx.h>

namespace mgonal {

/// Exact rational used by the lattice and density modules.
using Rational = mpq_class;

/// num/den in lowest terms; den must be nonzero.
Rational make_rational(const mpz_class& num, const mpz_class& den);

bool is_prime(std::int64_t n);

/// Exponent of p in |x|. x must be nonzero.
int ord_p(std::int64_t x, std::int64_t p);
int ord_p(const mpz_class& x, std::int64_t p);
/// ord_p(num) - ord_p(den). x must be nonzero.
int ord_p(const Rational& x, std::int64_t p);

/// Legendre symbol (a/p) for an odd prime p; 0 when p | a.
int legendre(std::int64_t a, std::int64_t p);

/// (2, x)_2 for x odd, read off x mod 8; 0 for even x.
int hilbert_two(std::int64_t x);

std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);
std::int64_t ipow(std::int64_t base, int exp);

/// Reduction of a p-integral rational into Z/modulus, modulus a power of p.
std::int64_t reduce_mod(const Rational& x, std::int64_t modulus);

/// p^e as an exact rational; e may be negative.
Rational rational_pow(std::int64_t p, int e);

}  // namespace mgonal
