#include "mgonal/arith.hpp"

#include <cstdlib>
#include <numeric>

#include "mgonal/errors.hpp"

namespace mgonal {

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

int ord_p(std::int64_t x, std::int64_t p) {
  if (x == 0) throw DomainError("ord_p of zero");
  int k = 0;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  return k;
}

int ord_p(const mpz_class& x, std::int64_t p) {
  if (x == 0) throw DomainError("ord_p of zero");
  mpz_class y = abs(x);
  int k = 0;
  while (mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(p));
    ++k;
  }
  return k;
}

int ord_p(const Rational& x, std::int64_t p) {
  if (x == 0) throw DomainError("ord_p of zero");
  return ord_p(x.get_num(), p) - ord_p(x.get_den(), p);
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int legendre(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (a == 0) return 0;
  // Euler's criterion by square-and-multiply.
  std::int64_t result = 1;
  std::int64_t base = a;
  std::int64_t e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = static_cast<std::int64_t>((__int128)result * base % p);
    base = static_cast<std::int64_t>((__int128)base * base % p);
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

int hilbert_two(std::int64_t x) {
  switch (mod(x, 8)) {
    case 1:
    case 7:
      return 1;
    case 3:
    case 5:
      return -1;
    default:
      return 0;
  }
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, r = mod(a, m);
  while (r != 0) {
    std::int64_t q = g / r;
    std::int64_t t = g - q * r;
    g = r;
    r = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw DomainError("no inverse modulo " + std::to_string(m));
  return mod(x, m);
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::int64_t reduce_mod(const Rational& x, std::int64_t modulus) {
  mpz_class m = static_cast<long>(modulus);
  mpz_class num = x.get_num() % m;
  mpz_class den = x.get_den() % m;
  std::int64_t n = mod(num.get_si(), modulus);
  std::int64_t d = mod(den.get_si(), modulus);
  return static_cast<std::int64_t>((__int128)n * mod_inverse(d, modulus) % modulus);
}

Rational rational_pow(std::int64_t p, int e) {
  mpz_class base = static_cast<long>(p);
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
  Rational r = e >= 0 ? Rational(power) : Rational(mpz_class(1), power);
  r.canonicalize();
  return r;
}

}  // namespace mgonal
