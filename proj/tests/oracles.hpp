#pragma once

// Slow, obviously-correct reference computations used only by the tests.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

namespace oracle {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  mpz_class r;
  mpz_class B = static_cast<long>(b), E = static_cast<long>(e), M = static_cast<long>(m);
  mpz_powm(r.get_mpz_t(), B.get_mpz_t(), E.get_mpz_t(), M.get_mpz_t());
  return r.get_si();
}

// Legendre symbol by Euler's criterion, p an odd prime.
inline int legendre(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// Jacobi symbol as a product of Legendre symbols over the factorization of n.
inline int jacobi(std::int64_t a, std::int64_t n) {
  int r = 1;
  for (std::int64_t p = 3; n > 1; p += 2) {
    while (n % p == 0) {
      r *= legendre(a, p);
      n /= p;
    }
  }
  return r;
}

// Number of reduced primitive positive definite forms of discriminant D < 0.
inline long definite_class_number(std::int64_t D) {
  long h = 0;
  for (std::int64_t a = 1; 3 * a * a <= -D; ++a)
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      std::int64_t num = b * b - D;
      if (num % (4 * a)) continue;
      std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      ++h;
    }
  return h;
}

inline std::int64_t fundamental_disc(std::int64_t d) {
  std::int64_t m = ((d % 4) + 4) % 4;
  return m == 1 ? d : 4 * d;
}

inline long two_part(long n) {
  long t = 1;
  while (n % 2 == 0) {
    n /= 2;
    t *= 2;
  }
  return t;
}

// Smallest unit > 1 of the maximal order of Q(sqrt d) by scanning b: returns
// (a, b, den) with eps = (a + b sqrt d) / den.
inline std::tuple<mpz_class, mpz_class, int> brute_fundamental_unit(std::int64_t d, std::int64_t max_b = 1000000) {
  const bool half = ((d % 4) + 4) % 4 == 1;
  const int den = half ? 2 : 1;
  const std::int64_t k = half ? 4 : 1;
  for (std::int64_t b = 1; b <= max_b; ++b) {
    for (int s : {-1, 1}) {
      mpz_class t = mpz_class(static_cast<long>(d)) * b * b + s * k;
      if (t <= 0) continue;
      mpz_class a;
      if (mpz_perfect_square_p(t.get_mpz_t())) {
        mpz_sqrt(a.get_mpz_t(), t.get_mpz_t());
        return {a, mpz_class(static_cast<long>(b)), den};
      }
    }
  }
  return {0, 0, 0};
}

inline double value(const mpz_class& a, const mpz_class& b, int den, std::int64_t d) {
  return (a.get_d() + b.get_d() * std::sqrt(static_cast<double>(d))) / den;
}

}  // namespace oracle
