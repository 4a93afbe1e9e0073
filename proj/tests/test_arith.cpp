#include "doctest.h"
#include "mqt/arith.hpp"
#include "oracles.hpp"

using namespace mqt;

TEST_CASE("is_prime agrees with trial division") {
  for (u64 n = 0; n < 20000; ++n) CHECK(is_prime(n) == oracle::is_prime(static_cast<i64>(n)));
  CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime(3215031751ULL));      // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("squarefree") {
  CHECK(is_squarefree(35));
  CHECK(is_squarefree(1));
  CHECK_FALSE(is_squarefree(20));
  CHECK(is_squarefree(-1));
  CHECK_THROWS_AS(is_squarefree(0), std::invalid_argument);
  CHECK(squarefree_kernel(-8) == -2);
  CHECK(squarefree_kernel(12) == 3);
  CHECK(squarefree_kernel(-36) == -1);
}

TEST_CASE("factorize multiplies back") {
  for (i64 n = 1; n < 3000; ++n) {
    i64 prod = 1;
    i64 last = 0;
    for (auto [p, e] : factorize(n)) {
      CHECK(oracle::is_prime(p));
      CHECK(p > last);
      last = p;
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("jacobi symbol") {
  CHECK(jacobi(2, 5) == -1);
  CHECK(jacobi(2, 7) == 1);
  CHECK(jacobi(5, 7) == -1);
  for (i64 n = 3; n < 200; n += 2)
    for (i64 a = -60; a < 60; ++a) CHECK(jacobi(a, n) == oracle::jacobi(a, n));
}

TEST_CASE("kronecker at 2 and negatives") {
  // (a/2) = 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
  for (i64 a = -40; a < 40; ++a) {
    int want = a % 2 == 0 ? 0 : ((a % 8 + 8) % 8 == 1 || (a % 8 + 8) % 8 == 7) ? 1 : -1;
    CHECK(kronecker(a, 2) == want);
  }
  CHECK(kronecker(-1, -1) == -1);
  CHECK(kronecker(3, -1) == 1);
}

TEST_CASE("sqrt_mod") {
  for (u64 p : {3ULL, 5ULL, 7ULL, 17ULL, 97ULL, 1000003ULL, 1048609ULL})
    for (u64 a = 1; a < 200; ++a) {
      if (oracle::legendre(static_cast<i64>(a % p), static_cast<i64>(p)) != 1) continue;
      u64 r = sqrt_mod(a % p, p);
      CHECK(mulmod(r, r, p) == a % p);
    }
}

TEST_CASE("quartic symbols") {
  CHECK(quartic_2_over_p(OddPrime(17)) == -1);
  CHECK(quartic_2_over_p(OddPrime(73)) == (oracle::powmod(2, 18, 73) == 1 ? 1 : -1));
  CHECK_THROWS(quartic_2_over_p(OddPrime(7)));
  CHECK(quartic_p_over_2(OddPrime(17)) == 1);
  CHECK(quartic_p_over_2(OddPrime(41)) == -1);
  CHECK_THROWS(quartic_p_over_2(OddPrime(3)));
  for (i64 p = 17; p < 2000; p += 8) {
    if (!oracle::is_prime(p)) continue;
    CHECK(quartic_2_over_p(OddPrime(p)) == (oracle::powmod(2, (p - 1) / 4, p) == 1 ? 1 : -1));
    CHECK(quartic_p_over_2(OddPrime(p)) == (((p - 1) / 8) % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("strong types reject bad values") {
  CHECK_THROWS_AS(OddPrime(9), std::invalid_argument);
  CHECK_THROWS_AS(OddPrime(2), std::invalid_argument);
  CHECK_THROWS_AS(Radicand(1), std::invalid_argument);
  CHECK_THROWS_AS(Radicand(12), std::invalid_argument);
  CHECK(Radicand(-1).value() == -1);
}

TEST_CASE("primes_in") {
  auto ps = primes_in(3, 200);
  std::vector<i64> want;
  for (i64 n = 3; n < 200; ++n)
    if (oracle::is_prime(n)) want.push_back(n);
  CHECK(ps == want);
}
