#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mqt {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(u64 n);

/// True iff no prime square divides |n|. Throws on n == 0.
bool is_squarefree(i64 n);

/// Prime factorization of |n| by trial division, primes ascending.
std::vector<std::pair<i64, int>> factorize(i64 n);

/// Squarefree kernel with the sign of n kept: -8 -> -2, 12 -> 3.
i64 squarefree_kernel(i64 n);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

/// Square root of a quadratic residue a modulo an odd prime p (Tonelli-Shanks).
u64 sqrt_mod(u64 a, u64 p);

/// Jacobi symbol (a/n) for odd n > 0.
int jacobi(i64 a, i64 n);

/// Kronecker symbol (a/n) for any n != 0 (extends jacobi to even and negative n).
int kronecker(i64 a, i64 n);

class OddPrime {
 public:
  explicit OddPrime(i64 value);
  i64 value() const { return value_; }
  operator i64() const { return value_; }

 private:
  i64 value_;
};

/// Nonzero squarefree integer naming Q(sqrt(d)); d != 1.
class Radicand {
 public:
  explicit Radicand(i64 d);
  i64 value() const { return d_; }
  operator i64() const { return d_; }
  bool operator==(const Radicand&) const = default;
  auto operator<=>(const Radicand&) const = default;

 private:
  i64 d_;
};

/// (2/p)_4: +1 iff 2^((p-1)/4) == 1 mod p. Requires p == 1 mod 8.
int quartic_2_over_p(OddPrime p);

/// (p/2)_4 := (-1)^((p-1)/8). Requires p == 1 mod 8.
int quartic_p_over_2(OddPrime p);

/// Primes in [lo, hi).
std::vector<i64> primes_in(i64 lo, i64 hi);

}  // namespace mqt
