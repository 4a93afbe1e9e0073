#include "mqt/arith.hpp"

#include <cstdlib>
#include <string>

namespace mqt {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is a proven witness set for all n < 2^64.
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    u64 x = powmod(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n == 0) throw std::invalid_argument("factorize: zero");
  u64 m = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
  std::vector<std::pair<i64, int>> out;
  for (u64 p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.emplace_back(static_cast<i64>(p), e);
  }
  if (m > 1) out.emplace_back(static_cast<i64>(m), 1);
  return out;
}

bool is_squarefree(i64 n) {
  if (n == 0) throw std::invalid_argument("is_squarefree: zero");
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

i64 squarefree_kernel(i64 n) {
  if (n == 0) throw std::invalid_argument("squarefree_kernel: zero");
  i64 k = 1;
  for (auto [p, e] : factorize(n)) {
    if (e & 1) k *= p;
  }
  return n < 0 ? -k : k;
}

int jacobi(i64 a, i64 n) {
  if (n <= 0 || (n & 1) == 0) throw std::invalid_argument("jacobi: n must be odd and positive");
  i64 r = a % n;
  if (r < 0) r += n;
  u64 x = static_cast<u64>(r), m = static_cast<u64>(n);
  int t = 1;
  while (x != 0) {
    while ((x & 1) == 0) {
      x >>= 1;
      u64 mm = m & 7;
      if (mm == 3 || mm == 5) t = -t;
    }
    std::swap(x, m);
    if ((x & 3) == 3 && (m & 3) == 3) t = -t;
    x %= m;
  }
  return m == 1 ? t : 0;
}

int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int t = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) t = -t;
  }
  while ((n & 1) == 0) {
    n >>= 1;
    if ((a & 1) == 0) return 0;
    i64 am = ((a % 8) + 8) % 8;
    if (am == 3 || am == 5) t = -t;
  }
  return t * jacobi(a, n);
}

u64 sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (powmod(a, (p - 1) / 2, p) != 1) throw std::domain_error("sqrt_mod: non-residue");
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  u64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 c = powmod(z, q, p);
  u64 x = powmod(a, (q + 1) / 2, p);
  u64 t = powmod(a, q, p);
  int m = s;
  while (t != 1) {
    int i = 0;
    u64 tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    x = mulmod(x, b, p);
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    m = i;
  }
  return x;
}

OddPrime::OddPrime(i64 value) : value_(value) {
  if (value < 3 || !is_prime(static_cast<u64>(value)))
    throw std::invalid_argument("not an odd prime: " + std::to_string(value));
}

Radicand::Radicand(i64 d) : d_(d) {
  if (d == 0 || d == 1 || !is_squarefree(d))
    throw std::invalid_argument("not a radicand: " + std::to_string(d));
}

int quartic_2_over_p(OddPrime p) {
  u64 v = static_cast<u64>(p.value());
  if (v % 8 != 1) throw std::invalid_argument("quartic symbol (2/p)_4 needs p = 1 mod 8");
  u64 r = powmod(2, (v - 1) / 4, v);
  if (r == 1) return 1;
  if (r == v - 1) return -1;
  throw std::logic_error("2^((p-1)/4) is not +-1 mod p");
}

int quartic_p_over_2(OddPrime p) {
  i64 v = p.value();
  if (v % 8 != 1) throw std::invalid_argument("quartic symbol (p/2)_4 needs p = 1 mod 8");
  return ((v - 1) / 8) % 2 == 0 ? 1 : -1;
}

std::vector<i64> primes_in(i64 lo, i64 hi) {
  std::vector<i64> out;
  for (i64 n = lo < 2 ? 2 : lo; n < hi; ++n) {
    if (is_prime(static_cast<u64>(n))) out.push_back(n);
  }
  return out;
}

}  // namespace mqt
