#pragma once

#include <gmpxx.h>

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mqt/arith.hpp"

namespace mqt {

/// (a + b sqrt(d)) / den, den in {1, 2}.
struct QuadUnit {
  mpz_class a;
  mpz_class b;
  int den = 1;
  bool operator==(const QuadUnit&) const = default;
};

struct QuadInvariants {
  i64 d = 0;
  i64 disc = 0;
  std::optional<QuadUnit> eps;  // present iff d > 0
  std::optional<int> eps_norm;  // present iff d > 0
  mpz_class h;
  mpz_class h2;
  bool operator==(const QuadInvariants&) const = default;
};

i64 fundamental_discriminant(Radicand d);

/// Smallest unit > 1 of the maximal order of Q(sqrt d), d > 1.
QuadUnit fundamental_unit(Radicand d);

/// Norm of a QuadUnit; throws if it is not +-1.
int unit_norm(Radicand d, const QuadUnit& u);

/// Class number of the maximal order: reduced definite forms for d < 0,
/// cycles of reduced indefinite forms for d > 0.
mpz_class class_number(Radicand d);

/// Number of proper equivalence classes of primitive forms of discriminant D.
/// For D > 0 this is the narrow class number.
mpz_class form_class_number(i64 disc);

mpz_class two_part(const mpz_class& n);
mpz_class two_class_number(Radicand d);

/// m with h_2(-2q) = 2^m. Throws std::domain_error if m < 2.
int m_exponent(OddPrime q);

QuadInvariants compute_invariants(Radicand d);

/// d,disc,eps.a,eps.b,eps.den,eps_norm,h,h2 with '-' for absent fields.
std::string serialize(const QuadInvariants& inv);
QuadInvariants parse_invariants(const std::string& line);

/// Thread-safe memo of QuadInvariants with an optional append-only backing file.
/// Conflicting values for one key raise std::runtime_error.
class InvariantCache {
 public:
  InvariantCache() = default;
  explicit InvariantCache(std::filesystem::path path);

  const QuadInvariants& get(i64 d);
  mpz_class h2(i64 d) { return get(d).h2; }
  void insert(const QuadInvariants& inv);
  /// Append records computed since construction to the backing file.
  void flush();
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::map<i64, QuadInvariants> table_;
  std::vector<i64> pending_;
  std::optional<std::filesystem::path> path_;
};

}  // namespace mqt
