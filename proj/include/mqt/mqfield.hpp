#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mqt/arith.hpp"
#include "mqt/ball.hpp"

namespace mqt {

/// Parity vectors of squarefree kernels over a common prime list, -1 counted
/// as a prime. Used to compare subgroups of Q*/Q*^2.
class SquareClassSpace {
 public:
  explicit SquareClassSpace(const std::vector<i64>& values);
  u64 vector_of(i64 v) const;  // throws if v has a prime outside the list
  i64 value_of(u64 bits) const;
  bool covers(i64 v) const;

 private:
  std::vector<i64> primes_;  // primes_[0] == -1
};

/// Rank over GF(2) of the classes of values in Q*/Q*^2.
int square_class_rank(const std::vector<i64>& values);

/// Q(sqrt d_1, ..., sqrt d_n), n <= 5. Generators are normalized to squarefree
/// kernels, sorted ascending and must be independent modulo squares.
///
/// Internally elements use the product basis P_S = prod_{i in S} sqrt(d_i) where
/// sqrt(d) is the positive real root for d > 0 and i*sqrt(|d|) for d < 0. The
/// external basis is b_S = sqrt(k_S) with k_S the signed kernel of prod d_i.
class MQField {
 public:
  using Ptr = std::shared_ptr<const MQField>;
  static Ptr make(std::vector<i64> generators);
  static Ptr rationals();

  const std::vector<i64>& generators() const { return gens_; }
  int rank() const { return static_cast<int>(gens_.size()); }
  unsigned degree() const { return 1u << gens_.size(); }
  bool is_real() const;
  /// Number of real embeddings: the degree if every generator is positive, else 0.
  unsigned signature() const { return is_real() ? degree() : 0; }

  /// Signed squarefree kernel of prod_{i in S} d_i.
  i64 kernel(unsigned mask) const { return kernels_[mask]; }
  /// P_S * P_T = product_factor(S & T) * P_{S ^ T}.
  const mpz_class& product_factor(unsigned mask) const { return prod_[mask]; }
  /// P_S = basis_scale(S) * sqrt(k_S).
  const mpz_class& basis_scale(unsigned mask) const { return scale_[mask]; }
  /// Mask of generators whose product is d modulo squares, if d is in the field.
  std::optional<unsigned> mask_of(i64 d) const;
  /// Flip mask of complex conjugation under the distinguished embedding.
  unsigned conjugation_mask() const;

  /// Field generated by the first rank()-1 generators.
  const Ptr& prefix() const { return prefix_; }

  bool operator==(const MQField& o) const { return gens_ == o.gens_; }
  std::string str() const;

 private:
  MQField() = default;
  std::vector<i64> gens_;
  std::vector<i64> kernels_;
  std::vector<mpz_class> prod_;
  std::vector<mpz_class> scale_;
  Ptr prefix_;
};

bool same_field(const MQField::Ptr& a, const MQField::Ptr& b);
/// True iff every generator of sub lies in the square-class span of sup.
bool is_subfield(const MQField& sub, const MQField& sup);

/// Element of (Z/2)^n; bit i flips sqrt(d_i).
struct GaloisElement {
  unsigned flip = 0;
  GaloisElement operator*(GaloisElement o) const { return {flip ^ o.flip}; }
  bool operator==(const GaloisElement&) const = default;
  /// +-1 per generator.
  std::vector<int> signs(int n) const;
};

/// The subgroup of Gal(sup/Q) fixing sub pointwise.
std::vector<GaloisElement> fixing_subgroup(const MQField& sup, const MQField& sub);

class MQElement {
 public:
  MQElement() = default;
  explicit MQElement(MQField::Ptr field);  // zero
  MQElement(MQField::Ptr field, const mpq_class& q);
  /// From product-basis integer numerators over a common denominator.
  MQElement(MQField::Ptr field, std::vector<mpz_class> num, mpz_class den);

  static MQElement one(MQField::Ptr field) { return MQElement(std::move(field), mpq_class(1)); }
  /// The distinguished sqrt(d) for a radicand d in the square-class span.
  static MQElement sqrt_of(MQField::Ptr field, i64 d);
  /// (a + b sqrt d) / den.
  static MQElement quadratic(MQField::Ptr field, i64 d, const mpz_class& a, const mpz_class& b,
                             const mpz_class& den);
  /// Coordinates over the normalized basis sqrt(k_S), S = 0 .. degree-1.
  static MQElement from_coords(MQField::Ptr field, const std::vector<mpq_class>& coords);

  const MQField::Ptr& field() const { return field_; }
  std::vector<mpq_class> coords() const;
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<mpq_class> as_rational() const;

  friend MQElement operator+(const MQElement& x, const MQElement& y);
  friend MQElement operator-(const MQElement& x, const MQElement& y);
  friend MQElement operator*(const MQElement& x, const MQElement& y);
  friend MQElement operator/(const MQElement& x, const MQElement& y) { return x * y.inverse(); }
  MQElement operator-() const;
  MQElement operator*(const mpq_class& q) const;
  bool operator==(const MQElement& o) const;

  MQElement inverse() const;
  MQElement pow(long e) const;
  MQElement apply(GaloisElement g) const;
  mpq_class norm_to_q() const;
  bool is_integral() const;
  bool is_unit() const;

  /// Some y with y*y == *this, or none. Exact.
  std::optional<MQElement> sqrt_any() const;
  /// The square root that is positive (or has positive real part, then positive
  /// imaginary part) at the distinguished embedding.
  std::optional<MQElement> sqrt() const;

  /// Image under the distinguished embedding composed with g.
  ComplexBall embed(GaloisElement g, mpfr_prec_t prec) const;
  ComplexBall embed(mpfr_prec_t prec) const { return embed({}, prec); }

  /// Split x = a + b sqrt(d_last) with a, b in the prefix field.
  std::pair<MQElement, MQElement> split() const;
  static MQElement join(const MQField::Ptr& field, const MQElement& a, const MQElement& b);

  /// "(-1,2,5,7):c_0,c_1,..." with coordinates over the normalized basis.
  std::string serialize() const;
  static MQElement parse(const std::string& s);
  /// Human-readable sum such as "3/2 + 1/2*sqrt(5)".
  std::string str() const;

 private:
  void normalize();
  MQField::Ptr field_;
  std::vector<mpz_class> num_;
  mpz_class den_ = 1;
};

/// Product of the conjugates of x over a subgroup; stays in x's field.
MQElement norm_to_subfield(const MQElement& x, const std::vector<GaloisElement>& subgroup);
/// Norm from x's field down to sub, returned as an element of sub.
MQElement relative_norm(const MQElement& x, const MQField::Ptr& sub);
/// Map an element of a subfield into a larger field.
MQElement coerce(const MQElement& x, const MQField::Ptr& sup);
/// Map an element known to lie in sub into sub; throws std::domain_error otherwise.
MQElement restrict_to(const MQElement& x, const MQField::Ptr& sub);

/// Sign of the real part at the distinguished embedding, exact when it is zero.
int real_part_sign(const MQElement& x, mpfr_prec_t start = 128);
/// Choose between y and -y following the canonical root convention.
MQElement canonical_sign(const MQElement& y);

/// Quadratic characters of x at fixed primes of its field, one bit per
/// homomorphism (set for a non-residue). Multiplicative: chi(xy) = chi(x) ^ chi(y),
/// and a square has chi = 0. nullopt when some image is 0.
std::optional<u64> quadratic_characters(const MQElement& x);

}  // namespace mqt
