#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mqt/lattice.hpp"
#include "mqt/mqfield.hpp"
#include "mqt/quad.hpp"

namespace mqt {

/// Positive kernels d of a field, ascending. Unit exponent vectors are indexed
/// by these: a unit u with exps e satisfies u^N = zeta * prod eps_d^(N e_d).
std::vector<i64> positive_kernels(const MQField& k);

/// A unit together with its exact exponent vector over the real quadratic
/// fundamental units of its field. Roots of unity are not tracked in exps.
struct Unit {
  MQElement value;
  std::vector<mpq_class> exps;

  const MQField::Ptr& field() const { return value.field(); }
  /// "eps_5", "sqrt(eps_7*eps_35)", "(eps_2^2*eps_7)^(1/4)" and so on (up to torsion).
  std::string describe() const;
};

Unit operator*(const Unit& a, const Unit& b);
Unit inverse(const Unit& u);
Unit power(const Unit& u, long e);
Unit apply(const Unit& u, GaloisElement g);
/// Canonical square root, or none.
std::optional<Unit> sqrt(const Unit& u);
Unit coerce(const Unit& u, const MQField::Ptr& sup);
Unit restrict_to(const Unit& u, const MQField::Ptr& sub);
/// Torsion element as a Unit (zero exponents).
Unit torsion_unit(const MQElement& zeta);

/// eps_d inside k.
Unit quadratic_unit(const MQField::Ptr& k, i64 d, InvariantCache& cache);

struct RootsOfUnity {
  int order;
  MQElement generator;
};
RootsOfUnity roots_of_unity(const MQField::Ptr& k);
/// t with zeta^t == x, if x is a root of unity in <zeta>.
std::optional<int> torsion_exponent(const MQElement& x, const RootsOfUnity& w);

struct UnitGroupDescription {
  MQField::Ptr field;
  int torsion_order = 2;
  MQElement zeta;
  std::vector<Unit> generators;
  std::optional<mpz_class> q_index;

  QMatrix exponent_matrix() const;
};

/// Fundamental units of the maximal real subfield generators: the positive kernels.
MQField::Ptr maximal_real_subfield(const MQField::Ptr& k);

/// FSU of any supported field: recursion through intermediate fields for real
/// fields, E_{K+} W_K for imaginary ones, followed by the square-root search.
UnitGroupDescription fundamental_units(const MQField::Ptr& k, InvariantCache& cache);

UnitGroupDescription fsu_biquadratic(Radicand d1, Radicand d2, InvariantCache& cache);

/// Start from the product of the given subfield unit groups (and W_K) and adjoin
/// square roots until no element of the lattice is a square.
UnitGroupDescription wada_unit_search(const MQField::Ptr& k, const std::vector<UnitGroupDescription>& subfield_fsus,
                                      InvariantCache& cache);

/// One pass of the square search. Returns how many square roots were adjoined.
int adjoin_square_roots(UnitGroupDescription& g);

/// Target = K0(i) with K0 real. Searches for eps with (2 + mu)eps a square in K0.
UnitGroupDescription extend_units_with_i(const UnitGroupDescription& real_fsu, const MQField::Ptr& target);

/// Reduce units to an independent basis by integer row reduction of their
/// exponent vectors; torsion rows are dropped after an exactness check.
std::vector<Unit> reduce_to_basis(std::vector<Unit> units, const RootsOfUnity& w);

/// Order of the group generated by roots of unity of all quadratic subfields.
int quadratic_torsion_order(const MQField& k);

struct UnitIndexReport {
  mpz_class exact;             // from exponent determinant and torsion index
  mpz_class free_index;        // [free part of E_K : product of quadratic units]
  int torsion_index = 1;       // [W_K : roots of unity of the quadratic subfields]
  std::optional<mpz_class> certified;  // from log covolumes, if certification succeeded
  double covolume_ratio = 0;   // midpoint of the certified ball
  mpfr_prec_t precision = 0;
};

/// q(K) by both routes. Throws PrecisionExhausted if the ball route cannot
/// isolate a power of two within 1/4.
UnitIndexReport unit_index(const UnitGroupDescription& fsu, InvariantCache& cache, mpfr_prec_t start = 128);

/// 2-class number via the unit index formula. Only the constants for real
/// degree 4 (1/4), imaginary degree 8 (1/2^5) and imaginary degree 16 (1/2^16)
/// are supported. Throws on a non-integral result.
mpz_class class_number_formula(const MQField& k, const mpz_class& q, const std::function<mpz_class(i64)>& h2);

/// prod u_i^{e_i} (times zeta^t), then the canonical root of the given degree
/// (a power of 2) by repeated square roots. Throws std::domain_error if a root
/// does not exist.
Unit realize(const MQField::Ptr& k, const std::vector<std::pair<Unit, long>>& factors, int root_degree = 1,
             const std::optional<MQElement>& torsion = std::nullopt);

bool same_unit_lattice(const UnitGroupDescription& a, const UnitGroupDescription& b);
bool same_unit_lattice(const UnitGroupDescription& a, const std::vector<Unit>& b);

/// For d > 0 with N(eps_d) = +1 and eps_d = x + y sqrt(d) integral: the factor
/// system x - 1 = c e y1^2, x + 1 = c (d/e) y2^2 with c in {1, 2}.
struct PellCase {
  mpz_class x, y;
  i64 e = 0;
  int c = 1;
  mpz_class y1, y2;
  std::string tag() const;
};
PellCase pell_case_analysis(Radicand d, InvariantCache& cache);

/// Integer witnesses for sqrt(2 eps) expansions of the family units.
struct UnitExpressions {
  mpz_class b1, b2;    // sqrt(2 eps_pq) = b1 sqrt p + b2 sqrt q,      2 = -p b1^2 + q b2^2
  mpz_class y1, y2;    // sqrt(2 eps_2pq) = y1 sqrt(2p) + y2 sqrt q,   2 = -2p y1^2 + q y2^2
  mpz_class d1, d2;    // sqrt(2 eps_2q) = d1 + d2 sqrt(2q),           2 = d1^2 - 2q d2^2
  mpz_class d1p, d2p;  // sqrt(2 eps_q) = d1' + d2' sqrt q,            2 = d1'^2 - q d2'^2
  bool all_hold = false;
  std::string failure;
};
UnitExpressions unit_expressions(i64 p, i64 q, InvariantCache& cache);

}  // namespace mqt
