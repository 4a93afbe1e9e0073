#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mqt/units.hpp"

namespace mqt {

/// Symbolic radicands of a family: "2", "p", "q", "2p", "2q", "pq", "2pq".
i64 radicand_of(const std::string& sym, i64 p, i64 q);

enum class TorsionFactor { None, MinusOne, I, Zeta8 };

/// sign * (t * prod eps_d^n_d)^(1/root), canonical root. sign 0 means the sign
/// is not predicted; it is recorded under sign_var instead.
struct UnitFormula {
  int sign = 1;
  std::string sign_var;
  std::vector<std::pair<std::string, long>> factors;
  int root = 1;
  TorsionFactor torsion = TorsionFactor::None;

  std::string str() const;
  /// The value without the sign, in field k.
  Unit base(const MQField::Ptr& k, i64 p, i64 q, InvariantCache& cache) const;
};

struct CellCheck {
  std::string row, column;
  std::string expected;  // formula text
  std::string actual;    // element text
  bool ok = false;
  std::string sign_var;
  int realized_sign = 0;  // +-1 once compared
};

struct TableCheck {
  std::vector<CellCheck> cells;
  std::vector<std::pair<std::string, int>> signs;  // realized sign variables
  bool all_ok = false;
  int failures() const;
};

/// The units eps_2, eps_p, eps_pq, sqrt(eps_q), sqrt(eps_2q), sqrt(eps_pq),
/// sqrt(eps_2pq), R8 and R9 of Q(sqrt 2, sqrt p, sqrt q) under sigma_1..3 and
/// the norm-like maps 1 + sigma. Blank cells are omitted.
TableCheck galois_action_table(i64 p, i64 q, InvariantCache& cache);

enum class NormTarget { L, F };
/// Norms from L* = Q(sqrt 2, sqrt p, sqrt q, i) to L_pq or F_pq of the units
/// of L*: sqrt(eps_q), sqrt(eps_pq), eps_2, zeta_8, eps_p, R8, R10, R9.
TableCheck norm_table(i64 p, i64 q, NormTarget target, InvariantCache& cache);

struct FsuClaim {
  std::string field;
  std::string expected;
  std::string computed;
  bool holds = false;
  std::string detail;
};

/// Predicted unit groups of the subfields of L* for a COND1 pair, compared as
/// lattices (and torsion orders) with the computed ones.
std::vector<FsuClaim> fsu_claims(i64 p, i64 q, InvariantCache& cache);

struct H2Check {
  i64 d;
  std::string expected;
  mpz_class actual;
  bool ok = false;
};
/// The fifteen 2-class numbers of the quadratic subfields of L* for a COND1 pair.
std::vector<H2Check> quadratic_h2_table(i64 p, i64 q, InvariantCache& cache);

}  // namespace mqt
