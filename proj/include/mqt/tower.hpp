#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mqt/family.hpp"
#include "mqt/units.hpp"

namespace mqt {

/// CYCLIC is used for fields whose 2-class group is cyclic (their tower stops
/// at the first step and G is that class group).
enum class GroupFamily { ABELIAN_22, Q, D, S, CYCLIC };
std::string to_string(GroupFamily f);

enum class Taussky { A, B };
using TausskyFlags = std::array<std::optional<Taussky>, 3>;
std::string flags_str(const std::array<int, 3>& counts, const TausskyFlags& flags);

/// Raised when computed data cannot be reconciled with a table row or with the
/// predicted family. The message carries the evidence.
struct TowerContradiction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A row of the capitulation table: kernel orders with optional A/B tags, the
/// group and the allowed order exponents.
struct TableRow {
  std::array<int, 3> counts;
  TausskyFlags flags;
  GroupFamily family;
  int min_exponent;
  std::optional<int> exact_exponent;
  std::string label;  // "(2,2)", "Q_3", "D_m, m>=3", ...

  bool allows_exponent(int e) const { return exact_exponent ? e == *exact_exponent : e >= min_exponent; }
};
const std::vector<TableRow>& capitulation_table();

/// Rows consistent with the counts (in any order) and with whichever flags are
/// given. Throws TowerContradiction if none is.
std::vector<TableRow> classify_from_table(const std::array<int, 3>& counts, const TausskyFlags& flags = {});

struct TowerClassification {
  FieldDescriptor base_field;
  GroupFamily group_family;
  int order_exponent = 0;
  std::vector<int> cap_counts;     // empty for cyclic class groups
  std::vector<bool> computed;      // per count: computed from units or cited
  TausskyFlags flags;              // cited
  std::vector<GroupFamily> candidates_without_flags;
  int tower_length = 1;

  std::string name() const;  // "Q_3", "D_4", "(2,2)", "Z/8"
};

struct NormIndexReport {
  FieldDescriptor upper, lower;
  std::vector<Unit> norms;  // torsion generator first, then the FSU of upper
  mpz_class index;
  int cap_count = 0;
  std::string evidence() const;
};

/// Exact norms (with exponent vectors) of the torsion generator and every FSU
/// member of upper into lower, which must be an index 2 subfield.
std::vector<Unit> norm_units(const UnitGroupDescription& upper_fsu, const MQField::Ptr& lower);
std::vector<MQElement> norm_generators(const UnitGroupDescription& upper_fsu, const MQField::Ptr& lower);

/// [E_lower : <norm_images>] where each image is written as zeta^t prod f_j^a_j
/// over the lower FSU. Throws std::logic_error if an image is not a unit of
/// lower or the images have smaller rank.
mpz_class norm_unit_index(const UnitGroupDescription& lower_fsu, const std::vector<Unit>& norm_images);

NormIndexReport capitulation_count(const FieldDescriptor& upper, const FieldDescriptor& lower, InvariantCache& cache);

/// [ext : base] * h2(ext).
mpz_class order_of_G(const FieldDescriptor& base, const FieldDescriptor& abelian_ext, const mpz_class& h2_ext);

struct TowerEdge {
  std::string lower, upper;
  mpz_class degree;
};

struct FamilyClassification {
  FamilyInstance instance;
  int m = 0;  // h2(-2q) = 2^m; 0 for COND3
  std::map<FieldLabel, TowerClassification> groups;
  std::vector<NormIndexReport> norm_reports;
  std::map<FieldLabel, mpz_class> h2;        // class number formula values
  std::map<FieldLabel, mpz_class> q_index;   // unit indices used for them
  std::vector<TowerEdge> chain;              // empty for COND3
  std::vector<std::string> contradictions;
};

/// Runs units, norms, capitulation counts, the table and the order formula for
/// one family member. Mismatches are recorded in contradictions, never dropped.
FamilyClassification classify_family_instance(const FamilyInstance& inst, InvariantCache& cache,
                                              mpfr_prec_t precision_start = 128);

/// Degree chain k < {K, L, F} < L* < L^(1) < L*^(1) as text.
std::string render_tower(const FamilyClassification& c);

}  // namespace mqt
