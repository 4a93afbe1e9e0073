#pragma once

#include <map>
#include <string>
#include <vector>

#include "mqt/arith.hpp"
#include "mqt/mqfield.hpp"

namespace mqt {

enum class FamilyKind { COND1, COND2, COND3 };

std::string to_string(FamilyKind k);
FamilyKind parse_family_kind(const std::string& s);  // "1", "COND1", ...

/// One family member. For COND3 only p is used (it is p') and q == 0.
struct FamilyInstance {
  FamilyKind kind;
  i64 p;
  i64 q = 0;
  auto operator<=>(const FamilyInstance&) const = default;
  std::string id() const;
};

/// Fi is Q(sqrt p, sqrt q, i), whose class number is odd.
enum class FieldLabel { L, Lstar, F, K, k, Kplus, KK, Fi };

std::string to_string(FieldLabel l);

struct FieldDescriptor {
  std::vector<Radicand> radicands;
  FieldLabel label;

  MQField::Ptr field() const;
  /// Same subgroup of Q*/Q*^2, whatever the chosen generators.
  bool same_field_as(const FieldDescriptor& o) const;
  std::string str() const;
};

bool check_condition_1(OddPrime p, OddPrime q);
bool check_condition_2(OddPrime p, OddPrime q);
bool check_condition_3(OddPrime pp);
bool satisfies(const FamilyInstance& inst);

/// Every pair and p' strictly below bound meeting one of the conditions, sorted by
/// (kind, p, q).
std::vector<FamilyInstance> enumerate_families(i64 bound);

std::map<FieldLabel, FieldDescriptor> fields_for_family(const FamilyInstance& inst);

}  // namespace mqt
