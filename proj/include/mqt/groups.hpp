#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mqt {

/// A is the Klein four group; Q, D, S are generalized quaternion, dihedral and
/// semidihedral groups of order 2^m.
enum class GroupKind { A, Q, D, S };

std::string to_string(GroupKind k);
GroupKind parse_group_kind(const std::string& s);

/// Element x^a y^e, 0 <= a < 2^(m-1), e in {0, 1}.
struct GroupElement {
  std::uint64_t a = 0;
  int e = 0;
  auto operator<=>(const GroupElement&) const = default;
};

class TwoGroup {
 public:
  /// m == 2 for A, m >= 3 for Q and D, m >= 4 for S; m <= 20.
  TwoGroup(GroupKind kind, int m);

  GroupKind kind() const { return kind_; }
  int m() const { return m_; }
  std::uint64_t order() const { return std::uint64_t{1} << m_; }
  /// Order of x.
  std::uint64_t n() const { return n_; }

  GroupElement x() const { return {1 % n_, 0}; }
  GroupElement y() const { return {0, 1}; }
  GroupElement identity() const { return {}; }

  GroupElement multiply(GroupElement g, GroupElement h) const;
  GroupElement inverse(GroupElement g) const;
  GroupElement power(GroupElement g, std::uint64_t k) const;
  std::uint64_t element_order(GroupElement g) const;
  std::vector<GroupElement> elements() const;
  std::string str() const;
  std::string str(GroupElement g) const;

 private:
  GroupKind kind_;
  int m_;
  std::uint64_t n_;
  std::uint64_t r_;  // y x y^-1 = x^r
  std::uint64_t c_;  // y^2 = x^c
};

/// Sorted element list.
using Subgroup = std::vector<GroupElement>;

Subgroup generated(const TwoGroup& g, const std::vector<GroupElement>& gens);
bool is_subgroup(const TwoGroup& g, const Subgroup& h);

enum class StructureTag { Trivial, Cyclic, Klein, Dihedral, Quaternion, Semidihedral, Abelian, Other };
std::string to_string(StructureTag t);

struct Fingerprint {
  std::uint64_t order = 0;
  std::uint64_t exponent = 0;
  std::uint64_t involutions = 0;
  bool abelian = false;
  StructureTag tag = StructureTag::Other;
};
Fingerprint fingerprint(const TwoGroup& g, const Subgroup& h);

/// All commutators, closed under products.
Subgroup commutator_subgroup(const TwoGroup& g);
Subgroup commutator_subgroup(const TwoGroup& g, const Subgroup& h);

/// Invariant factors of h/n for n normal in h (both abelian quotient assumed), ascending.
std::vector<std::uint64_t> quotient_type(const TwoGroup& g, const Subgroup& h, const Subgroup& n);
std::vector<std::uint64_t> abelianization_type(const TwoGroup& g);

struct IndexTwoSubgroup {
  std::string name;  // "H1", "H2", "H3"
  Subgroup elements;
  Fingerprint fp;
  std::vector<std::uint64_t> abelianization;
};

/// The index 2 subgroups found by brute force, matched to <x>, <x^2, y>, <x^2, xy>.
/// Throws std::logic_error if the brute-force set differs from those three.
std::vector<IndexTwoSubgroup> index_two_subgroups(const TwoGroup& g);

/// Index 2 subgroups of h, found as <Frattini(h), a> for each a outside the
/// Frattini subgroup. Only for h generated by at most two elements.
std::vector<Subgroup> maximal_subgroups(const TwoGroup& g, const Subgroup& h);

struct GroupClaim {
  std::string name;
  bool holds = false;
  std::string detail;
};

/// Every structural statement for G: G' = <x^2>, G/G' of type (2, 2), the H_i
/// table, and uniqueness of <x^4> in G' when |G'| >= 4.
std::vector<GroupClaim> verify_structure(const TwoGroup& g);

}  // namespace mqt
