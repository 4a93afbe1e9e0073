#include "mqt/groups.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mqt {

std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::A: return "A";
    case GroupKind::Q: return "Q";
    case GroupKind::D: return "D";
    case GroupKind::S: return "S";
  }
  return "?";
}

GroupKind parse_group_kind(const std::string& s) {
  if (s == "A" || s == "a") return GroupKind::A;
  if (s == "Q" || s == "q") return GroupKind::Q;
  if (s == "D" || s == "d") return GroupKind::D;
  if (s == "S" || s == "s") return GroupKind::S;
  throw std::invalid_argument("unknown group kind '" + s + "'");
}

TwoGroup::TwoGroup(GroupKind kind, int m) : kind_(kind), m_(m) {
  const int lo = kind == GroupKind::A ? 2 : kind == GroupKind::S ? 4 : 3;
  const int hi = kind == GroupKind::A ? 2 : 20;
  if (m < lo || m > hi) throw std::invalid_argument("TwoGroup: m out of range for " + to_string(kind));
  n_ = std::uint64_t{1} << (m - 1);
  switch (kind) {
    case GroupKind::A: r_ = 1; c_ = 0; break;
    case GroupKind::D: r_ = n_ - 1; c_ = 0; break;
    case GroupKind::Q: r_ = n_ - 1; c_ = n_ / 2; break;
    case GroupKind::S: r_ = n_ / 2 - 1; c_ = 0; break;
  }
}

GroupElement TwoGroup::multiply(GroupElement g, GroupElement h) const {
  // x^a y^e x^b y^f = x^(a + b r^e) y^(e + f), with y^2 = x^c.
  std::uint64_t b = g.e ? (h.a * r_) % n_ : h.a;
  std::uint64_t a = (g.a + b) % n_;
  int e = g.e + h.e;
  if (e == 2) {
    a = (a + c_) % n_;
    e = 0;
  }
  return {a, e};
}

GroupElement TwoGroup::power(GroupElement g, std::uint64_t k) const {
  GroupElement r = identity();
  while (k) {
    if (k & 1) r = multiply(r, g);
    g = multiply(g, g);
    k >>= 1;
  }
  return r;
}

GroupElement TwoGroup::inverse(GroupElement g) const { return power(g, element_order(g) - 1); }

std::uint64_t TwoGroup::element_order(GroupElement g) const {
  std::uint64_t k = 1;
  GroupElement cur = g;
  while (cur != identity()) {
    cur = multiply(cur, g);
    ++k;
  }
  return k;
}

std::vector<GroupElement> TwoGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order());
  for (std::uint64_t a = 0; a < n_; ++a) out.push_back({a, 0});
  for (std::uint64_t a = 0; a < n_; ++a) out.push_back({a, 1});
  std::sort(out.begin(), out.end());
  return out;
}

std::string TwoGroup::str() const { return kind_ == GroupKind::A ? "A" : to_string(kind_) + "_" + std::to_string(m_); }

std::string TwoGroup::str(GroupElement g) const {
  if (g == identity()) return "1";
  std::string s;
  if (g.a) s = g.a == 1 ? "x" : "x^" + std::to_string(g.a);
  if (g.e) s += "y";
  return s;
}

namespace {

Subgroup closure(const TwoGroup& g, const std::vector<GroupElement>& gens) {
  std::set<GroupElement> seen{g.identity()};
  std::vector<GroupElement> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (auto h : frontier)
      for (auto s : gens) {
        auto p = g.multiply(h, s);
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

Subgroup generated(const TwoGroup& g, const std::vector<GroupElement>& gens) {
  // Keep only generators that enlarge the group so far; a 2-group of order 2^m
  // needs at most m of them.
  Subgroup cur{g.identity()};
  std::vector<GroupElement> chosen;
  for (auto s : gens) {
    if (std::binary_search(cur.begin(), cur.end(), s)) continue;
    chosen.push_back(s);
    cur = closure(g, chosen);
  }
  return cur;
}

bool is_subgroup(const TwoGroup& g, const Subgroup& h) {
  if (!std::binary_search(h.begin(), h.end(), g.identity())) return false;
  for (auto a : h)
    for (auto b : h)
      if (!std::binary_search(h.begin(), h.end(), g.multiply(a, b))) return false;
  return true;
}

std::string to_string(StructureTag t) {
  switch (t) {
    case StructureTag::Trivial: return "trivial";
    case StructureTag::Cyclic: return "cyclic";
    case StructureTag::Klein: return "klein";
    case StructureTag::Dihedral: return "dihedral";
    case StructureTag::Quaternion: return "quaternion";
    case StructureTag::Semidihedral: return "semidihedral";
    case StructureTag::Abelian: return "abelian";
    case StructureTag::Other: return "other";
  }
  return "?";
}

Fingerprint fingerprint(const TwoGroup& g, const Subgroup& h) {
  Fingerprint fp;
  fp.order = h.size();
  fp.exponent = 1;
  for (auto a : h) {
    auto o = g.element_order(a);
    fp.exponent = std::max(fp.exponent, o);
    if (o == 2) ++fp.involutions;
  }
  fp.abelian = true;
  for (auto a : h)
    for (auto b : h)
      if (g.multiply(a, b) != g.multiply(b, a)) {
        fp.abelian = false;
        break;
      }
  const auto n = fp.order;
  if (n == 1) fp.tag = StructureTag::Trivial;
  else if (fp.exponent == n) fp.tag = StructureTag::Cyclic;
  else if (n == 4) fp.tag = StructureTag::Klein;
  else if (fp.abelian) fp.tag = StructureTag::Abelian;
  else if (fp.exponent == n / 2) {
    // Nonabelian with a cyclic subgroup of index 2.
    if (fp.involutions == 1) fp.tag = StructureTag::Quaternion;
    else if (fp.involutions == n / 2 + 1) fp.tag = StructureTag::Dihedral;
    else if (n >= 16 && fp.involutions == n / 4 + 1) fp.tag = StructureTag::Semidihedral;
  }
  return fp;
}

Subgroup commutator_subgroup(const TwoGroup& g, const Subgroup& h) {
  std::set<GroupElement> comms;
  std::vector<GroupElement> inv;
  for (auto a : h) inv.push_back(g.inverse(a));
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j)
      comms.insert(g.multiply(g.multiply(inv[i], inv[j]), g.multiply(h[i], h[j])));
  return generated(g, {comms.begin(), comms.end()});
}

Subgroup commutator_subgroup(const TwoGroup& g) { return commutator_subgroup(g, g.elements()); }

std::vector<std::uint64_t> quotient_type(const TwoGroup& g, const Subgroup& h, const Subgroup& n) {
  auto in_n = [&](GroupElement a) { return std::binary_search(n.begin(), n.end(), a); };
  if (h.size() % n.size()) throw std::invalid_argument("quotient_type: n is not a subgroup of h");
  const std::uint64_t q = h.size() / n.size();
  // c[j] = number of cosets killed by 2^j; each element stands for |n| of them.
  std::vector<std::uint64_t> c;
  for (std::uint64_t e = 1;; e *= 2) {
    std::uint64_t cnt = 0;
    for (auto a : h)
      if (in_n(g.power(a, e))) ++cnt;
    c.push_back(cnt / n.size());
    if (c.back() == q) break;
  }
  // Factors of order >= 2^(j+1): log2(c[j+1] / c[j]).
  std::vector<std::uint64_t> out;
  for (std::size_t j = 0; j + 1 < c.size(); ++j) {
    int ge = std::countr_zero(c[j + 1] / c[j]);
    int ge_next = j + 2 < c.size() ? std::countr_zero(c[j + 2] / c[j + 1]) : 0;
    for (int t = 0; t < ge - ge_next; ++t) out.push_back(std::uint64_t{2} << j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> abelianization_type(const TwoGroup& g) {
  return quotient_type(g, g.elements(), commutator_subgroup(g));
}

std::vector<Subgroup> maximal_subgroups(const TwoGroup& g, const Subgroup& h) {
  // Frattini subgroup = squares and commutators; maximal subgroups contain it.
  std::vector<GroupElement> sq;
  for (auto a : h) sq.push_back(g.multiply(a, a));
  auto comm = commutator_subgroup(g, h);
  sq.insert(sq.end(), comm.begin(), comm.end());
  Subgroup phi = generated(g, sq);
  if (h.size() > 4 * phi.size()) throw std::invalid_argument("maximal_subgroups: more than two generators");
  if (h.size() == phi.size()) return {};
  if (h.size() == 2 * phi.size()) return {phi};  // cyclic modulo Frattini
  std::set<Subgroup> found;
  for (auto a : h) {
    if (std::binary_search(phi.begin(), phi.end(), a)) continue;
    auto gens = phi;
    gens.push_back(a);
    Subgroup s = generated(g, gens);
    if (s.size() * 2 == h.size()) found.insert(s);
  }
  return {found.begin(), found.end()};
}

std::vector<IndexTwoSubgroup> index_two_subgroups(const TwoGroup& g) {
  const auto x = g.x(), y = g.y();
  const auto x2 = g.multiply(x, x);
  std::vector<IndexTwoSubgroup> named{
      {"H1", generated(g, {x}), {}, {}},
      {"H2", generated(g, {x2, y}), {}, {}},
      {"H3", generated(g, {x2, g.multiply(x, y)}), {}, {}},
  };
  auto brute = maximal_subgroups(g, g.elements());
  std::set<Subgroup> a(brute.begin(), brute.end()), b;
  for (const auto& h : named) b.insert(h.elements);
  if (a != b || a.size() != 3)
    throw std::logic_error("index_two_subgroups: brute force disagrees with <x>, <x^2,y>, <x^2,xy> in " + g.str());
  for (auto& h : named) {
    h.fp = fingerprint(g, h.elements);
    h.abelianization = quotient_type(g, h.elements, commutator_subgroup(g, h.elements));
  }
  return named;
}

namespace {

std::string type_str(const std::vector<std::uint64_t>& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? ", " : "") << t[i];
  os << ")";
  return os.str();
}

}  // namespace

std::vector<GroupClaim> verify_structure(const TwoGroup& g) {
  std::vector<GroupClaim> out;
  const auto x = g.x();
  const auto x2 = g.multiply(x, x);
  const auto x4 = g.multiply(x2, x2);
  const auto elems = g.elements();

  out.push_back({"order", elems.size() == g.order(), std::to_string(elems.size()) + " normal forms"});

  auto gp = commutator_subgroup(g);
  auto expect = generated(g, {x2});
  out.push_back({"commutator subgroup is <x^2>", gp == expect && fingerprint(g, gp).tag != StructureTag::Other &&
                                                      (gp.size() == 1 || fingerprint(g, gp).tag == StructureTag::Cyclic),
                 "|G'| = " + std::to_string(gp.size())});

  auto ab = abelianization_type(g);
  out.push_back({"G/G' of type (2, 2)", ab == std::vector<std::uint64_t>{2, 2}, type_str(ab)});

  auto hs = index_two_subgroups(g);
  using T = StructureTag;
  std::vector<T> want;
  bool check_quotients = false;
  const int m = g.m();
  switch (g.kind()) {
    case GroupKind::A: want = {T::Cyclic, T::Cyclic, T::Cyclic}; break;
    case GroupKind::Q:
      want = m == 3 ? std::vector<T>{T::Cyclic, T::Cyclic, T::Cyclic} : std::vector<T>{T::Cyclic, T::Quaternion, T::Quaternion};
      check_quotients = m > 3;
      break;
    case GroupKind::D:
      want = m == 3 ? std::vector<T>{T::Cyclic, T::Klein, T::Klein} : std::vector<T>{T::Cyclic, T::Dihedral, T::Dihedral};
      check_quotients = m > 3;
      break;
    case GroupKind::S:
      want = {T::Cyclic, T::Dihedral, T::Quaternion};
      check_quotients = true;
      break;
  }
  std::ostringstream tags;
  bool ok = true;
  for (std::size_t i = 0; i < 3; ++i) {
    tags << (i ? ", " : "") << hs[i].name << " " << to_string(hs[i].fp.tag) << " of order " << hs[i].fp.order;
    ok = ok && hs[i].fp.tag == want[i] && hs[i].fp.order * 2 == g.order();
  }
  out.push_back({"H_i structure table", ok, tags.str()});

  if (check_quotients) {
    bool q_ok = true;
    std::string d;
    for (std::size_t i = 1; i < 3; ++i) {
      q_ok = q_ok && hs[i].abelianization == std::vector<std::uint64_t>{2, 2};
      d += hs[i].name + "/" + hs[i].name + "' " + type_str(hs[i].abelianization) + " ";
    }
    out.push_back({"H_i/H_i' of type (2, 2) for i = 2, 3", q_ok, d});
  }

  if (gp.size() >= 4) {
    auto subs = maximal_subgroups(g, gp);
    bool uniq = subs.size() == 1 && subs[0] == generated(g, {x4});
    out.push_back({"<x^4> is the unique index 2 subgroup of G'", uniq,
                   std::to_string(subs.size()) + " index 2 subgroup(s) in G'"});
  }
  return out;
}

}  // namespace mqt
