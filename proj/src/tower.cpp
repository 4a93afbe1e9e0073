#include "mqt/tower.hpp"

#include "mqt/groups.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mqt {

std::string to_string(GroupFamily f) {
  switch (f) {
    case GroupFamily::ABELIAN_22: return "ABELIAN_22";
    case GroupFamily::Q: return "Q";
    case GroupFamily::D: return "D";
    case GroupFamily::S: return "S";
    case GroupFamily::CYCLIC: return "CYCLIC";
  }
  return "?";
}

std::string flags_str(const std::array<int, 3>& counts, const TausskyFlags& flags) {
  std::string s = "(";
  for (int i = 0; i < 3; ++i) {
    if (i) s += ",";
    s += std::to_string(counts[i]);
    if (flags[i]) s += *flags[i] == Taussky::A ? "A" : "B";
  }
  return s + ")";
}

const std::vector<TableRow>& capitulation_table() {
  constexpr auto A = Taussky::A;
  constexpr auto B = Taussky::B;
  static const std::vector<TableRow> rows{
      {{4, 4, 4}, {A, A, A}, GroupFamily::ABELIAN_22, 2, 2, "(2,2)"},
      {{2, 2, 2}, {A, A, A}, GroupFamily::Q, 3, 3, "Q_3"},
      {{4, 2, 2}, {A, B, B}, GroupFamily::D, 3, std::nullopt, "D_m, m>=3"},
      {{2, 2, 2}, {A, B, B}, GroupFamily::Q, 4, std::nullopt, "Q_m, m>3"},
      {{2, 2, 2}, {B, B, B}, GroupFamily::S, 4, std::nullopt, "S_m, m>3"},
  };
  return rows;
}

std::vector<TableRow> classify_from_table(const std::array<int, 3>& counts, const TausskyFlags& flags) {
  for (int c : counts)
    if (c != 2 && c != 4) throw TowerContradiction("capitulation count " + std::to_string(c) + " outside {2, 4}");
  std::vector<TableRow> out;
  for (const auto& row : capitulation_table()) {
    std::array<int, 3> perm{0, 1, 2};
    bool match = false;
    do {
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        const int j = perm[i];
        ok = counts[i] == row.counts[j] && (!flags[i] || *flags[i] == *row.flags[j]);
      }
      match = ok;
    } while (!match && std::next_permutation(perm.begin(), perm.end()));
    if (match) out.push_back(row);
  }
  if (out.empty()) throw TowerContradiction("no capitulation table row matches " + flags_str(counts, flags));
  return out;
}

std::string TowerClassification::name() const {
  switch (group_family) {
    case GroupFamily::ABELIAN_22: return "(2,2)";
    case GroupFamily::CYCLIC: return "Z/" + mpz_class(mpz_class(1) << order_exponent).get_str();
    default: return to_string(group_family) + "_" + std::to_string(order_exponent);
  }
}

std::string NormIndexReport::evidence() const {
  std::ostringstream os;
  os << "N(" << upper.str() << " -> " << lower.str() << "): ";
  for (std::size_t i = 0; i < norms.size(); ++i) os << (i ? "; " : "") << norms[i].value.str();
  os << "; index " << index << ", count " << cap_count;
  return os.str();
}

std::vector<Unit> norm_units(const UnitGroupDescription& upper_fsu, const MQField::Ptr& lower) {
  const auto& up = upper_fsu.field;
  if (!is_subfield(*lower, *up) || up->degree() != 2 * lower->degree())
    throw std::invalid_argument("norm_units: " + lower->str() + " is not an index 2 subfield of " + up->str());
  auto h = fixing_subgroup(*up, *lower);
  const GaloisElement sigma = h[0].flip ? h[0] : h[1];
  auto norm = [&](const Unit& u) { return restrict_to(u * apply(u, sigma), lower); };
  std::vector<Unit> out{norm(torsion_unit(upper_fsu.zeta))};
  for (const auto& g : upper_fsu.generators) out.push_back(norm(g));
  return out;
}

std::vector<MQElement> norm_generators(const UnitGroupDescription& upper_fsu, const MQField::Ptr& lower) {
  std::vector<MQElement> out;
  for (auto& u : norm_units(upper_fsu, lower)) out.push_back(u.value);
  return out;
}

mpz_class norm_unit_index(const UnitGroupDescription& lower_fsu, const std::vector<Unit>& norm_images) {
  const std::size_t r = lower_fsu.generators.size();
  const QMatrix b = lower_fsu.exponent_matrix();
  const RootsOfUnity w{lower_fsu.torsion_order, lower_fsu.zeta};
  ZMatrix rows;
  for (const auto& img : norm_images) {
    if (!same_field(img.field(), lower_fsu.field)) throw std::invalid_argument("norm_unit_index: image in wrong field");
    std::vector<mpq_class> a;
    if (r > 0) {
      auto sol = solve_left(b, img.exps);
      if (!sol) throw std::logic_error("norm_unit_index: singular lower FSU");
      a = *sol;
    }
    std::vector<mpz_class> row(r + 1);
    MQElement prod = MQElement::one(lower_fsu.field);
    for (std::size_t j = 0; j < r; ++j) {
      if (a[j].get_den() != 1) throw std::logic_error("norm_unit_index: " + img.value.str() + " is not in E_lower");
      row[j + 1] = a[j].get_num();
      prod = prod * lower_fsu.generators[j].value.pow(row[j + 1].get_si());
    }
    auto t = torsion_exponent(img.value / prod, w);
    if (!t) throw std::logic_error("norm_unit_index: residue of " + img.value.str() + " is not a root of unity");
    row[0] = *t;
    rows.push_back(std::move(row));
  }
  std::vector<mpz_class> tors(r + 1);
  tors[0] = w.order;
  rows.push_back(std::move(tors));
  const std::size_t rank = hermite_rows(rows);
  if (rank < r + 1) throw std::logic_error("norm_unit_index: norms have infinite index");
  mpz_class idx = 1;
  for (std::size_t i = 0; i <= r; ++i) idx *= rows[i][i];
  return abs(idx);
}

NormIndexReport capitulation_count(const FieldDescriptor& upper, const FieldDescriptor& lower, InvariantCache& cache) {
  auto up = fundamental_units(upper.field(), cache);
  auto lo = fundamental_units(lower.field(), cache);
  NormIndexReport rep{upper, lower, norm_units(up, lo.field), 0, 0};
  rep.index = norm_unit_index(lo, rep.norms);
  rep.cap_count = static_cast<int>((upper.field()->degree() / lower.field()->degree()) * rep.index.get_si());
  return rep;
}

mpz_class order_of_G(const FieldDescriptor& base, const FieldDescriptor& abelian_ext, const mpz_class& h2_ext) {
  auto b = base.field(), e = abelian_ext.field();
  if (!is_subfield(*b, *e)) throw std::invalid_argument("order_of_G: " + base.str() + " is not below " + abelian_ext.str());
  return mpz_class(e->degree() / b->degree()) * h2_ext;
}

namespace {

std::optional<int> log2_exact(const mpz_class& v) {
  if (v <= 0 || mpz_popcount(v.get_mpz_t()) != 1) return std::nullopt;
  return static_cast<int>(mpz_sizeinbase(v.get_mpz_t(), 2)) - 1;
}

struct Builder {
  FamilyClassification& out;
  InvariantCache& cache;
  mpfr_prec_t prec;
  std::map<FieldLabel, FieldDescriptor> fields;

  void fail(const std::string& s) { out.contradictions.push_back(s); }

  mpz_class h2_of(FieldLabel l) {
    const auto& fd = fields.at(l);
    auto fsu = fundamental_units(fd.field(), cache);
    auto rep = unit_index(fsu, cache, prec);
    if (rep.certified && *rep.certified != rep.exact)
      fail("q(" + fd.str() + "): exponent lattice gives " + rep.exact.get_str() + ", covolume gives " +
           rep.certified->get_str());
    out.q_index[l] = rep.exact;
    auto h = class_number_formula(*fd.field(), rep.exact, [&](i64 d) { return cache.h2(d); });
    out.h2[l] = h;
    return h;
  }

  int count(FieldLabel upper, FieldLabel lower) {
    auto rep = capitulation_count(fields.at(upper), fields.at(lower), cache);
    out.norm_reports.push_back(rep);
    return rep.cap_count;
  }

  // Table lookup with cited flags, checked against the computed order and the
  // predicted family.
  void classify(FieldLabel l, std::array<int, 3> counts, std::array<bool, 3> computed, TausskyFlags flags,
                const mpz_class& order, GroupFamily want, int want_exponent) {
    const auto& fd = fields.at(l);
    auto e = log2_exact(order);
    if (!e) {
      fail("|G_" + to_string(l) + "| = " + order.get_str() + " is not a power of 2");
      return;
    }
    TowerClassification tc{fd, want, *e, {counts.begin(), counts.end()}, std::vector<bool>(computed.begin(), computed.end()), flags, {}, 2};
    const std::string who = "G_" + to_string(l);
    try {
      // The counts and the order decide when they can; cited flags only break ties.
      std::vector<TableRow> cands;
      for (const auto& row : classify_from_table(counts, {}))
        if (row.allows_exponent(*e)) {
          cands.push_back(row);
          if (std::find(tc.candidates_without_flags.begin(), tc.candidates_without_flags.end(), row.family) ==
              tc.candidates_without_flags.end())
            tc.candidates_without_flags.push_back(row.family);
        }
      std::vector<TableRow> flagged;
      try {
        for (const auto& row : classify_from_table(counts, flags))
          if (row.allows_exponent(*e)) flagged.push_back(row);
      } catch (const TowerContradiction&) {
      }
      const TableRow* chosen = nullptr;
      if (cands.size() == 1) {
        chosen = &cands[0];
        bool agrees = std::any_of(flagged.begin(), flagged.end(), [&](const TableRow& r) { return r.label == chosen->label; });
        if (!agrees)
          fail(who + ": counts " + flags_str(counts, {}) + " with order 2^" + std::to_string(*e) + " force " +
               chosen->label + ", which the cited flags " + flags_str(counts, flags) + " contradict");
      } else if (flagged.size() == 1) {
        chosen = &flagged[0];
      } else {
        fail(who + ": " + std::to_string(flagged.size()) + " table rows fit " + flags_str(counts, flags) +
             " with order 2^" + std::to_string(*e));
        return;
      }
      tc.group_family = chosen->family;
      tc.tower_length = chosen->family == GroupFamily::ABELIAN_22 ? 1 : 2;
    } catch (const TowerContradiction& ex) {
      fail(who + ": " + ex.what());
      return;
    }
    if (tc.group_family != want || *e != want_exponent)
      fail(who + " classified as " + tc.name() + ", expected " + to_string(want) + "_" + std::to_string(want_exponent));
    out.groups.emplace(l, tc);
  }

  void cyclic(FieldLabel l, const mpz_class& h2, int want_exponent) {
    auto e = log2_exact(h2);
    if (!e || *e != want_exponent) {
      fail("h2(" + fields.at(l).str() + ") = " + h2.get_str() + ", expected 2^" + std::to_string(want_exponent));
      return;
    }
    out.groups.emplace(l, TowerClassification{fields.at(l), GroupFamily::CYCLIC, *e, {}, {}, {}, {}, 1});
  }
};


// The three index 2 subgroups of G_k must be G_K, G_L and G_F.
void check_subgroups(FamilyClassification& out) {
  auto find = [&](FieldLabel l) { auto it = out.groups.find(l); return it == out.groups.end() ? nullptr : &it->second; };
  auto gk = find(FieldLabel::k);
  if (!gk) return;
  GroupKind kind;
  switch (gk->group_family) {
    case GroupFamily::Q: kind = GroupKind::Q; break;
    case GroupFamily::D: kind = GroupKind::D; break;
    case GroupFamily::S: kind = GroupKind::S; break;
    default: return;
  }
  if (gk->order_exponent > 16) return;
  auto tag_of = [](const TowerClassification& t) {
    switch (t.group_family) {
      case GroupFamily::CYCLIC: return StructureTag::Cyclic;
      case GroupFamily::Q: return t.order_exponent == 2 ? StructureTag::Cyclic : StructureTag::Quaternion;
      case GroupFamily::D: return t.order_exponent == 2 ? StructureTag::Klein : StructureTag::Dihedral;
      case GroupFamily::S: return StructureTag::Semidihedral;
      case GroupFamily::ABELIAN_22: return StructureTag::Klein;
    }
    return StructureTag::Other;
  };
  std::multiset<StructureTag> want, have;
  std::string have_s, want_s;
  for (const auto& h : index_two_subgroups(TwoGroup(kind, gk->order_exponent))) {
    want.insert(h.fp.tag);
    want_s += " " + to_string(h.fp.tag);
  }
  for (FieldLabel l : {FieldLabel::K, FieldLabel::L, FieldLabel::F}) {
    auto t = find(l);
    if (!t) return;
    if (t->order_exponent + 1 != gk->order_exponent)
      out.contradictions.push_back("G_" + to_string(l) + " has order 2^" + std::to_string(t->order_exponent) +
                                   ", not half of |G_k|");
    have.insert(tag_of(*t));
    have_s += " " + to_string(l) + ":" + to_string(tag_of(*t));
  }
  if (want != have)
    out.contradictions.push_back("index 2 subgroups of G_k = " + gk->name() + " are" + want_s + " but the fields give" +
                                 have_s);
}

}  // namespace

FamilyClassification classify_family_instance(const FamilyInstance& inst, InvariantCache& cache,
                                              mpfr_prec_t precision_start) {
  FamilyClassification out;
  out.instance = inst;
  Builder b{out, cache, precision_start, fields_for_family(inst)};
  constexpr auto A = Taussky::A;
  constexpr auto B = Taussky::B;
  using FL = FieldLabel;

  if (inst.kind == FamilyKind::COND3) {
    auto h = b.h2_of(FL::L);
    // Counts and flags cited: four classes capitulate in each extension.
    b.classify(FL::L, {4, 4, 4}, {false, false, false}, {}, h, GroupFamily::ABELIAN_22, 2);
    return out;
  }

  const int m = m_exponent(OddPrime(inst.q));
  out.m = m;
  const auto hLs = b.h2_of(FL::Lstar);
  const auto hL = b.h2_of(FL::L);
  const auto hF = b.h2_of(FL::F);
  const auto hK = b.h2_of(FL::K);
  const auto hFi = b.h2_of(FL::Fi);
  if (hL != 4) b.fail("h2(L) = " + hL.get_str() + ", expected 4");
  if (hF != 4) b.fail("h2(F) = " + hF.get_str() + ", expected 4");
  if (hFi != 1) b.fail("h2(Fi) = " + hFi.get_str() + ", expected 1");

  const int cL = b.count(FL::Lstar, FL::L);
  const int cF = b.count(FL::Lstar, FL::F);
  const int ckK = b.count(FL::K, FL::k);
  const int ckL = b.count(FL::L, FL::k);
  const int ckF = b.count(FL::F, FL::k);

  const TausskyFlags q_flags = m + 1 == 3 ? TausskyFlags{A, A, A} : TausskyFlags{A, B, B};
  const auto& fd = b.fields;
  b.classify(FL::L, {cL, 2, 2}, {true, false, false}, q_flags, order_of_G(fd.at(FL::L), fd.at(FL::Lstar), hLs),
             GroupFamily::Q, m + 1);
  if (inst.kind == FamilyKind::COND1)
    b.classify(FL::F, {cF, 2, 2}, {true, false, false}, {A, B, B}, order_of_G(fd.at(FL::F), fd.at(FL::Lstar), hLs),
               GroupFamily::D, m + 1);
  else
    b.classify(FL::F, {cF, 2, 2}, {true, false, false}, q_flags, order_of_G(fd.at(FL::F), fd.at(FL::Lstar), hLs),
               GroupFamily::Q, m + 1);
  const auto gk = order_of_G(fd.at(FL::k), fd.at(FL::Lstar), hLs);
  if (inst.kind == FamilyKind::COND1)
    b.classify(FL::k, {ckK, ckL, ckF}, {true, true, true}, {B, B, B}, gk, GroupFamily::S, m + 2);
  else
    b.classify(FL::k, {ckK, ckL, ckF}, {true, true, true}, {A, B, B}, gk, GroupFamily::Q, m + 2);
  b.cyclic(FL::K, hK, m + 1);
  b.cyclic(FL::Lstar, hLs, m);
  check_subgroups(out);

  // Degree chain: k < K, L, F < L* < L^(1) < L*^(1).
  auto deg = [&](FL lo, FL hi) { return mpz_class(fd.at(hi).field()->degree() / fd.at(lo).field()->degree()); };
  for (FL l : {FL::K, FL::L, FL::F}) out.chain.push_back({"k", to_string(l), deg(FL::k, l)});
  for (FL l : {FL::K, FL::L, FL::F}) out.chain.push_back({to_string(l), "Lstar", deg(l, FL::Lstar)});
  // [L^(1) : L] = h2(L), [L*^(1) : L] = |G_L| = [L* : L] h2(L*).
  const mpz_class up1 = hL / deg(FL::L, FL::Lstar);
  const mpz_class top = deg(FL::L, FL::Lstar) * hLs / hL;
  out.chain.push_back({"Lstar", "L^(1)", up1});
  out.chain.push_back({"L^(1)", "Lstar^(1)", top});
  if (up1 != 2 || top != (mpz_class(1) << (m - 1)))
    b.fail("tower chain degrees " + up1.get_str() + ", " + top.get_str() + " do not match 2, 2^(m-1)");
  return out;
}

std::string render_tower(const FamilyClassification& c) {
  std::ostringstream os;
  const auto& g = c.groups;
  if (c.instance.kind == FamilyKind::COND3) {
    auto it = g.find(FieldLabel::L);
    if (it == g.end()) throw std::invalid_argument("render_tower: no classification for L");
    os << "L = " << it->second.base_field.str() << "\n";
    os << "  G_L of type (2,2): L^(1) = L^(2), tower length 1\n";
    return os.str();
  }
  if (c.m < 2 || c.chain.empty()) throw std::invalid_argument("render_tower: missing m or degree chain");
  const auto fds = fields_for_family(c.instance);
  auto name = [&](FieldLabel l) { return fds.at(l).str(); };
  os << "Lstar^(1) = F^(2) = L^(2) = K^(1) = K^(2) = k^(2)\n";
  os << "   | " << c.chain[7].degree << "   (2^(m-1), m = " << c.m << ")\n";
  os << "L^(1) = F^(1)\n";
  os << "   | " << c.chain[6].degree << "\n";
  os << name(FieldLabel::Lstar) << " = k^(1)\n";
  os << "   | " << c.chain[3].degree << " " << c.chain[4].degree << " " << c.chain[5].degree << "\n";
  os << name(FieldLabel::K) << " | " << name(FieldLabel::L) << " | " << name(FieldLabel::F) << "\n";
  os << "   | " << c.chain[0].degree << " " << c.chain[1].degree << " " << c.chain[2].degree << "\n";
  os << name(FieldLabel::k) << "\n";
  return os.str();
}

}  // namespace mqt
