#include "mqt/units.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace mqt {

namespace {

std::size_t index_of(const std::vector<i64>& ks, i64 d) {
  auto it = std::lower_bound(ks.begin(), ks.end(), d);
  if (it == ks.end() || *it != d) throw std::logic_error("kernel " + std::to_string(d) + " not indexed");
  return static_cast<std::size_t>(it - ks.begin());
}

std::vector<mpq_class> zero_exps(const MQField& k) { return std::vector<mpq_class>(positive_kernels(k).size()); }

// Masks S with c * prod_{j in S} el_j a square. The walk runs on quadratic
// characters; only subsets with trivial characters get the exact test.
std::vector<u64> gray_search(const std::vector<MQElement>& el, const MQElement& c) {
  std::vector<u64> hits;
  const u64 total = u64{1} << el.size();
  auto exact = [&](u64 mask) {
    MQElement x = c;
    for (std::size_t j = 0; j < el.size(); ++j)
      if (mask >> j & 1) x = x * el[j];
    return x.sqrt_any().has_value();
  };
  std::vector<u64> chi;
  auto c0 = quadratic_characters(c);
  for (const auto& e : el)
    if (auto x = quadratic_characters(e)) chi.push_back(*x);
  if (c0 && chi.size() == el.size()) {
    u64 cur = *c0, mask = 0;
    for (u64 i = 1; i < total; ++i) {
      int b = std::countr_zero(i);
      cur ^= chi[b];
      mask ^= u64{1} << b;
      if (cur == 0 && exact(mask)) hits.push_back(mask);
    }
    return hits;
  }
  std::vector<MQElement> inv;
  for (const auto& e : el) inv.push_back(e.inverse());
  MQElement cur = c;
  u64 mask = 0;
  for (u64 i = 1; i < total; ++i) {
    int b = std::countr_zero(i);
    cur = (mask >> b & 1) ? cur * inv[b] : cur * el[b];
    mask ^= u64{1} << b;
    if (cur.sqrt_any()) hits.push_back(mask);
  }
  return hits;
}

/// Reduced echelon form over GF(2) with pivots taken among the low `free_bits` bits.
std::vector<std::pair<int, u64>> echelon(const std::vector<u64>& vs, int free_bits) {
  std::vector<std::pair<int, u64>> rows;
  for (u64 v : vs) {
    for (auto& [piv, r] : rows)
      if (v >> piv & 1) v ^= r;
    if (!v) continue;
    int piv = -1;
    for (int b = 0; b < free_bits; ++b)
      if (v >> b & 1) {
        piv = b;
        break;
      }
    if (piv < 0) throw std::logic_error("square search: a root of unity became a square");
    for (auto& [p, r] : rows)
      if (r >> piv & 1) r ^= v;
    rows.emplace_back(piv, v);
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

mpfr_prec_t height_bits(const MQElement& x) {
  std::size_t bits = mpz_sizeinbase(x.denominator().get_mpz_t(), 2);
  for (const auto& c : x.numerators()) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return static_cast<mpfr_prec_t>(bits);
}

std::string exps_text(const std::vector<i64>& ks, const std::vector<mpq_class>& exps) {
  mpz_class D = 1;
  for (const auto& e : exps) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), e.get_den_mpz_t());
  std::string num, den;
  auto term = [&](std::string& s, i64 d, const mpz_class& n) {
    if (!s.empty()) s += "*";
    s += "eps_" + std::to_string(d);
    if (n != 1) s += "^" + n.get_str();
  };
  for (std::size_t i = 0; i < exps.size(); ++i) {
    mpz_class n = exps[i].get_num() * (D / exps[i].get_den());
    if (n > 0) term(num, ks[i], n);
    if (n < 0) term(den, ks[i], mpz_class(-n));
  }
  if (num.empty() && den.empty()) return "1";
  std::string body = num.empty() ? "1" : num;
  if (!den.empty()) body += "/" + (den.find('*') != std::string::npos ? "(" + den + ")" : den);
  if (D == 1) return body;
  if (D == 2) return "sqrt(" + body + ")";
  return "(" + body + ")^(1/" + D.get_str() + ")";
}

std::mutex fsu_mu;
std::map<std::vector<i64>, UnitGroupDescription> fsu_memo;

}  // namespace

std::vector<i64> positive_kernels(const MQField& k) {
  std::vector<i64> out;
  for (unsigned S = 1; S < k.degree(); ++S)
    if (k.kernel(S) > 0) out.push_back(k.kernel(S));
  std::sort(out.begin(), out.end());
  return out;
}

std::string Unit::describe() const { return exps_text(positive_kernels(*field()), exps); }

Unit operator*(const Unit& a, const Unit& b) {
  Unit r{a.value * b.value, a.exps};
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
  return r;
}

Unit inverse(const Unit& u) {
  Unit r{u.value.inverse(), u.exps};
  for (auto& e : r.exps) e = -e;
  return r;
}

Unit power(const Unit& u, long e) {
  Unit r{u.value.pow(e), u.exps};
  for (auto& x : r.exps) x *= e;
  return r;
}

Unit apply(const Unit& u, GaloisElement g) {
  Unit r{u.value.apply(g), u.exps};
  auto ks = positive_kernels(*u.field());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    unsigned m = *u.field()->mask_of(ks[i]);
    if (std::popcount(m & g.flip) & 1) r.exps[i] = -r.exps[i];
  }
  return r;
}

std::optional<Unit> sqrt(const Unit& u) {
  auto y = u.value.sqrt();
  if (!y) return std::nullopt;
  Unit r{*y, u.exps};
  for (auto& e : r.exps) e /= 2;
  return r;
}

Unit coerce(const Unit& u, const MQField::Ptr& sup) {
  if (same_field(u.field(), sup)) return u;
  Unit r{coerce(u.value, sup), zero_exps(*sup)};
  auto from = positive_kernels(*u.field()), to = positive_kernels(*sup);
  for (std::size_t i = 0; i < from.size(); ++i) r.exps[index_of(to, from[i])] = u.exps[i];
  return r;
}

Unit restrict_to(const Unit& u, const MQField::Ptr& sub) {
  if (same_field(u.field(), sub)) return u;
  Unit r{restrict_to(u.value, sub), zero_exps(*sub)};
  auto from = positive_kernels(*u.field()), to = positive_kernels(*sub);
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (u.exps[i] == 0) continue;
    auto it = std::lower_bound(to.begin(), to.end(), from[i]);
    if (it == to.end() || *it != from[i]) throw std::domain_error("restrict_to: exponent outside the subfield");
    r.exps[it - to.begin()] = u.exps[i];
  }
  return r;
}

Unit torsion_unit(const MQElement& zeta) { return Unit{zeta, zero_exps(*zeta.field())}; }

Unit quadratic_unit(const MQField::Ptr& k, i64 d, InvariantCache& cache) {
  const auto& inv = cache.get(d);
  if (!inv.eps) throw std::invalid_argument("quadratic_unit: d must be positive");
  Unit u{MQElement::quadratic(k, d, inv.eps->a, inv.eps->b, inv.eps->den), zero_exps(*k)};
  u.exps[index_of(positive_kernels(*k), d)] = 1;
  return u;
}

RootsOfUnity roots_of_unity(const MQField::Ptr& k) {
  const bool has_i = k->mask_of(-1).has_value();
  const bool has_8 = has_i && k->mask_of(2).has_value();
  const bool has_3 = k->mask_of(-3).has_value();
  MQElement z = MQElement(k, mpq_class(-1));
  int w = 2;
  if (has_8) {
    z = (MQElement::sqrt_of(k, 2) + MQElement::sqrt_of(k, -2)) * mpq_class(1, 2);
    w = 8;
  } else if (has_i) {
    z = MQElement::sqrt_of(k, -1);
    w = 4;
  }
  if (has_3) {
    MQElement z3 = (MQElement::sqrt_of(k, -3) - MQElement::one(k)) * mpq_class(1, 2);
    z = z * z3;
    w *= 3;
  }
  return {w, z};
}

std::optional<int> torsion_exponent(const MQElement& x, const RootsOfUnity& w) {
  MQElement cur = MQElement::one(x.field());
  for (int t = 0; t < w.order; ++t) {
    if (cur == x) return t;
    cur = cur * w.generator;
  }
  return std::nullopt;
}

QMatrix UnitGroupDescription::exponent_matrix() const {
  QMatrix m;
  for (const auto& g : generators) m.push_back(g.exps);
  return m;
}

MQField::Ptr maximal_real_subfield(const MQField::Ptr& k) {
  if (k->is_real()) return k;
  const auto& g = k->generators();
  int g0 = -1;
  for (int i = 0; i < k->rank(); ++i)
    if (g[i] < 0) {
      g0 = i;
      break;
    }
  std::vector<i64> gens;
  for (int i = 0; i < k->rank(); ++i) {
    if (i == g0) continue;
    gens.push_back(g[i] > 0 ? g[i] : k->kernel((1u << i) | (1u << g0)));
  }
  return MQField::make(gens);
}

std::vector<Unit> reduce_to_basis(std::vector<Unit> units, const RootsOfUnity& w) {
  if (units.empty()) return units;
  QMatrix q;
  for (const auto& u : units) q.push_back(u.exps);
  ZMatrix z = clear_denominators(q);
  RowOps ops;
  ops.swap = [&](std::size_t i, std::size_t j) { std::swap(units[i], units[j]); };
  ops.submul = [&](std::size_t i, std::size_t j, const mpz_class& c) {
    units[i] = units[i] * power(units[j], -c.get_si());
  };
  ops.negate = [&](std::size_t i) { units[i] = inverse(units[i]); };
  std::size_t r = hermite_rows(z, ops, false);
  for (std::size_t i = r; i < units.size(); ++i) {
    if (!torsion_exponent(units[i].value, w))
      throw std::logic_error("reduce_to_basis: zero exponent row is not a root of unity: " + units[i].value.str());
  }
  units.resize(r);
  return units;
}

int adjoin_square_roots(UnitGroupDescription& g) {
  const auto& k = g.field;
  const int r = static_cast<int>(g.generators.size());
  std::vector<MQElement> el;
  for (const auto& u : g.generators) el.push_back(u.value);
  el.push_back(g.zeta);
  auto hits = gray_search(el, MQElement::one(k));
  if (hits.empty()) return 0;
  auto rows = echelon(hits, r);
  std::vector<Unit> next = g.generators;
  for (auto [piv, v] : rows) {
    Unit prod = torsion_unit(MQElement::one(k));
    for (int j = 0; j < r; ++j)
      if (v >> j & 1) prod = prod * g.generators[j];
    if (v >> r & 1) prod = prod * torsion_unit(g.zeta);
    auto root = sqrt(prod);
    if (!root) throw std::logic_error("square class is not closed under products");
    next[piv] = *root;
  }
  g.generators = std::move(next);
  return static_cast<int>(rows.size());
}

UnitGroupDescription wada_unit_search(const MQField::Ptr& k, const std::vector<UnitGroupDescription>& subfield_fsus,
                                      InvariantCache&) {
  RootsOfUnity w = roots_of_unity(k);
  std::vector<Unit> units;
  for (const auto& s : subfield_fsus)
    for (const auto& u : s.generators) units.push_back(coerce(u, k));
  UnitGroupDescription g{k, w.order, w.generator, reduce_to_basis(std::move(units), w), std::nullopt};
  const std::size_t rank = k->is_real() ? k->degree() - 1 : k->degree() / 2 - 1;
  if (g.generators.size() != rank)
    throw std::logic_error("wada_unit_search: subfield units have rank " + std::to_string(g.generators.size()) +
                           ", expected " + std::to_string(rank));
  while (adjoin_square_roots(g) > 0) {
  }
  return g;
}

UnitGroupDescription fundamental_units(const MQField::Ptr& k, InvariantCache& cache) {
  {
    std::lock_guard lk(fsu_mu);
    auto it = fsu_memo.find(k->generators());
    if (it != fsu_memo.end()) return it->second;
  }
  UnitGroupDescription g;
  const int n = k->rank();
  if (n == 0) {
    g = {k, 2, MQElement(k, mpq_class(-1)), {}, std::nullopt};
  } else if (!k->is_real()) {
    auto base = fundamental_units(maximal_real_subfield(k), cache);
    g = wada_unit_search(k, {base}, cache);
  } else if (n == 1) {
    g = {k, 2, MQElement(k, mpq_class(-1)), {quadratic_unit(k, k->generators()[0], cache)}, std::nullopt};
  } else {
    const auto& gens = k->generators();
    std::vector<i64> k0(gens.begin(), gens.end() - 2);
    const i64 a = gens[n - 2], b = gens[n - 1];
    const i64 ab = k->kernel((1u << (n - 2)) | (1u << (n - 1)));
    std::vector<UnitGroupDescription> subs;
    for (i64 d : {a, b, ab}) {
      auto gs = k0;
      gs.push_back(d);
      subs.push_back(fundamental_units(MQField::make(gs), cache));
    }
    g = wada_unit_search(k, subs, cache);
  }
  std::lock_guard lk(fsu_mu);
  fsu_memo.emplace(k->generators(), g);
  return g;
}

UnitGroupDescription fsu_biquadratic(Radicand d1, Radicand d2, InvariantCache& cache) {
  auto k = MQField::make({d1.value(), d2.value()});
  if (!k->is_real()) throw std::invalid_argument("fsu_biquadratic: field must be real");
  return fundamental_units(k, cache);
}

UnitGroupDescription extend_units_with_i(const UnitGroupDescription& real_fsu, const MQField::Ptr& target) {
  const auto& k0 = real_fsu.field;
  if (!k0->is_real() || !target->mask_of(-1) || !is_subfield(*k0, *target) || target->degree() != 2 * k0->degree())
    throw std::invalid_argument("extend_units_with_i: target must be K0(i) for the real field K0");
  const bool has2 = k0->mask_of(2).has_value();
  MQElement mu = has2 ? MQElement::sqrt_of(k0, 2) : MQElement(k0);
  MQElement c = MQElement(k0, mpq_class(2)) + mu;
  MQElement xi = has2 ? (MQElement::sqrt_of(target, 2) + MQElement::sqrt_of(target, -2)) * mpq_class(1, 2)
                      : MQElement::sqrt_of(target, -1);

  const int r = static_cast<int>(real_fsu.generators.size());
  std::vector<MQElement> el;
  for (const auto& u : real_fsu.generators) el.push_back(u.value);
  el.push_back(MQElement(k0, mpq_class(-1)));
  auto hits = gray_search(el, c);

  RootsOfUnity w = roots_of_unity(target);
  UnitGroupDescription g{target, w.order, w.generator, {}, std::nullopt};
  for (const auto& u : real_fsu.generators) g.generators.push_back(coerce(u, target));
  if (hits.empty()) return g;
  const u64 v = *std::min_element(hits.begin(), hits.end());
  int piv = -1;
  for (int j = 0; j < r; ++j)
    if (v >> j & 1) {
      piv = j;
      break;
    }
  if (piv < 0) throw std::logic_error("extend_units_with_i: only -1 found");
  Unit eps = torsion_unit(MQElement::one(target));
  for (int j = 0; j < r; ++j)
    if (v >> j & 1) eps = eps * g.generators[j];
  if (v >> r & 1) eps.value = -eps.value;
  auto root = sqrt(Unit{xi * eps.value, eps.exps});
  if (!root) throw std::logic_error("extend_units_with_i: xi*eps is not a square in the target");
  g.generators[piv] = *root;
  return g;
}

int quadratic_torsion_order(const MQField& k) {
  int w = 2;
  if (k.mask_of(-1)) w = 4;
  if (k.mask_of(-3)) w = std::lcm(w, 6);
  return w;
}

UnitIndexReport unit_index(const UnitGroupDescription& fsu, InvariantCache& cache, mpfr_prec_t start) {
  const auto& k = fsu.field;
  const auto ks = positive_kernels(*k);
  const std::size_t r = fsu.generators.size();
  if (ks.size() != r) throw std::logic_error("unit_index: rank mismatch");
  UnitIndexReport rep;
  if (r == 0) {
    rep.free_index = 1;
  } else {
    mpq_class det = determinant(fsu.exponent_matrix());
    if (det == 0) throw std::logic_error("unit_index: dependent generators");
    mpq_class inv = 1 / abs(det);
    if (inv.get_den() != 1) throw std::logic_error("unit_index: quadratic units outside the lattice");
    rep.free_index = inv.get_num();
  }
  rep.torsion_index = fsu.torsion_order / quadratic_torsion_order(*k);
  rep.exact = rep.free_index * rep.torsion_index;
  if (r == 0) {
    rep.certified = rep.exact;
    rep.covolume_ratio = 1;
    return rep;
  }

  // Embeddings: one per complex-conjugate pair, the last one dropped.
  std::vector<GaloisElement> emb;
  const unsigned conj = k->conjugation_mask();
  const unsigned low = conj ? (conj & -conj) : 0;
  for (unsigned f = 0; f < k->degree() && emb.size() < r; ++f)
    if (!(f & low)) emb.push_back({f});

  std::vector<MQElement> quad, gens;
  mpfr_prec_t h = 0;
  for (i64 d : ks) {
    quad.push_back(quadratic_unit(k, d, cache).value);
    h = std::max(h, height_bits(quad.back()));
  }
  for (const auto& g : fsu.generators) {
    gens.push_back(g.value);
    h = std::max(h, height_bits(g.value));
  }
  mpfr_prec_t prec = std::max<mpfr_prec_t>(start, static_cast<mpfr_prec_t>(k->degree()) * h + 64);
  for (int attempt = 0; attempt < 4; ++attempt, prec *= 2) {
    try {
      auto logmat = [&](const std::vector<MQElement>& us) {
        std::vector<std::vector<Ball>> m;
        for (const auto& u : us) {
          std::vector<Ball> row;
          for (auto g : emb) row.push_back(u.embed(g, prec).log_abs());
          m.push_back(std::move(row));
        }
        return m;
      };
      Ball ratio = determinant(logmat(quad)).abs() / determinant(logmat(gens)).abs();
      const double mid = ratio.mid_d();
      const long e = std::lround(std::log2(mid));
      const double target = std::ldexp(1.0, static_cast<int>(e));
      if (ratio.inside(target - 0.25, target + 0.25)) {
        rep.certified = (mpz_class(1) << e) * rep.torsion_index;
        rep.covolume_ratio = mid;
        rep.precision = prec;
        return rep;
      }
    } catch (const PrecisionExhausted&) {
    }
  }
  throw PrecisionExhausted("unit_index: covolume ratio not isolated for " + k->str());
}

mpz_class class_number_formula(const MQField& k, const mpz_class& q, const std::function<mpz_class(i64)>& h2) {
  mpq_class c;
  if (k.is_real() && k.degree() == 4) c = mpq_class(1, 4);
  else if (!k.is_real() && k.degree() == 8) c = mpq_class(1, 32);
  else if (!k.is_real() && k.degree() == 16) c = mpq_class(1, 65536);
  else throw std::invalid_argument("class_number_formula: no constant for " + k.str());
  mpz_class prod = 1;
  for (unsigned S = 1; S < k.degree(); ++S) prod *= h2(k.kernel(S));
  mpq_class v = c * q * prod;
  v.canonicalize();
  if (v.get_den() != 1) throw std::domain_error("class_number_formula: non-integral value " + v.get_str());
  return v.get_num();
}

Unit realize(const MQField::Ptr& k, const std::vector<std::pair<Unit, long>>& factors, int root_degree,
             const std::optional<MQElement>& torsion) {
  if (root_degree < 1 || (root_degree & (root_degree - 1)))
    throw std::invalid_argument("realize: root degree must be a power of 2");
  Unit p = torsion_unit(MQElement::one(k));
  for (const auto& [u, e] : factors) p = p * power(coerce(u, k), e);
  if (torsion) p = p * torsion_unit(coerce(*torsion, k));
  for (int d = root_degree; d > 1; d /= 2) {
    auto r = sqrt(p);
    if (!r) throw std::domain_error("realize: " + p.describe() + " has no square root in " + k->str());
    p = *r;
  }
  return p;
}

bool same_unit_lattice(const UnitGroupDescription& a, const std::vector<Unit>& b) {
  QMatrix mb;
  for (const auto& u : b) mb.push_back(u.exps);
  return same_lattice(a.exponent_matrix(), mb);
}

bool same_unit_lattice(const UnitGroupDescription& a, const UnitGroupDescription& b) {
  return same_field(a.field, b.field) && a.torsion_order == b.torsion_order && same_unit_lattice(a, b.generators);
}

std::string PellCase::tag() const {
  std::ostringstream os;
  const char* c2 = c == 2 ? "2*" : "";
  os << "x-1=" << c2 << e << "*y1^2, x+1=" << c2 << "(d/" << e << ")*y2^2";
  return os.str();
}

PellCase pell_case_analysis(Radicand d, InvariantCache& cache) {
  const auto& inv = cache.get(d.value());
  if (!inv.eps) throw std::invalid_argument("pell_case_analysis: d must be positive");
  if (*inv.eps_norm != 1) throw std::invalid_argument("pell_case_analysis: N(eps_d) = -1");
  if (inv.eps->den != 1) throw std::invalid_argument("pell_case_analysis: half-integral unit");
  PellCase pc;
  pc.x = abs(inv.eps->a);
  pc.y = abs(inv.eps->b);
  std::vector<i64> divs{1};
  for (auto [p, e] : factorize(d.value())) {
    std::size_t n = divs.size();
    for (std::size_t i = 0; i < n; ++i) divs.push_back(divs[i] * p);
  }
  std::sort(divs.begin(), divs.end());
  auto square_quotient = [](const mpz_class& n, const mpz_class& m, mpz_class& root) {
    if (n % m != 0) return false;
    mpz_class q = n / m;
    if (q < 0 || !mpz_perfect_square_p(q.get_mpz_t())) return false;
    root = ::sqrt(q);
    return true;
  };
  for (int c : {1, 2}) {
    for (i64 e : divs) {
      mpz_class y1, y2;
      if (square_quotient(pc.x - 1, mpz_class(static_cast<long>(c * e)), y1) &&
          square_quotient(pc.x + 1, mpz_class(static_cast<long>(c * (d.value() / e))), y2)) {
        pc.e = e;
        pc.c = c;
        pc.y1 = y1;
        pc.y2 = y2;
        return pc;
      }
    }
  }
  throw std::logic_error("pell_case_analysis: no factor system for d = " + std::to_string(d.value()));
}

UnitExpressions unit_expressions(i64 p, i64 q, InvariantCache& cache) {
  UnitExpressions ux;
  std::ostringstream why;
  // sqrt(2 eps_d) read off in a biquadratic (or quadratic) field on two basis slots.
  auto read = [&](std::vector<i64> gens, i64 d, i64 s1, i64 s2, mpz_class& w1, mpz_class& w2) {
    auto k = MQField::make(gens);
    Unit e = quadratic_unit(k, d, cache);
    auto r = (e.value * mpq_class(2)).sqrt();
    if (!r) {
      why << "2*eps_" << d << " is not a square; ";
      return false;
    }
    auto c = r->coords();
    unsigned m1 = s1 == 1 ? 0 : *k->mask_of(s1), m2 = *k->mask_of(s2);
    for (unsigned S = 0; S < c.size(); ++S) {
      if (S == m1 || S == m2) continue;
      if (c[S] != 0) {
        why << "sqrt(2*eps_" << d << ") has extra terms; ";
        return false;
      }
    }
    if (c[m1].get_den() != 1 || c[m2].get_den() != 1) {
      why << "sqrt(2*eps_" << d << ") is not integral on its basis; ";
      return false;
    }
    w1 = c[m1].get_num();
    w2 = c[m2].get_num();
    return true;
  };
  bool ok = true;
  ok &= read({p, q}, p * q, p, q, ux.b1, ux.b2) && (-p * ux.b1 * ux.b1 + q * ux.b2 * ux.b2 == 2);
  ok &= read({2 * p, q}, 2 * p * q, 2 * p, q, ux.y1, ux.y2) && (-2 * p * ux.y1 * ux.y1 + q * ux.y2 * ux.y2 == 2);
  ok &= read({2 * q}, 2 * q, 1, 2 * q, ux.d1, ux.d2) && (ux.d1 * ux.d1 - 2 * q * ux.d2 * ux.d2 == 2);
  ok &= read({q}, q, 1, q, ux.d1p, ux.d2p) && (ux.d1p * ux.d1p - q * ux.d2p * ux.d2p == 2);
  ux.all_hold = ok;
  ux.failure = why.str();
  if (!ok && ux.failure.empty()) ux.failure = "a norm relation fails";
  return ux;
}

}  // namespace mqt
