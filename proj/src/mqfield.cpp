#include "mqt/mqfield.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mqt {

namespace {

int popcount(unsigned v) { return std::popcount(v); }

/// Primes P > 2^20 in which every generator is a nonzero square, with chosen roots.
struct ResidueProbe {
  u64 prime;
  std::vector<u64> roots;
};

std::vector<ResidueProbe> make_probes(const std::vector<i64>& gens) {
  std::vector<ResidueProbe> out;
  if (gens.empty()) return out;
  for (u64 P = (1u << 20) + 1; out.size() < 4; P += 2) {
    if (!is_prime(P)) continue;
    ResidueProbe pr{P, {}};
    bool ok = true;
    for (i64 d : gens) {
      i64 r = d % static_cast<i64>(P);
      if (r < 0) r += static_cast<i64>(P);
      if (r == 0 || jacobi(r, static_cast<i64>(P)) != 1) {
        ok = false;
        break;
      }
      pr.roots.push_back(sqrt_mod(static_cast<u64>(r), P));
    }
    if (ok) out.push_back(std::move(pr));
  }
  return out;
}

struct ProbeTable {
  std::mutex mu;
  std::map<std::vector<i64>, std::vector<ResidueProbe>> entries;  // nodes never move

  const std::vector<ResidueProbe>& get(const std::vector<i64>& gens) {
    std::lock_guard lk(mu);
    auto it = entries.find(gens);
    if (it == entries.end()) it = entries.emplace(gens, make_probes(gens)).first;
    return it->second;
  }
};

ProbeTable& probe_table() {
  static ProbeTable t;
  return t;
}

// Calls f(P, image) for every homomorphism to F_P of the probes; image is
// nullopt when P divides the denominator.
template <class F>
void for_each_probe_image(const MQElement& x, F&& f) {
  const auto& K = *x.field();
  const auto& probes = probe_table().get(K.generators());
  const unsigned deg = K.degree();
  const int n = K.rank();
  for (const auto& pr : probes) {
    const u64 P = pr.prime;
    u64 den = mpz_fdiv_ui(x.denominator().get_mpz_t(), P);
    std::vector<u64> nums(deg);
    if (den != 0)
      for (unsigned S = 0; S < deg; ++S) nums[S] = mpz_fdiv_ui(x.numerators()[S].get_mpz_t(), P);
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      if (den == 0) {
        f(P, std::optional<u64>{});
        continue;
      }
      u64 v = 0;
      for (unsigned S = 0; S < deg; ++S) {
        if (!nums[S]) continue;
        u64 t = nums[S];
        for (int i = 0; i < n; ++i) {
          if (!(S >> i & 1)) continue;
          u64 r = (signs >> i & 1) ? P - pr.roots[i] : pr.roots[i];
          t = mulmod(t, r, P);
        }
        v = (v + t) % P;
      }
      f(P, std::optional<u64>{mulmod(v, den, P)});
    }
  }
}

/// False if some homomorphism to F_P maps x to a non-residue.
bool passes_residue_probes(const MQElement& x) {
  bool ok = true;
  for_each_probe_image(x, [&](u64 P, std::optional<u64> v) {
    if (ok && v && *v != 0 && jacobi(static_cast<i64>(*v), static_cast<i64>(P)) == -1) ok = false;
  });
  return ok;
}

/// Image of each product-basis element of sub inside sup: P^sub_T = lambda_T * P^sup_{M_T}.
struct MonomialMap {
  std::vector<unsigned> mask;
  std::vector<mpq_class> lambda;
};

MonomialMap monomial_map(const MQField& sub, const MQField& sup) {
  const int n = sub.rank();
  std::vector<unsigned> gen_mask(n);
  std::vector<mpq_class> gen_lambda(n);
  for (int j = 0; j < n; ++j) {
    auto m = sup.mask_of(sub.generators()[j]);
    if (!m) throw std::invalid_argument("coerce: " + sub.str() + " is not a subfield of " + sup.str());
    gen_mask[j] = *m;
    // sqrt(e_j) = P_{S_j} / scale(S_j), and k_{S_j} == e_j since e_j is a kernel.
    gen_lambda[j] = mpq_class(1) / mpq_class(sup.basis_scale(*m));
  }
  MonomialMap mm;
  mm.mask.resize(sub.degree());
  mm.lambda.resize(sub.degree());
  for (unsigned T = 0; T < sub.degree(); ++T) {
    unsigned M = 0;
    mpq_class lam = 1;
    for (int j = 0; j < n; ++j) {
      if (!(T >> j & 1)) continue;
      lam *= gen_lambda[j] * mpq_class(sup.product_factor(M & gen_mask[j]));
      M ^= gen_mask[j];
    }
    mm.mask[T] = M;
    mm.lambda[T] = lam;
  }
  return mm;
}

std::string rational_str(const mpq_class& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

}  // namespace

// ---------------------------------------------------------------- square classes

SquareClassSpace::SquareClassSpace(const std::vector<i64>& values) {
  std::set<i64> ps;
  for (i64 v : values)
    for (auto [p, e] : factorize(v)) ps.insert(p);
  primes_.push_back(-1);
  primes_.insert(primes_.end(), ps.begin(), ps.end());
  if (primes_.size() > 64) throw std::invalid_argument("SquareClassSpace: too many primes");
}

u64 SquareClassSpace::vector_of(i64 v) const {
  u64 bits = v < 0 ? 1 : 0;
  for (auto [p, e] : factorize(v)) {
    if (!(e & 1)) continue;
    auto it = std::lower_bound(primes_.begin() + 1, primes_.end(), p);
    if (it == primes_.end() || *it != p)
      throw std::invalid_argument("SquareClassSpace: prime outside the space");
    bits |= u64{1} << (it - primes_.begin());
  }
  return bits;
}

bool SquareClassSpace::covers(i64 v) const {
  for (auto [p, e] : factorize(v)) {
    if (!(e & 1)) continue;
    if (!std::binary_search(primes_.begin() + 1, primes_.end(), p)) return false;
  }
  return true;
}

i64 SquareClassSpace::value_of(u64 bits) const {
  __int128 v = 1;
  for (std::size_t i = 1; i < primes_.size(); ++i) {
    if (!(bits >> i & 1)) continue;
    v *= primes_[i];
    if (v > static_cast<__int128>(INT64_MAX)) throw std::overflow_error("square class kernel overflows");
  }
  return static_cast<i64>((bits & 1) ? -v : v);
}

int square_class_rank(const std::vector<i64>& values) {
  SquareClassSpace sp(values);
  std::vector<u64> rows;
  for (i64 v : values) rows.push_back(sp.vector_of(v));
  int rank = 0;
  for (int bit = 0; bit < 64; ++bit) {
    auto it = std::find_if(rows.begin() + rank, rows.end(), [&](u64 r) { return r >> bit & 1; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, it);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (static_cast<int>(r) != rank && (rows[r] >> bit & 1)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------- fields

MQField::Ptr MQField::make(std::vector<i64> generators) {
  for (i64& d : generators) {
    d = squarefree_kernel(d);
    if (d == 1) throw std::invalid_argument("MQField: generator is a square");
  }
  std::sort(generators.begin(), generators.end());
  if (generators.size() > 5) throw std::invalid_argument("MQField: at most 5 generators");
  if (square_class_rank(generators) != static_cast<int>(generators.size()))
    throw std::invalid_argument("MQField: generators are dependent modulo squares");

  auto f = std::shared_ptr<MQField>(new MQField());
  f->gens_ = generators;
  const unsigned deg = 1u << generators.size();
  SquareClassSpace sp(generators.empty() ? std::vector<i64>{} : generators);
  std::vector<u64> vec;
  for (i64 d : generators) vec.push_back(sp.vector_of(d));
  f->kernels_.resize(deg);
  f->prod_.resize(deg);
  f->scale_.resize(deg);
  for (unsigned S = 0; S < deg; ++S) {
    u64 bits = 0;
    mpz_class prod = 1;
    int neg = 0;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (!(S >> i & 1)) continue;
      bits ^= vec[i];
      prod *= static_cast<long>(generators[i]);
      if (generators[i] < 0) ++neg;
    }
    f->kernels_[S] = sp.value_of(bits);
    f->prod_[S] = prod;
    mpz_class q = abs(prod) / mpz_class(static_cast<long>(std::abs(f->kernels_[S])));
    mpz_class s = sqrt(q);
    if (s * s != q) throw std::logic_error("MQField: basis scale is not integral");
    f->scale_[S] = (neg / 2) % 2 ? mpz_class(-s) : s;
  }
  if (!generators.empty()) {
    std::vector<i64> pre(generators.begin(), generators.end() - 1);
    f->prefix_ = make(pre);
  }
  return f;
}

MQField::Ptr MQField::rationals() {
  static const Ptr q = make({});
  return q;
}

bool MQField::is_real() const {
  return std::all_of(gens_.begin(), gens_.end(), [](i64 d) { return d > 0; });
}

std::optional<unsigned> MQField::mask_of(i64 d) const {
  i64 k = squarefree_kernel(d);
  for (unsigned S = 0; S < degree(); ++S)
    if (kernels_[S] == k) return S;
  return std::nullopt;
}

unsigned MQField::conjugation_mask() const {
  unsigned m = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i] < 0) m |= 1u << i;
  return m;
}

std::string MQField::str() const {
  std::ostringstream os;
  os << "Q(";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << "sqrt(" << gens_[i] << ")";
  os << ")";
  return gens_.empty() ? "Q" : os.str();
}

bool same_field(const MQField::Ptr& a, const MQField::Ptr& b) { return a == b || *a == *b; }

bool is_subfield(const MQField& sub, const MQField& sup) {
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](i64 e) { return sup.mask_of(e).has_value(); });
}

std::vector<int> GaloisElement::signs(int n) const {
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = (flip >> i & 1) ? -1 : 1;
  return s;
}

std::vector<GaloisElement> fixing_subgroup(const MQField& sup, const MQField& sub) {
  std::vector<unsigned> masks;
  for (i64 e : sub.generators()) {
    auto m = sup.mask_of(e);
    if (!m) throw std::invalid_argument("fixing_subgroup: not a subfield");
    masks.push_back(*m);
  }
  std::vector<GaloisElement> out;
  for (unsigned f = 0; f < sup.degree(); ++f) {
    if (std::all_of(masks.begin(), masks.end(), [&](unsigned m) { return popcount(m & f) % 2 == 0; }))
      out.push_back({f});
  }
  return out;
}

// ---------------------------------------------------------------- elements

MQElement::MQElement(MQField::Ptr field) : field_(std::move(field)), num_(field_->degree()), den_(1) {}

MQElement::MQElement(MQField::Ptr field, const mpq_class& q) : MQElement(std::move(field)) {
  num_[0] = q.get_num();
  den_ = q.get_den();
}

MQElement::MQElement(MQField::Ptr field, std::vector<mpz_class> num, mpz_class den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
  if (num_.size() != field_->degree()) throw std::invalid_argument("MQElement: wrong coordinate count");
  if (den_ == 0) throw std::invalid_argument("MQElement: zero denominator");
  normalize();
}

void MQElement::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

MQElement MQElement::sqrt_of(MQField::Ptr field, i64 d) {
  if (squarefree_kernel(d) != d) throw std::invalid_argument("sqrt_of: radicand must be squarefree");
  auto m = field->mask_of(d);
  if (!m) throw std::invalid_argument("sqrt_of: sqrt(" + std::to_string(d) + ") not in " + field->str());
  MQElement x(field);
  const mpz_class& s = field->basis_scale(*m);
  x.num_[*m] = sgn(s);
  x.den_ = abs(s);
  return x;
}

MQElement MQElement::quadratic(MQField::Ptr field, i64 d, const mpz_class& a, const mpz_class& b,
                               const mpz_class& den) {
  MQElement r = sqrt_of(field, d) * mpq_class(b) + MQElement(field, mpq_class(a));
  return r * mpq_class(mpz_class(1), den);
}

MQElement MQElement::from_coords(MQField::Ptr field, const std::vector<mpq_class>& coords) {
  if (coords.size() != field->degree()) throw std::invalid_argument("from_coords: wrong coordinate count");
  std::vector<mpq_class> q(coords.size());
  mpz_class den = 1;
  for (unsigned S = 0; S < coords.size(); ++S) {
    q[S] = coords[S] / mpq_class(field->basis_scale(S));
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q[S].get_den_mpz_t());
  }
  std::vector<mpz_class> num(coords.size());
  for (unsigned S = 0; S < coords.size(); ++S) num[S] = q[S].get_num() * (den / q[S].get_den());
  return MQElement(std::move(field), std::move(num), den);
}

std::vector<mpq_class> MQElement::coords() const {
  std::vector<mpq_class> out(num_.size());
  for (unsigned S = 0; S < num_.size(); ++S) {
    out[S] = mpq_class(num_[S] * field_->basis_scale(S), den_);
    out[S].canonicalize();
  }
  return out;
}

bool MQElement::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
}

bool MQElement::is_rational() const {
  return std::all_of(num_.begin() + 1, num_.end(), [](const mpz_class& c) { return c == 0; });
}

std::optional<mpq_class> MQElement::as_rational() const {
  if (!is_rational()) return std::nullopt;
  mpq_class q(num_[0], den_);
  q.canonicalize();
  return q;
}

static void check_same(const MQElement& x, const MQElement& y) {
  if (!same_field(x.field(), y.field()))
    throw std::invalid_argument("MQElement: operands in different fields " + x.field()->str() + " and " +
                                y.field()->str());
}

MQElement operator+(const MQElement& x, const MQElement& y) {
  check_same(x, y);
  std::vector<mpz_class> num(x.num_.size());
  if (x.den_ == y.den_) {
    for (std::size_t i = 0; i < num.size(); ++i) num[i] = x.num_[i] + y.num_[i];
    return MQElement(x.field_, std::move(num), x.den_);
  }
  for (std::size_t i = 0; i < num.size(); ++i) num[i] = x.num_[i] * y.den_ + y.num_[i] * x.den_;
  return MQElement(x.field_, std::move(num), x.den_ * y.den_);
}

MQElement operator-(const MQElement& x, const MQElement& y) { return x + (-y); }

MQElement MQElement::operator-() const {
  MQElement r(*this);
  for (auto& c : r.num_) c = -c;
  return r;
}

MQElement operator*(const MQElement& x, const MQElement& y) {
  check_same(x, y);
  const MQField& F = *x.field_;
  const unsigned deg = F.degree();
  std::vector<mpz_class> num(deg);
  mpz_class t;
  for (unsigned S = 0; S < deg; ++S) {
    if (x.num_[S] == 0) continue;
    for (unsigned T = 0; T < deg; ++T) {
      if (y.num_[T] == 0) continue;
      mpz_mul(t.get_mpz_t(), x.num_[S].get_mpz_t(), y.num_[T].get_mpz_t());
      if (S & T) mpz_mul(t.get_mpz_t(), t.get_mpz_t(), F.product_factor(S & T).get_mpz_t());
      num[S ^ T] += t;
    }
  }
  return MQElement(x.field_, std::move(num), x.den_ * y.den_);
}

MQElement MQElement::operator*(const mpq_class& q) const {
  std::vector<mpz_class> num(num_.size());
  for (std::size_t i = 0; i < num.size(); ++i) num[i] = num_[i] * q.get_num();
  return MQElement(field_, std::move(num), den_ * q.get_den());
}

bool MQElement::operator==(const MQElement& o) const {
  return same_field(field_, o.field_) && den_ == o.den_ && num_ == o.num_;
}

std::pair<MQElement, MQElement> MQElement::split() const {
  const auto& pre = field_->prefix();
  if (!pre) throw std::logic_error("split: rational field");
  const unsigned h = pre->degree();
  std::vector<mpz_class> a(num_.begin(), num_.begin() + h), b(num_.begin() + h, num_.end());
  return {MQElement(pre, std::move(a), den_), MQElement(pre, std::move(b), den_)};
}

MQElement MQElement::join(const MQField::Ptr& field, const MQElement& a, const MQElement& b) {
  if (!same_field(field->prefix(), a.field_) || !same_field(field->prefix(), b.field_))
    throw std::invalid_argument("join: parts not in the prefix field");
  std::vector<mpz_class> num;
  num.reserve(field->degree());
  for (const auto& c : a.num_) num.push_back(c * b.den_);
  for (const auto& c : b.num_) num.push_back(c * a.den_);
  return MQElement(field, std::move(num), a.den_ * b.den_);
}

static MQElement last_radicand(const MQField::Ptr& f) {
  return MQElement(f->prefix(), mpq_class(mpz_class(static_cast<long>(f->generators().back()))));
}

MQElement MQElement::inverse() const {
  if (is_zero()) throw std::domain_error("MQElement: inverse of zero");
  if (field_->rank() == 0) {
    mpq_class q(den_, num_[0]);
    q.canonicalize();
    return MQElement(field_, q);
  }
  auto [a, b] = split();
  if (b.is_zero()) return join(field_, a.inverse(), b);
  MQElement N = a * a - b * b * last_radicand(field_);
  MQElement Ni = N.inverse();
  return join(field_, a * Ni, -(b * Ni));
}

MQElement MQElement::pow(long e) const {
  MQElement base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  MQElement r = one(field_);
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

MQElement MQElement::apply(GaloisElement g) const {
  MQElement r(*this);
  for (unsigned S = 0; S < num_.size(); ++S)
    if (popcount(S & g.flip) & 1) r.num_[S] = -r.num_[S];
  return r;
}

mpq_class MQElement::norm_to_q() const {
  if (field_->rank() == 0) return *as_rational();
  auto [a, b] = split();
  return (a * a - b * b * last_radicand(field_)).norm_to_q();
}

bool MQElement::is_integral() const {
  if (den_ == 1) return true;
  if (field_->rank() == 0) return false;
  auto [a, b] = split();
  return (a * mpq_class(2)).is_integral() && (a * a - b * b * last_radicand(field_)).is_integral();
}

bool MQElement::is_unit() const {
  if (is_zero()) return false;
  mpq_class n = norm_to_q();
  return (n == 1 || n == -1) && is_integral();
}

std::optional<u64> quadratic_characters(const MQElement& x) {
  u64 bits = 0;
  int j = 0;
  bool defined = true;
  for_each_probe_image(x, [&](u64 P, std::optional<u64> v) {
    if (!v || *v == 0 || j >= 64) defined = false;
    else if (jacobi(static_cast<i64>(*v), static_cast<i64>(P)) == -1) bits |= u64{1} << j;
    ++j;
  });
  if (!defined) return std::nullopt;
  return bits;
}

std::optional<MQElement> MQElement::sqrt_any() const {
  if (is_zero()) return *this;
  if (field_->rank() == 0) {
    if (num_[0] < 0) return std::nullopt;
    if (!mpz_perfect_square_p(num_[0].get_mpz_t()) || !mpz_perfect_square_p(den_.get_mpz_t()))
      return std::nullopt;
    return MQElement(field_, mpq_class(::sqrt(num_[0]), ::sqrt(den_)));
  }
  if (!passes_residue_probes(*this)) return std::nullopt;
  auto [a, b] = split();
  const MQElement d = last_radicand(field_);
  const MQElement zero(field_->prefix());
  if (b.is_zero()) {
    if (auto r = a.sqrt_any()) return join(field_, *r, zero);
    if (auto r = (a * d.inverse()).sqrt_any()) return join(field_, zero, *r);
    return std::nullopt;
  }
  // y = c + e sqrt(d): c^2 + d e^2 = a, 2ce = b, so (c^2 - d e^2)^2 = a^2 - d b^2.
  auto s = (a * a - b * b * d).sqrt_any();
  if (!s) return std::nullopt;
  for (int sign : {1, -1}) {
    MQElement c2 = (sign > 0 ? a + *s : a - *s) * mpq_class(1, 2);
    if (c2.is_zero()) continue;
    auto c = c2.sqrt_any();
    if (!c) continue;
    MQElement e = b * (*c * mpq_class(2)).inverse();
    MQElement y = join(field_, *c, e);
    if (y * y == *this) return y;
  }
  return std::nullopt;
}

std::optional<MQElement> MQElement::sqrt() const {
  auto y = sqrt_any();
  if (!y || y->is_zero()) return y;
  return canonical_sign(*y);
}

ComplexBall MQElement::embed(GaloisElement g, mpfr_prec_t prec) const {
  const MQField& F = *field_;
  const int n = F.rank();
  Ball re(prec), im(prec);
  for (unsigned S = 0; S < num_.size(); ++S) {
    if (num_[S] == 0) continue;
    mpz_class absprod = 1;
    int neg = 0;
    for (int i = 0; i < n; ++i) {
      if (!(S >> i & 1)) continue;
      absprod *= static_cast<long>(std::abs(F.generators()[i]));
      if (F.generators()[i] < 0) ++neg;
    }
    Ball term = Ball(num_[S], prec) * Ball::sqrt_of(absprod, prec);
    if (popcount(S & g.flip) & 1) term = -term;
    // i^neg
    switch (neg % 4) {
      case 0: re = re + term; break;
      case 1: im = im + term; break;
      case 2: re = re - term; break;
      default: im = im - term; break;
    }
  }
  Ball den(den_, prec);
  return {re / den, im / den};
}

std::string MQElement::serialize() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < field_->generators().size(); ++i) os << (i ? "," : "") << field_->generators()[i];
  os << "):";
  auto c = coords();
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << rational_str(c[i]);
  return os.str();
}

MQElement MQElement::parse(const std::string& s) {
  auto colon = s.find(':');
  if (s.empty() || s[0] != '(' || colon == std::string::npos || s[colon - 1] != ')')
    throw std::invalid_argument("MQElement::parse: expected (gens):coords");
  std::vector<i64> gens;
  std::stringstream gs(s.substr(1, colon - 2));
  std::string tok;
  while (std::getline(gs, tok, ','))
    if (!tok.empty()) gens.push_back(std::stoll(tok));
  auto F = MQField::make(gens);
  std::vector<mpq_class> coords;
  std::stringstream cs(s.substr(colon + 1));
  while (std::getline(cs, tok, ',')) {
    mpq_class q(tok);
    q.canonicalize();
    coords.push_back(q);
  }
  return from_coords(F, coords);
}

std::string MQElement::str() const {
  auto c = coords();
  std::ostringstream os;
  bool first = true;
  for (unsigned S = 0; S < c.size(); ++S) {
    if (c[S] == 0) continue;
    mpq_class v = c[S];
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    first = false;
    mpq_class a = abs(v);
    if (S == 0) {
      os << rational_str(a);
    } else {
      if (a != 1) os << rational_str(a) << "*";
      os << "sqrt(" << field_->kernel(S) << ")";
    }
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------- subfields

MQElement norm_to_subfield(const MQElement& x, const std::vector<GaloisElement>& subgroup) {
  MQElement r = MQElement::one(x.field());
  for (auto g : subgroup) r = r * x.apply(g);
  for (auto g : subgroup)
    if (!(r.apply(g) == r)) throw std::logic_error("norm_to_subfield: set is not a subgroup");
  return r;
}

MQElement relative_norm(const MQElement& x, const MQField::Ptr& sub) {
  return restrict_to(norm_to_subfield(x, fixing_subgroup(*x.field(), *sub)), sub);
}

MQElement coerce(const MQElement& x, const MQField::Ptr& sup) {
  if (same_field(x.field(), sup)) return x;
  const auto mm = monomial_map(*x.field(), *sup);
  std::vector<mpq_class> q(sup->degree());
  for (unsigned T = 0; T < x.field()->degree(); ++T) {
    if (x.numerators()[T] == 0) continue;
    q[mm.mask[T]] += mpq_class(x.numerators()[T]) * mm.lambda[T];
  }
  mpz_class den = 1;
  for (auto& v : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<mpz_class> num(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) num[i] = q[i].get_num() * (den / q[i].get_den());
  return MQElement(sup, std::move(num), den * x.denominator());
}

MQElement restrict_to(const MQElement& x, const MQField::Ptr& sub) {
  if (same_field(x.field(), sub)) return x;
  const auto mm = monomial_map(*sub, *x.field());
  std::vector<int> back(x.field()->degree(), -1);
  for (unsigned T = 0; T < sub->degree(); ++T) back[mm.mask[T]] = static_cast<int>(T);
  std::vector<mpq_class> q(sub->degree());
  for (unsigned S = 0; S < x.field()->degree(); ++S) {
    if (x.numerators()[S] == 0) continue;
    if (back[S] < 0)
      throw std::domain_error("restrict_to: element of " + x.field()->str() + " not in " + sub->str());
    q[back[S]] = mpq_class(x.numerators()[S]) / mm.lambda[back[S]];
  }
  mpz_class den = 1;
  for (auto& v : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<mpz_class> num(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) num[i] = q[i].get_num() * (den / q[i].get_den());
  return MQElement(sub, std::move(num), den * x.denominator());
}

// ---------------------------------------------------------------- signs

namespace {

mpfr_prec_t height_bits(const MQElement& x) {
  std::size_t bits = mpz_sizeinbase(x.denominator().get_mpz_t(), 2);
  for (const auto& c : x.numerators()) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return static_cast<mpfr_prec_t>(bits);
}

/// Sign of the real (part == 0) or imaginary (part == 1) coordinate; the value
/// must be known to be nonzero.
int certified_sign(const MQElement& x, int part, mpfr_prec_t start) {
  mpfr_prec_t prec = std::max<mpfr_prec_t>(start, 2 * height_bits(x) + 64);
  for (int round = 0; round < 12; ++round, prec *= 2) {
    ComplexBall z = x.embed(prec);
    const Ball& b = part == 0 ? z.re : z.im;
    if (b.is_positive()) return 1;
    if (b.is_negative()) return -1;
  }
  throw PrecisionExhausted("sign of " + x.str() + " not certified");
}

}  // namespace

int real_part_sign(const MQElement& x, mpfr_prec_t start) {
  const unsigned conj = x.field()->conjugation_mask();
  if (conj != 0) {
    if ((x + x.apply({conj})).is_zero()) return 0;
  } else if (x.is_zero()) {
    return 0;
  }
  return certified_sign(x, 0, start);
}

MQElement canonical_sign(const MQElement& y) {
  int s = real_part_sign(y);
  if (s == 0) s = certified_sign(y, 1, 128);
  return s > 0 ? y : -y;
}

}  // namespace mqt
