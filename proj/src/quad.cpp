#include "mqt/quad.hpp"

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace mqt {

namespace {

i64 isqrt64(i64 n) {
  mpz_class r;
  mpz_class v(static_cast<long>(n));
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r.get_si();
}

struct Form {
  i64 a, b, c;
  auto operator<=>(const Form&) const = default;
};

i64 floor_mod(i64 x, i64 m) {
  i64 r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

i64 fundamental_discriminant(Radicand d) {
  i64 v = d.value();
  return floor_mod(v, 4) == 1 ? v : 4 * v;
}

QuadUnit fundamental_unit(Radicand rd) {
  i64 d = rd.value();
  if (d <= 1) throw std::invalid_argument("fundamental_unit: needs d > 1");
  const bool half = floor_mod(d, 4) == 1;
  const mpz_class D(static_cast<long>(d));
  const i64 s = isqrt64(d);
  // Complete quotients (P + sqrt d) / Q of sqrt(d) or (1 + sqrt d) / 2.
  i64 P = half ? 1 : 0;
  i64 Q = half ? 2 : 1;
  mpz_class h_prev = 1, h = 0, k_prev = 0, k = 1;
  for (int iter = 0; iter < 10'000'000; ++iter) {
    i64 a = (P + s) / Q;
    mpz_class h_next = a * h_prev + h;
    mpz_class k_next = a * k_prev + k;
    h = h_prev;
    k = k_prev;
    h_prev = h_next;
    k_prev = k_next;
    // Candidate unit from the newest convergent h_prev / k_prev.
    QuadUnit u;
    if (half) {
      u.a = 2 * h_prev - k_prev;
      u.b = k_prev;
      u.den = 2;
    } else {
      u.a = h_prev;
      u.b = k_prev;
      u.den = 1;
    }
    mpz_class nrm = u.a * u.a - D * u.b * u.b;
    const long dd = u.den * u.den;
    if (nrm == dd || nrm == -dd) {
      if (u.den == 2 && mpz_even_p(u.a.get_mpz_t()) && mpz_even_p(u.b.get_mpz_t())) {
        u.a /= 2;
        u.b /= 2;
        u.den = 1;
      }
      return u;
    }
    P = a * Q - P;
    Q = (d - P * P) / Q;
  }
  throw std::runtime_error("fundamental_unit: continued fraction did not close");
}

int unit_norm(Radicand d, const QuadUnit& u) {
  mpz_class n = u.a * u.a - mpz_class(static_cast<long>(d.value())) * u.b * u.b;
  const long dd = u.den * u.den;
  if (n == dd) return 1;
  if (n == -dd) return -1;
  throw std::logic_error("unit_norm: not a unit");
}

mpz_class form_class_number(i64 D) {
  if (D < 0) {
    const i64 N = -D;
    i64 count = 0;
    for (i64 a = 1; 3 * a * a <= N; ++a) {
      for (i64 b = -a + 1; b <= a; ++b) {
        if (floor_mod(b - D, 2) != 0) continue;
        i64 num = b * b - D;
        if (num % (4 * a)) continue;
        i64 c = num / (4 * a);
        if (c < a) continue;
        if (b < 0 && a == c) continue;
        if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
        ++count;
      }
    }
    return count;
  }
  const i64 s = isqrt64(D);
  if (s * s == D) throw std::invalid_argument("form_class_number: square discriminant");
  // Reduced indefinite forms: 0 < b < sqrt D, sqrt D - b < 2|a| < sqrt D + b.
  auto gt_sqrtD = [&](i64 x) { return x > 0 && x * x > D; };
  auto lt_sqrtD = [&](i64 x) { return x <= 0 || x * x < D; };
  std::set<Form> reduced;
  for (i64 b = 1; b <= s; ++b) {
    if (floor_mod(b - D, 2) != 0) continue;
    i64 n = (D - b * b) / 4;  // = -ac > 0
    std::vector<i64> divisors;
    for (i64 a = 1; a * a <= n; ++a) {
      if (n % a) continue;
      divisors.push_back(a);
      if (a * a != n) divisors.push_back(n / a);
    }
    for (i64 a : divisors) {
      if (!gt_sqrtD(2 * a + b) || !lt_sqrtD(2 * a - b)) continue;
      i64 c = n / a;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      reduced.insert({a, b, -c});
      reduced.insert({-a, b, c});
    }
  }
  auto rho = [&](const Form& f) {
    i64 m = 2 * (f.c < 0 ? -f.c : f.c);
    i64 bb = s - floor_mod(s + f.b, m);
    i64 num = bb * bb - D;
    return Form{f.c, bb, num / (4 * f.c)};
  };
  std::set<Form> seen;
  i64 cycles = 0;
  for (const Form& f : reduced) {
    if (seen.count(f)) continue;
    ++cycles;
    Form g = f;
    do {
      if (!reduced.count(g)) throw std::logic_error("form_class_number: rho left the reduced set");
      seen.insert(g);
      g = rho(g);
    } while (!(g == f));
  }
  return cycles;
}

mpz_class class_number(Radicand d) {
  const i64 D = fundamental_discriminant(d);
  if (d.value() < 0) return form_class_number(D);
  mpz_class hplus = form_class_number(D);
  // h+ = h when N(eps) = -1, else h+ = 2h.
  if (unit_norm(d, fundamental_unit(d)) == -1) return hplus;
  return hplus / 2;
}

mpz_class two_part(const mpz_class& n) {
  if (n == 0) throw std::invalid_argument("two_part: zero");
  mp_bitcnt_t v = mpz_scan1(n.get_mpz_t(), 0);
  mpz_class r = 1;
  r <<= v;
  return r;
}

mpz_class two_class_number(Radicand d) { return two_part(class_number(d)); }

int m_exponent(OddPrime q) {
  mpz_class h2 = two_class_number(Radicand(-2 * q.value()));
  int m = static_cast<int>(mpz_scan1(h2.get_mpz_t(), 0));
  if (m < 2)
    throw std::domain_error("m_exponent: h_2(-2q) = " + h2.get_str() + " < 4 for q = " +
                            std::to_string(q.value()));
  return m;
}

QuadInvariants compute_invariants(Radicand d) {
  QuadInvariants inv;
  inv.d = d.value();
  inv.disc = fundamental_discriminant(d);
  if (d.value() > 0) {
    inv.eps = fundamental_unit(d);
    inv.eps_norm = unit_norm(d, *inv.eps);
    mpz_class hplus = form_class_number(inv.disc);
    inv.h = *inv.eps_norm == -1 ? hplus : mpz_class(hplus / 2);
  } else {
    inv.h = form_class_number(inv.disc);
  }
  inv.h2 = two_part(inv.h);
  return inv;
}

std::string serialize(const QuadInvariants& inv) {
  std::ostringstream os;
  os << inv.d << ',' << inv.disc << ',';
  if (inv.eps) {
    os << inv.eps->a.get_str() << ',' << inv.eps->b.get_str() << ',' << inv.eps->den << ','
       << *inv.eps_norm;
  } else {
    os << "-,-,-,-";
  }
  os << ',' << inv.h.get_str() << ',' << inv.h2.get_str();
  return os.str();
}

QuadInvariants parse_invariants(const std::string& line) {
  std::vector<std::string> f;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) f.push_back(tok);
  if (f.size() != 8) throw std::runtime_error("invariant record needs 8 fields: " + line);
  QuadInvariants inv;
  inv.d = std::stoll(f[0]);
  inv.disc = std::stoll(f[1]);
  if (f[2] != "-") {
    inv.eps = QuadUnit{mpz_class(f[2]), mpz_class(f[3]), std::stoi(f[4])};
    inv.eps_norm = std::stoi(f[5]);
  }
  inv.h = mpz_class(f[6]);
  inv.h2 = mpz_class(f[7]);
  if ((inv.d > 0) != inv.eps.has_value())
    throw std::runtime_error("invariant record: unit presence does not match sign of d: " + line);
  return inv;
}

InvariantCache::InvariantCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(*path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    QuadInvariants inv = parse_invariants(line);
    auto [it, fresh] = table_.emplace(inv.d, inv);
    if (!fresh && !(it->second == inv))
      throw std::runtime_error("invariant cache: conflicting records for d = " +
                               std::to_string(inv.d));
  }
}

const QuadInvariants& InvariantCache::get(i64 d) {
  {
    std::lock_guard lk(mu_);
    auto it = table_.find(d);
    if (it != table_.end()) return it->second;
  }
  QuadInvariants inv = compute_invariants(Radicand(d));
  insert(inv);
  std::lock_guard lk(mu_);
  return table_.at(d);
}

void InvariantCache::insert(const QuadInvariants& inv) {
  std::lock_guard lk(mu_);
  auto [it, fresh] = table_.emplace(inv.d, inv);
  if (!fresh) {
    if (!(it->second == inv))
      throw std::runtime_error("invariant cache: collision with different values for d = " +
                               std::to_string(inv.d));
    return;
  }
  pending_.push_back(inv.d);
}

void InvariantCache::flush() {
  std::lock_guard lk(mu_);
  if (!path_ || pending_.empty()) return;
  std::ofstream out(*path_, std::ios::app);
  for (i64 d : pending_) out << serialize(table_.at(d)) << '\n';
  pending_.clear();
}

std::size_t InvariantCache::size() const {
  std::lock_guard lk(mu_);
  return table_.size();
}

}  // namespace mqt
