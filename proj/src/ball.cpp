#include "mqt/ball.hpp"

#include <cmath>
#include <memory>
#include <utility>

namespace mqt {

namespace {
constexpr mpfr_prec_t kRadPrec = 64;
}

Ball::Ball(mpfr_prec_t prec) {
  mpfr_init2(mid_, prec);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

Ball::Ball(const mpz_class& z, mpfr_prec_t prec) : Ball(prec) {
  if (mpfr_set_z(mid_, z.get_mpz_t(), MPFR_RNDN) != 0) add_ulp();
}

Ball::Ball(const mpq_class& q, mpfr_prec_t prec) : Ball(prec) {
  if (mpfr_set_q(mid_, q.get_mpq_t(), MPFR_RNDN) != 0) add_ulp();
}

Ball::Ball(const Ball& o) {
  mpfr_init2(mid_, mpfr_get_prec(o.mid_));
  mpfr_init2(rad_, kRadPrec);
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
  mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& o) noexcept : Ball(mpfr_get_prec(o.mid_)) {
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
}

Ball& Ball::operator=(const Ball& o) {
  if (this != &o) {
    mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
  }
  return *this;
}

Ball& Ball::operator=(Ball&& o) noexcept {
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
  return *this;
}

Ball::~Ball() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

void Ball::add_ulp() {
  if (mpfr_zero_p(mid_)) return;
  mpfr_t u;
  mpfr_init2(u, kRadPrec);
  mpfr_set_ui_2exp(u, 1, mpfr_get_exp(mid_) - mpfr_get_prec(mid_), MPFR_RNDU);
  mpfr_add(rad_, rad_, u, MPFR_RNDU);
  mpfr_clear(u);
}

Ball Ball::sqrt_of(const mpz_class& n, mpfr_prec_t prec) {
  Ball b(prec);
  mpfr_t t;
  mpfr_init2(t, prec + 64);
  mpfr_set_z(t, n.get_mpz_t(), MPFR_RNDN);
  // n has at most prec + 64 bits in practice; sqrt is correctly rounded.
  int inexact = mpfr_sqrt(b.mid_, t, MPFR_RNDN);
  mpfr_clear(t);
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > static_cast<size_t>(prec + 64)) b.add_ulp();
  if (inexact) b.add_ulp();
  return b;
}

bool Ball::contains_zero() const { return !is_positive() && !is_negative(); }

bool Ball::is_positive() const {
  mpfr_t lo;
  mpfr_init2(lo, mpfr_get_prec(mid_));
  mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
  bool r = mpfr_sgn(lo) > 0;
  mpfr_clear(lo);
  return r;
}

bool Ball::is_negative() const {
  mpfr_t hi;
  mpfr_init2(hi, mpfr_get_prec(mid_));
  mpfr_add(hi, mid_, rad_, MPFR_RNDU);
  bool r = mpfr_sgn(hi) < 0;
  mpfr_clear(hi);
  return r;
}

bool Ball::inside(double lo, double hi) const {
  mpfr_t a, b;
  mpfr_init2(a, mpfr_get_prec(mid_));
  mpfr_init2(b, mpfr_get_prec(mid_));
  mpfr_sub(a, mid_, rad_, MPFR_RNDD);
  mpfr_add(b, mid_, rad_, MPFR_RNDU);
  bool r = mpfr_cmp_d(a, lo) > 0 && mpfr_cmp_d(b, hi) < 0;
  mpfr_clear(a);
  mpfr_clear(b);
  return r;
}

static mpfr_prec_t common_prec(const Ball& x, const Ball& y) {
  return std::max(x.precision(), y.precision());
}

Ball operator+(const Ball& x, const Ball& y) {
  Ball r(common_prec(x, y));
  int inexact = mpfr_add(r.mid_, x.mid_, y.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, x.rad_, y.rad_, MPFR_RNDU);
  if (inexact) r.add_ulp();
  return r;
}

Ball operator-(const Ball& x, const Ball& y) { return x + (-y); }

Ball Ball::operator-() const {
  Ball r(*this);
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

Ball Ball::abs() const {
  Ball r(*this);
  mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

Ball operator*(const Ball& x, const Ball& y) {
  Ball r(common_prec(x, y));
  int inexact = mpfr_mul(r.mid_, x.mid_, y.mid_, MPFR_RNDN);
  mpfr_t ax, ay, t;
  mpfr_inits2(kRadPrec, ax, ay, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_abs(ax, x.mid_, MPFR_RNDU);
  mpfr_abs(ay, y.mid_, MPFR_RNDU);
  mpfr_mul(t, ax, y.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, t, MPFR_RNDU);
  mpfr_mul(t, ay, x.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, t, MPFR_RNDU);
  mpfr_mul(t, x.rad_, y.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, t, MPFR_RNDU);
  mpfr_clears(ax, ay, t, static_cast<mpfr_ptr>(nullptr));
  if (inexact) r.add_ulp();
  return r;
}

Ball operator/(const Ball& x, const Ball& y) {
  if (y.contains_zero()) throw PrecisionExhausted("ball division by a ball containing zero");
  Ball r(common_prec(x, y));
  int inexact = mpfr_div(r.mid_, x.mid_, y.mid_, MPFR_RNDN);
  // |x/y - xm/ym| <= (|xm| yr + |ym| xr) / (|ym| (|ym| - yr))
  mpfr_t ax, ay, num, t, den;
  mpfr_inits2(kRadPrec, ax, ay, num, t, den, static_cast<mpfr_ptr>(nullptr));
  mpfr_abs(ax, x.mid_, MPFR_RNDU);
  mpfr_mul(num, ax, y.rad_, MPFR_RNDU);
  mpfr_abs(ay, y.mid_, MPFR_RNDU);
  mpfr_mul(t, ay, x.rad_, MPFR_RNDU);
  mpfr_add(num, num, t, MPFR_RNDU);
  mpfr_abs(ay, y.mid_, MPFR_RNDD);
  mpfr_sub(den, ay, y.rad_, MPFR_RNDD);
  mpfr_mul(den, den, ay, MPFR_RNDD);
  mpfr_div(r.rad_, num, den, MPFR_RNDU);
  mpfr_clears(ax, ay, num, t, den, static_cast<mpfr_ptr>(nullptr));
  if (inexact) r.add_ulp();
  return r;
}

Ball Ball::log() const {
  if (!is_positive()) throw PrecisionExhausted("log of a ball not certainly positive");
  Ball r(precision());
  int inexact = mpfr_log(r.mid_, mid_, MPFR_RNDN);
  // log(m) - log(m - r) <= r / (m - r)
  mpfr_t lo;
  mpfr_init2(lo, precision());
  mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
  mpfr_div(r.rad_, rad_, lo, MPFR_RNDU);
  mpfr_clear(lo);
  if (inexact) r.add_ulp();
  return r;
}

std::string Ball::str(int digits) const {
  char buf[512];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg +/- %.3Rg", digits, mid_, rad_);
  return buf;
}

Ball ComplexBall::log_abs() const {
  Ball s = re * re + im * im;
  return s.log() * Ball(mpq_class(1, 2), s.precision());
}

Ball determinant(std::vector<std::vector<Ball>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Ball(mpz_class(1), 128);
  Ball det(mpz_class(1), m[0][0].precision());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = -1;
    for (std::size_t r = col; r < n; ++r) {
      double v = std::fabs(m[r][col].mid_d());
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (m[piv][col].contains_zero()) throw PrecisionExhausted("determinant: uncertified pivot");
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      Ball f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - f * m[col][c];
    }
  }
  return det;
}

std::vector<mpfr_prec_t> precision_ladder(mpfr_prec_t start) {
  std::vector<mpfr_prec_t> out;
  for (mpfr_prec_t p = std::max<mpfr_prec_t>(start, 64); p <= 1024; p *= 2) out.push_back(p);
  if (out.empty()) out.push_back(start);
  return out;
}

}  // namespace mqt
