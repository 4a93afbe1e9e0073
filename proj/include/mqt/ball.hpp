#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace mqt {

/// Real ball [mid - rad, mid + rad] backed by MPFR. Every operation widens
/// rad enough to contain the exact result of the operation on the inputs.
class Ball {
 public:
  explicit Ball(mpfr_prec_t prec = 128);
  Ball(const mpz_class& z, mpfr_prec_t prec);
  Ball(const mpq_class& q, mpfr_prec_t prec);
  Ball(const Ball& o);
  Ball(Ball&& o) noexcept;
  Ball& operator=(const Ball& o);
  Ball& operator=(Ball&& o) noexcept;
  ~Ball();

  static Ball sqrt_of(const mpz_class& n, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(mid_); }
  double mid_d() const { return mpfr_get_d(mid_, MPFR_RNDN); }
  double rad_d() const { return mpfr_get_d(rad_, MPFR_RNDU); }

  bool contains_zero() const;
  bool is_positive() const;  // certainly > 0
  bool is_negative() const;  // certainly < 0
  /// Certainly contained in the open interval (lo, hi).
  bool inside(double lo, double hi) const;

  friend Ball operator+(const Ball& x, const Ball& y);
  friend Ball operator-(const Ball& x, const Ball& y);
  friend Ball operator*(const Ball& x, const Ball& y);
  friend Ball operator/(const Ball& x, const Ball& y);
  Ball operator-() const;
  Ball abs() const;
  /// Natural log; throws if the ball is not certainly positive.
  Ball log() const;

  std::string str(int digits = 20) const;

 private:
  void add_ulp();  // rad += one ulp of mid (rounding of the last operation)
  mpfr_t mid_;
  mpfr_t rad_;
};

struct ComplexBall {
  Ball re;
  Ball im;
  /// log |z|, computed as log(re^2 + im^2) / 2.
  Ball log_abs() const;
};

/// Determinant by Gaussian elimination with ball entries; throws if a pivot
/// cannot be certified nonzero.
Ball determinant(std::vector<std::vector<Ball>> m);

struct PrecisionExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// 128, 256, 512, 1024 by default; the start can be raised.
std::vector<mpfr_prec_t> precision_ladder(mpfr_prec_t start = 128);

}  // namespace mqt
