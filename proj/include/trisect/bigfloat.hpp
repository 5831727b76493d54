#pragma once

// Thin RAII wrappers over MPFR: a floating value with explicit precision and a
// closed interval with outward rounding for certified enclosures.

#include <string>

#include <mpfr.h>

#include "trisect/exact_arith.hpp"

namespace trisect {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat from_int(const BigInt& v, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static BigFloat from_rational(const Rational& v, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static BigFloat from_double(double v, mpfr_prec_t prec);

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  /// Scientific notation with the given number of significant digits.
  std::string to_string(int digits = 30) const;

 private:
  mpfr_t v_;
};

/// abs(x), rounded up.
BigFloat abs_up(const BigFloat& x);

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(BigFloat lo, BigFloat hi);

  static Interval exact(const BigInt& v, mpfr_prec_t prec);
  static Interval exact(const Rational& v, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);
  /// Enclosure of sqrt(n) for n >= 0.
  static Interval sqrt(const Interval& x);
  static Interval cos(const Interval& x);
  static Interval sin(const Interval& x);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  mpfr_prec_t prec() const { return lo_.prec(); }
  BigFloat width() const;
  /// max(|lo|, |hi|), rounded up.
  BigFloat magnitude() const;
  bool contains_zero() const;
  double mid() const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Divisor must exclude zero.
  friend Interval operator/(const Interval& a, const Interval& b);

 private:
  BigFloat lo_;
  BigFloat hi_;
};

}  // namespace trisect
