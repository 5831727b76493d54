#include "trisect/bigfloat.hpp"

#include <algorithm>
#include <vector>

#include "trisect/error.hpp"

namespace trisect {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  // Swapping leaves o with a valid, freshly initialised value.
  mpfr_init2(v_, o.prec());
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() {
  mpfr_clear(v_);
}

BigFloat BigFloat::from_int(const BigInt& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_z(r.v_, v.get_mpz_t(), rnd);
  return r;
}

BigFloat BigFloat::from_rational(const Rational& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, v.raw().get_mpq_t(), rnd);
  return r;
}

BigFloat BigFloat::from_double(double v, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data());
}

BigFloat abs_up(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  return r;
}

// ---------------------------------------------------------------- Interval

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval::Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

Interval Interval::exact(const BigInt& v, mpfr_prec_t prec) {
  return Interval(BigFloat::from_int(v, prec, MPFR_RNDD), BigFloat::from_int(v, prec, MPFR_RNDU));
}

Interval Interval::exact(const Rational& v, mpfr_prec_t prec) {
  return Interval(BigFloat::from_rational(v, prec, MPFR_RNDD), BigFloat::from_rational(v, prec, MPFR_RNDU));
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::sqrt(const Interval& x) {
  if (mpfr_sgn(x.lo_.get()) < 0) fail(ErrorCode::OutOfRange, "sqrt of an interval reaching below zero");
  Interval r(x.prec());
  mpfr_sqrt(r.lo_.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_sqrt(r.hi_.get(), x.hi_.get(), MPFR_RNDU);
  return r;
}

namespace {

// floor(v / pi) taken at the rounding-safe end: low end for dir < 0, high end otherwise.
BigInt floor_over_pi(const BigFloat& v, int dir) {
  const mpfr_prec_t prec = v.prec();
  Interval q = Interval(v, v) / Interval::pi(prec);
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), dir < 0 ? q.lo().get() : q.hi().get(), MPFR_RNDD);
  return out;
}

}  // namespace

Interval Interval::cos(const Interval& x) {
  const mpfr_prec_t prec = x.prec();
  const BigInt k_lo = floor_over_pi(x.lo_, -1);
  const BigInt k_hi = floor_over_pi(x.hi_, +1);
  Interval r(prec);
  if (k_hi - k_lo >= 2) {
    mpfr_set_si(r.lo_.get(), -1, MPFR_RNDD);
    mpfr_set_si(r.hi_.get(), 1, MPFR_RNDU);
    return r;
  }
  BigFloat c_lo_d(prec), c_lo_u(prec), c_hi_d(prec), c_hi_u(prec);
  mpfr_cos(c_lo_d.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_cos(c_lo_u.get(), x.lo_.get(), MPFR_RNDU);
  mpfr_cos(c_hi_d.get(), x.hi_.get(), MPFR_RNDD);
  mpfr_cos(c_hi_u.get(), x.hi_.get(), MPFR_RNDU);
  mpfr_min(r.lo_.get(), c_lo_d.get(), c_hi_d.get(), MPFR_RNDD);
  mpfr_max(r.hi_.get(), c_lo_u.get(), c_hi_u.get(), MPFR_RNDU);
  if (k_hi != k_lo) {
    // One multiple of pi inside: cos reaches +1 at even multiples, -1 at odd.
    if (mpz_even_p(k_hi.get_mpz_t()))
      mpfr_set_si(r.hi_.get(), 1, MPFR_RNDU);
    else
      mpfr_set_si(r.lo_.get(), -1, MPFR_RNDD);
  }
  return r;
}

Interval Interval::sin(const Interval& x) {
  Interval half_pi = pi(x.prec()) * exact(Rational(BigInt(1), BigInt(2)), x.prec());
  return cos(x - half_pi);
}

BigFloat Interval::width() const {
  BigFloat w(prec());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

BigFloat Interval::magnitude() const {
  BigFloat a = abs_up(lo_), b = abs_up(hi_);
  BigFloat m(prec());
  mpfr_max(m.get(), a.get(), b.get(), MPFR_RNDU);
  return m;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

double Interval::mid() const {
  BigFloat m(prec() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  return m.to_double() / 2.0;
}

Interval Interval::operator-() const {
  Interval r(prec());
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec(), b.prec()));
  mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = std::max(a.prec(), b.prec());
  Interval r(prec);
  const mpfr_srcptr xs[2] = {a.lo_.get(), a.hi_.get()};
  const mpfr_srcptr ys[2] = {b.lo_.get(), b.hi_.get()};
  BigFloat t(prec);
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), r.lo_.get())) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), r.hi_.get())) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) fail(ErrorCode::DivisionByZero, "interval division by an interval containing zero");
  const mpfr_prec_t prec = std::max(a.prec(), b.prec());
  Interval inv(prec);
  mpfr_ui_div(inv.lo_.get(), 1, b.hi_.get(), MPFR_RNDD);
  mpfr_ui_div(inv.hi_.get(), 1, b.lo_.get(), MPFR_RNDU);
  return a * inv;
}

}  // namespace trisect
