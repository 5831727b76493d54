#pragma once

// Dense univariate polynomials over Z and Q, plus the handful of algorithms the
// trisection and degree checks lean on: Eisenstein, rational roots, resultant
// minimal polynomials, cyclotomic and cosine minimal polynomials.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trisect/bigfloat.hpp"
#include "trisect/exact_arith.hpp"

namespace trisect {

template <class C>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<C> coeffs) : c_(coeffs) { normalize(); }

  static Poly constant(const C& v) { return Poly(std::vector<C>{v}); }
  static Poly monomial(const C& v, std::size_t deg) {
    std::vector<C> c(deg + 1);
    c[deg] = v;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(C(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }
  const C& coeff(std::size_t i) const {
    static const C zero{};
    return i < c_.size() ? c_[i] : zero;
  }
  const C& leading() const { return coeff(c_.empty() ? 0 : c_.size() - 1); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<C> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const C& s, const Poly& p) { return Poly::constant(s) * p; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Multiply by x^k.
  Poly shift(std::size_t k) const {
    if (is_zero()) return Poly();
    std::vector<C> r(k);
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r));
  }

  Poly derivative() const {
    std::vector<C> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(C(static_cast<long>(i)) * c_[i]);
    return Poly(std::move(r));
  }

  /// this(inner(x)) by Horner.
  Poly compose(const Poly& inner) const {
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + Poly::constant(*it);
    return r;
  }

  /// Horner evaluation; embed maps a coefficient into the value type.
  template <class T, class Embed>
  T eval_with(const T& x, Embed embed) const {
    if (c_.empty()) return embed(C(0));
    T r = embed(c_.back());
    for (std::size_t i = c_.size() - 1; i-- > 0;) r = r * x + embed(c_[i]);
    return r;
  }
  C eval(const C& x) const {
    return eval_with(x, [](const C& c) { return c; });
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<C> c_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<Rational>;

RatPoly to_rat(const IntPoly& p);
/// gcd of the coefficients, >= 0.
BigInt content(const IntPoly& p);
/// Clears denominators and divides by the content; leading coefficient > 0.
IntPoly primitive_part(const RatPoly& p);
IntPoly primitive_part(const IntPoly& p);

std::pair<RatPoly, RatPoly> div_rem(const RatPoly& a, const RatPoly& b);
/// a / b in Z[x]; throws BadParameters when the division is not exact.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
/// Monic gcd over Q (zero if both are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);
bool is_squarefree(const IntPoly& p);

/// Text "c0 + c1*x + ... + ck*x^k", zero coefficients omitted.
std::string to_string(const IntPoly& p);
std::string to_string(const RatPoly& p);
/// Accepts the text form above; missing coefficients read as 1.
RatPoly parse_poly(std::string_view text);
std::vector<std::string> to_coeff_strings(const IntPoly& p);
std::vector<std::string> to_coeff_strings(const RatPoly& p);
IntPoly int_poly_from_strings(const std::vector<std::string>& coeffs);

/// Certified enclosure of p(x).
Interval eval_enclosure(const IntPoly& p, const Interval& x);

/// prime must be prime (NotPrime otherwise); p nonzero.
bool eisenstein_check(const IntPoly& p, const BigInt& prime);

/// All rational zeros, ascending and without repetition.
std::vector<Rational> rational_roots(const RatPoly& p);

/// Res_y(y^m - q, g(y) - x) as a primitive integer polynomial in x with
/// positive leading coefficient: the characteristic polynomial of g(beta) for
/// beta a root of y^m - q.
IntPoly resultant_minpoly(std::uint64_t m, const Rational& q, const RatPoly& g);

/// Determinant of a square matrix over Z[x] by fraction-free elimination.
IntPoly bareiss_determinant(std::vector<std::vector<IntPoly>> mat);

IntPoly cyclotomic(std::uint64_t m);
/// Minimal polynomial of 2cos(2*pi/m).
IntPoly cos_minimal_poly(std::uint64_t m);
/// C_0 = 2, C_1 = x, C_{n+1} = x*C_n - C_{n-1}; C_n(2cos t) = 2cos(n t).
IntPoly chebyshev_like(std::uint64_t n);

}  // namespace trisect
