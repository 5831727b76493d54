#pragma once

// Exact arithmetic for Q and real quadratic fields Q(sqrt(d)).
//
// Elements are kept in the canonical integer form
//     x = (a1 + a2*sqrt(d)) / b,   b > 0,   gcd(a1, a2, b) = 1,
// with rationals as the special case a2 = 0 (or the Rational type for K = Q).
// The height of x is max(|a1|, |a2|, b). Real comparisons are decided
// exactly by isolating the radical and squaring once.

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "trisect/numtheory.hpp"

namespace trisect {

class Rational {
 public:
  Rational() = default;
  template <std::signed_integral I>
  Rational(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::unsigned_integral I>
  Rational(I v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "num", "num/den" and decimals such as "5.9".
  static Rational parse(std::string_view text);

  const BigInt& num() const { return v_.get_num(); }
  const BigInt& den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }
  double to_double() const { return v_.get_d(); }
  std::string to_string() const;
  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

Rational abs(const Rational& r);
BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);

/// Throws NonSquarefreeRadicand unless d >= 2 and squarefree.
void validate_radicand(std::int64_t d);

class QuadElem {
 public:
  /// Embeds a rational into Q(sqrt(d)).
  QuadElem(const Rational& r, std::int64_t d);

  const BigInt& a1() const { return a1_; }
  const BigInt& a2() const { return a2_; }
  const BigInt& b() const { return b_; }
  std::int64_t d() const { return d_; }

  bool is_rational() const { return a2_ == 0; }
  bool is_zero() const { return a1_ == 0 && a2_ == 0; }
  /// Requires is_rational().
  Rational rational_value() const;

  QuadElem conjugate() const;
  QuadElem inverse() const;
  Rational norm() const;
  Rational trace() const;
  /// Exact sign of the real number.
  int sign() const;
  double to_double() const;

  /// Canonical text "(a1+a2*sqrt(d))/b".
  std::string to_string() const;
  /// Accepts the canonical text plus a few relaxed spellings ("sqrt(2)",
  /// "(1-sqrt(5))/2", "3*sqrt(7)"). Any integer quadruple is canonicalized.
  static QuadElem parse(std::string_view text);

  QuadElem operator-() const;
  friend QuadElem operator+(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator-(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator/(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator+(const QuadElem& x, const Rational& y) { return x + QuadElem(y, x.d_); }
  friend QuadElem operator-(const QuadElem& x, const Rational& y) { return x - QuadElem(y, x.d_); }
  friend QuadElem operator*(const QuadElem& x, const Rational& y) { return x * QuadElem(y, x.d_); }
  friend QuadElem operator/(const QuadElem& x, const Rational& y) { return x / QuadElem(y, x.d_); }
  friend bool operator==(const QuadElem& x, const QuadElem& y) = default;

 private:
  friend QuadElem canonicalize(const BigInt& a1, const BigInt& a2, const BigInt& b, std::int64_t d);
  QuadElem(BigInt a1, BigInt a2, BigInt b, std::int64_t d)
      : a1_(std::move(a1)), a2_(std::move(a2)), b_(std::move(b)), d_(d) {}

  BigInt a1_;
  BigInt a2_;
  BigInt b_{1};
  std::int64_t d_{2};
};

/// (a1 + a2*sqrt(d))/b in canonical form: sign moved into the numerators and
/// the common factor removed, with gcd(0, n) = n.
QuadElem canonicalize(const BigInt& a1, const BigInt& a2, const BigInt& b, std::int64_t d);

/// Exact sign of x + y*sqrt(d), d a non-square.
int sign_of_surd(const BigInt& x, const BigInt& y, std::int64_t d);
int sign_of_surd(__int128 x, __int128 y, std::int64_t d);

using FieldElement = std::variant<Rational, QuadElem>;

BigInt height(const Rational& x);
BigInt height(const QuadElem& x);
BigInt height(const FieldElement& x);

bool in_interval(const Rational& x, const Rational& lo, const Rational& hi);
bool in_interval(const QuadElem& x, const Rational& lo, const Rational& hi);
bool in_interval(const FieldElement& x, const Rational& lo, const Rational& hi);

/// Sign of x - t.
int compare(const QuadElem& x, const Rational& t);

bool is_rational(const FieldElement& x);
std::string to_string(const FieldElement& x);

/// A field K = Q or Q(sqrt(d)) together with its Q-basis. The default bases
/// are {1} and {1, sqrt(d)}; every basis element must be >= 1.
class FieldDescriptor {
 public:
  enum class Kind { Rational, Quadratic };

  static FieldDescriptor rationals();
  static FieldDescriptor quadratic(std::int64_t d);
  /// Custom basis; throws DegenerateBasis if dependent or any element < 1.
  static FieldDescriptor quadratic(std::int64_t d, const QuadElem& v1, const QuadElem& v2);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  int degree() const { return is_rational() ? 1 : 2; }
  /// Radicand, 0 for Q.
  std::int64_t d() const { return d_; }
  const std::vector<FieldElement>& basis() const { return basis_; }
  bool has_standard_basis() const;
  /// ||V||: the product of the basis elements.
  double basis_norm() const;
  std::string name() const;

  /// Rational for K = Q, embedded QuadElem otherwise.
  FieldElement embed(const Rational& r) const;
  /// Parses an element and checks it lies in this field.
  FieldElement parse_element(std::string_view text) const;
  bool contains(const FieldElement& x) const;

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b);

 private:
  Kind kind_ = Kind::Rational;
  std::int64_t d_ = 0;
  std::vector<FieldElement> basis_;
};

/// Height of x computed from its canonical coordinates in the basis {w1, w2}.
BigInt height_in_basis(const QuadElem& x, const QuadElem& w1, const QuadElem& w2);

/// Precomputed change of basis from {1, sqrt(d)} to {w1, w2}.
class BasisChange {
 public:
  BasisChange(const QuadElem& w1, const QuadElem& w2);
  /// Height in the new basis of (a1 + a2*sqrt(d))/b.
  BigInt height(const BigInt& a1, const BigInt& a2, const BigInt& b) const;
  std::int64_t d() const { return d_; }

 private:
  std::int64_t d_;
  BigInt m11_, m12_, m21_, m22_;  // scaled inverse matrix
  BigInt det_;
};

struct CommensurabilityResult {
  BigInt factor;          // smallest D with h2/D <= h1 <= D*h2 on the sample
  bool ok = false;        // factor <= ceiling
  std::uint64_t checked = 0;
  Rational max_h1_over_h2;
  Rational max_h2_over_h1;
};

/// Exhaustive over all x with standard height <= R.
CommensurabilityResult verify_commensurability(std::int64_t d, const QuadElem& w1, const QuadElem& w2,
                                               std::int64_t R, std::int64_t ceiling = 1000);

}  // namespace trisect
