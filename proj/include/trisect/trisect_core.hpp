#pragma once

// The map f(x) = x^3 - 3x on Q and Q(sqrt(d)), the decision procedure for
// trisection numbers, the preimage height bound, and the density experiment.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trisect/certificate.hpp"
#include "trisect/exact_arith.hpp"
#include "trisect/height_enum.hpp"

namespace trisect {

/// Unreduced f-image (A1 + A2 sqrt(d))/B with G = gcd(A1, A2, B).
struct ImageTriple {
  BigInt A1;
  BigInt A2;
  BigInt B;
  BigInt G;
};

Rational apply_f(const Rational& x);
QuadElem apply_f(const QuadElem& x);
FieldElement apply_f(const FieldElement& x);

/// Throws GcdBoundViolated if G does not divide 8d.
ImageTriple raw_image(const QuadElem& x);

/// Machine-integer image of a canonical tuple (d = 0 for Q): reduced image and G.
struct TupleImage {
  Tuple image;
  std::int64_t G = 1;
};
/// Throws GcdBoundViolated if G does not divide 8d (or G != 1 over Q).
TupleImage image_of(const Tuple& t, std::int64_t d);

/// Smallest integer S with S^3 >= 8T, where T = R over Q and T = 8dR over Q(sqrt(d)):
/// the rounded-up 2 T^(1/3).
BigInt preimage_bound(const FieldDescriptor& field, const Rational& R);

/// D (x^3 - 3 E^2 x).
Rational phi_curve(const Rational& D, const Rational& E, const Rational& x);

struct PhiBoundCheck {
  Rational phi;
  bool hypothesis = false;     // E^3 <= T
  bool upper_premise = false;  // phi <= D T
  bool upper_claim = false;    // x <= 2 T^(1/3)
  bool lower_premise = false;  // phi >= -D T
  bool lower_claim = false;    // x >= -2 T^(1/3)
  bool odd_symmetry = false;   // phi(-x) = -phi(x)
  /// hypothesis implies (premise implies claim) on both sides, and odd symmetry.
  bool consistent() const;
};
PhiBoundCheck phi_bound_check(const Rational& D, const Rational& E, const Rational& T, const Rational& x);

enum class Method { RationalFastPath, BoundedSearch, Certificate };
std::string to_string(Method m);

struct TrisectionVerdict {
  FieldDescriptor field;
  FieldElement a;
  bool member = false;
  std::optional<FieldElement> witness;
  Method method = Method::BoundedSearch;
  std::optional<Certificate> certificate;
  BigInt search_bound;  // S used by the bounded search, 0 on the fast path
};

/// a = p/q lies in f(Q) iff q = s^3 and r (r^2 - 3 s^2) = p for some integer
/// |r| <= 2s. Returns the smallest such r/s.
std::optional<Rational> rational_fast_path(const Rational& a);

/// First beta in (b, a1, a2) order with height <= S and f(beta) = a.
std::optional<FieldElement> bounded_search(const FieldDescriptor& field, const FieldElement& a, const BigInt& S);

/// OutOfRange if |a| > 2. Over Q the fast path decides; over Q(sqrt(d)) the
/// bounded search does. A matching certificate, once re-verified, is attached
/// and the method reported as Certificate.
TrisectionVerdict decide_trisection(const FieldDescriptor& field, const FieldElement& a);

/// BadParameters unless r, s nonzero, gcd(r, s) = 1 and 3 divides neither.
Certificate eisenstein_cert_3rs(const BigInt& r, const BigInt& s);

struct SquareFamilyReport {
  std::int64_t H = 0;
  std::uint64_t checked = 0;
  std::vector<Rational> members;  // squares decided as members; expected empty
};
SquareFamilyReport square_family_check(std::int64_t H);

/// (a, b) with 3a + bk = 1; BadParameters if 3 | k.
std::pair<BigInt, BigInt> yates_certificate(const BigInt& k);
Certificate yates_bezout(const BigInt& k);

struct DensityPoint {
  std::int64_t R = 0;
  BigInt num;
  BigInt den;
  double delta = 0;
};

struct DensityReport {
  FieldDescriptor field;
  std::vector<DensityPoint> points;
  std::optional<double> slope;  // needs three points with delta > 0
  double target_exponent = 0;
};

/// R_list strictly increasing with R >= 1; CapExceeded if the preimage ball
/// B_K(S(max R)) holds more than cap elements.
DensityReport density_experiment(const FieldDescriptor& field, const std::vector<std::int64_t>& R_list,
                                 unsigned shards, std::uint64_t cap);
DensityReport density_experiment(const FieldDescriptor& field, const std::vector<std::int64_t>& R_list,
                                 unsigned shards = 1);

/// Unweighted least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// BadParameters unless m odd, gcd(m, 6) = 1, m > 1, q prime and q <= 2^m.
Certificate nonconstructible_witness(std::uint64_t m, std::uint64_t q);

}  // namespace trisect
