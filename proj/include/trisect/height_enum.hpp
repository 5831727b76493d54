#pragma once

// Height balls B_K(R) for K = Q and K = Q(sqrt(d)) in the standard basis:
// enumeration in lexicographic (b, a1, a2) order, exact counts, interval
// restrictions, and the inner box Q(R) used for the density lower bound.

#include <cstdint>
#include <functional>
#include <vector>

#include "trisect/exact_arith.hpp"

namespace trisect {

/// A canonical element (a1 + a2*sqrt(d))/b; a2 = 0 throughout for K = Q.
struct Tuple {
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  std::int64_t b = 1;
  friend bool operator==(const Tuple&, const Tuple&) = default;
  friend auto operator<=>(const Tuple& x, const Tuple& y) {
    if (auto c = x.b <=> y.b; c != 0) return c;
    if (auto c = x.a1 <=> y.a1; c != 0) return c;
    return x.a2 <=> y.a2;
  }
};

FieldElement to_element(const FieldDescriptor& field, const Tuple& t);
Tuple to_tuple(const FieldElement& x);
std::int64_t height(const Tuple& t);

/// The largest integer height admitted by the real bound R (floor(R), or 0).
std::int64_t height_limit(const Rational& R);

using TupleVisitor = std::function<void(const Tuple&)>;

/// Visits B_K(R) with lo <= x <= hi, restricted to denominators in [b_lo, b_hi].
/// Ordered by (b, a1, a2). No cap applies here.
void visit_ball_interval(const FieldDescriptor& field, std::int64_t R, const Rational& lo, const Rational& hi,
                         std::int64_t b_lo, std::int64_t b_hi, const TupleVisitor& visit);
/// Visits all of B_K(R) for denominators in [b_lo, b_hi].
void visit_ball(const FieldDescriptor& field, std::int64_t R, std::int64_t b_lo, std::int64_t b_hi,
                const TupleVisitor& visit);

/// Materialized B_K(R); CapExceeded when |B_K(R)| > cap.
std::vector<Tuple> enumerate_ball(const FieldDescriptor& field, const Rational& R, std::uint64_t cap);
std::vector<Tuple> enumerate_ball(const FieldDescriptor& field, const Rational& R);
std::vector<Tuple> enumerate_ball_interval(const FieldDescriptor& field, const Rational& R, const Rational& lo,
                                           const Rational& hi, std::uint64_t cap);
std::vector<Tuple> enumerate_ball_interval(const FieldDescriptor& field, const Rational& R, const Rational& lo,
                                           const Rational& hi);

/// |B_K(R)| from coprime counts over the sign/zero pattern of the coordinates.
BigInt count_ball(const FieldDescriptor& field, const Rational& R);
/// |B_K(R) ∩ [lo, hi]| by per-denominator Moebius counts.
BigInt count_ball_interval(const FieldDescriptor& field, const Rational& R, const Rational& lo, const Rational& hi,
                           unsigned shards = 1);

/// 2^k R^(k+1) / zeta(k+1): the leading term of |B_K(R)|.
double ball_main_term(const FieldDescriptor& field, double R);

struct QBoxReport {
  std::int64_t R = 0;
  std::vector<Rational> outer;  // n
  std::vector<Rational> inner;  // m
  BigInt count;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  bool sampled = false;
  double main_term = 0;
  double ratio = 0;
};

/// |Q(R)| = |Q(k+1, n)| - |Q(k+1, m)| with membership in B_K(R) ∩ [-2, 2]
/// checked on every element when |Q(R)| <= cap, otherwise on a seeded sample
/// of `samples` elements. Standard basis only.
QBoxReport qbox(const FieldDescriptor& field, std::int64_t R, std::uint64_t cap, std::uint64_t seed = 1,
                std::uint64_t samples = 100000);

}  // namespace trisect
