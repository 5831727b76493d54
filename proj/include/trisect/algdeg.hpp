#pragma once

// Degrees of 2cos values: the tower p_n = p_1 o p_{n-1}, p_1 = x^2 - 2, the
// cyclotomic degree oracle, and the half-angle identities between
//   a_n = 2cos(pi/2^n), b_n = 2sin(pi/2^n),
//   c_n = 2cos(pi/3 + pi/2^n), d_n = 2cos(pi/3 - pi/2^n).

#include <cstdint>
#include <string>
#include <vector>

#include "trisect/bigfloat.hpp"
#include "trisect/polyalg.hpp"

namespace trisect {

inline constexpr std::uint64_t kDefaultDegreeCap = 4096;

/// CapExceeded if 2^n > degree_cap.
IntPoly p_tower(std::uint64_t n, std::uint64_t degree_cap = kDefaultDegreeCap);

struct TowerReport {
  std::uint64_t n = 0;
  bool shape_ok = false;        // x^(2^n) + 2x q(x) +- 2
  bool eisenstein_ok = false;   // at 2
  bool composition_ok = false;  // p_k(a_n) = a_(n-k) for 1 <= k <= n
  unsigned exact_cases = 0;
  unsigned numeric_cases = 0;
  bool chebyshev_ok = false;    // p_n = C_(2^n)
  bool ok() const { return shape_ok && eisenstein_ok && composition_ok && chebyshev_ok; }
};
TowerReport tower_checks(std::uint64_t n, std::uint64_t degree_cap = kDefaultDegreeCap);

/// 2cos(2 pi j / m) with its minimal polynomial and a certified enclosure.
struct AngleNumber {
  std::uint64_t j = 0;
  std::uint64_t m = 0;
  IntPoly minpoly;
  Interval value;
  double residual = 0;  // bound on |minpoly(value)|
};

/// NotCoprime unless gcd(j, m) = 1. Checks that the minimal polynomial
/// vanishes on the enclosure of the value to within 1e-25.
AngleNumber angle_number(std::uint64_t j, std::uint64_t m);
std::uint64_t angle_degree(std::uint64_t j, std::uint64_t m);

/// (j, m) for c_n and d_n, with d_n's numerator taken as a positive residue.
std::pair<std::uint64_t, std::uint64_t> cn_index(std::uint64_t n);
std::pair<std::uint64_t, std::uint64_t> dn_index(std::uint64_t n);

struct DegreeCheck {
  std::uint64_t n = 0;
  std::uint64_t j = 0;
  std::uint64_t m = 0;
  bool coprime = false;
  std::uint64_t degree = 0;
  std::uint64_t expected = 0;
  bool ok() const { return coprime && degree == expected; }
};
/// CapExceeded if 2^n > degree_cap.
DegreeCheck cn_degree_check(std::uint64_t n, std::uint64_t degree_cap = kDefaultDegreeCap);
DegreeCheck dn_degree_check(std::uint64_t n, std::uint64_t degree_cap = kDefaultDegreeCap);
/// a_n has degree 2^(n-1).
DegreeCheck an_degree_check(std::uint64_t n, std::uint64_t degree_cap = kDefaultDegreeCap);

struct IdentityResult {
  std::string identity;
  std::uint64_t n = 0;
  std::string method;     // "exact" or "interval"
  bool holds = false;
  double residual = 0;    // upper bound on |lhs - rhs|
  mpfr_prec_t precision = 0;
};

struct TableEntry {
  std::uint64_t n = 0;
  std::string name;   // "a", "b", "c", "d"
  std::string value;  // exact form over Q(sqrt 2, sqrt 3)
  bool ok = false;    // satisfies its minimal polynomial and matches the enclosure
};

struct IdentityReport {
  std::uint64_t N = 0;
  std::vector<IdentityResult> identities;
  std::vector<TableEntry> table;
  double max_residual = 0;
  bool ok() const;
};
IdentityReport identity_suite(std::uint64_t N);

}  // namespace trisect
