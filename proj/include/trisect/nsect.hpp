#pragma once

// n-section in the cos convention: P(x, a) with P(cos t, cos(p t)) = 0, its
// structural facts, Eisenstein certificates and the reduction to odd primes.

#include <cstdint>
#include <string>

#include "trisect/certificate.hpp"
#include "trisect/polyalg.hpp"

namespace trisect {

/// P(x, a) = body(x) - a.
struct PsectionPoly {
  std::uint64_t p = 0;
  std::uint64_t q = 0;  // (p - 1) / 2
  IntPoly body;

  RatPoly with_parameter(const Rational& a) const;
};

/// NotOddPrime unless p is an odd prime.
PsectionPoly psection_poly(std::uint64_t p);

struct StructureReport {
  std::uint64_t p = 0;
  bool degree_ok = false;
  bool leading_ok = false;        // 2^(p-1)
  bool binomial_sum_ok = false;   // sum_k C(p, 2k) = 2^(p-1)
  bool x_coeff_ok = false;        // (-1)^q p
  bool divisibility_ok = false;   // p divides every non-leading coefficient
  BigInt leading;
  BigInt x_coeff;
  bool ok() const { return degree_ok && leading_ok && binomial_sum_ok && x_coeff_ok && divisibility_ok; }
};
StructureReport verify_structure(const PsectionPoly& pp);

/// dd^p P(x, c/dd) with integer coefficients.
IntPoly cleared_psection(std::uint64_t p, const BigInt& c, const BigInt& dd);

/// BadParameters unless p | c, p^2 does not divide c, gcd(c, dd) = 1, dd > 0 and |c| <= dd.
Certificate nonsectability_cert(std::uint64_t p, const BigInt& c, const BigInt& dd);

struct NsectReduction {
  std::uint64_t n = 0;
  bool power_of_two = false;
  std::uint64_t p = 0;  // smallest odd prime factor when not a power of two
  std::string rationale;
};
NsectReduction nsect_reduce(std::uint64_t n);

/// BadParameters unless gcd(n, m) = 1.
Certificate dense_family_certificate(const BigInt& n, const BigInt& m);

/// 2 P(x, a) = p(2x, 2a) for p = 3, p(x, a) = x^3 - 3x - a, compared as exact
/// polynomials in x together with the coefficient of a.
bool cubic_bridge_holds();

}  // namespace trisect
