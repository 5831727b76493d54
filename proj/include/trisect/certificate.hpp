#pragma once

// Self-contained, re-verifiable certificates. Each payload carries the exact
// integers a third party needs; verify() re-derives everything from them.

#include <cstdint>
#include <string>
#include <variant>

#include <json.hpp>

#include "trisect/exact_arith.hpp"
#include "trisect/polyalg.hpp"

namespace trisect {

/// s * p(x, 3r/s) = s x^3 - 3s x - 3r passes Eisenstein at 3.
struct Eisenstein3rs {
  BigInt r;
  BigInt s;
  Rational a;
  IntPoly cleared;
  bool in_range = false;
};

/// a = c^2 is a nonzero square in [-2, 2].
struct SquareFamily {
  Rational c;
  Rational a;
};

/// 3a + bk = 1: every multiple of pi/k is trisectable.
struct YatesBezout {
  BigInt k;
  BigInt a;
  BigInt b;
};

/// a = f(q^(1/m)) has a minimal polynomial of odd degree m > 1, so it is a
/// trisection number that is not constructible.
struct NonconstructibleWitness {
  std::uint64_t m = 0;
  std::uint64_t q = 0;
  IntPoly minpoly;
  std::string value;     // a to 40 significant digits
  double root_error = 0;  // |root of minpoly near a - a|
};

/// dd^p P(x, c/dd) passes Eisenstein at p: the angle with cosine c/dd is not p-sectable.
struct PsectionEisenstein {
  std::uint64_t p = 0;
  BigInt c;
  BigInt dd;
  IntPoly cleared;
};

/// a n + b m = 1: 2pi/m is n-sectable when 2pi/n is constructible.
struct DenseFamilyBezout {
  BigInt n;
  BigInt m;
  BigInt a;
  BigInt b;
  std::uint64_t phi_n = 0;
  bool constructible_hypothesis = false;  // phi(n) is a power of two
};

struct Certificate {
  std::variant<Eisenstein3rs, SquareFamily, YatesBezout, NonconstructibleWitness, PsectionEisenstein,
               DenseFamilyBezout>
      data;

  /// "eisenstein-3rs", "square-family", "yates-bezout", "nonconstructible-witness",
  /// "psection-eisenstein", "dense-family-bezout".
  std::string kind() const;
};

/// Certified enclosure of a = f(q^(1/m)), whether minpoly vanishes on it, and
/// the distance from a to the nearby root found by Newton iteration.
struct WitnessNumerics {
  Interval a;
  bool poly_vanishes = false;
  double root_error = 0;
  std::string value;
};
WitnessNumerics witness_numerics(std::uint64_t m, std::uint64_t q, const IntPoly& minpoly);

struct VerifyResult {
  bool ok = true;
  std::string reason;
};

VerifyResult verify(const Certificate& cert);

nlohmann::json to_json(const Certificate& cert);
/// Parse errors raise Parse.
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace trisect
