#include <doctest.h>

#include "trisect/algdeg.hpp"
#include "trisect/certificate.hpp"
#include "trisect/error.hpp"
#include "trisect/polyalg.hpp"
#include "trisect/verify_suite.hpp"

using namespace trisect;

namespace {

IntPoly ip(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

}  // namespace

TEST_SUITE("polyalg") {
  TEST_CASE("Eisenstein") {
    CHECK(eisenstein_check(ip({-3, -3, 0, 1}), BigInt(3)));
    CHECK(eisenstein_check(ip({-2, 0, 1}), BigInt(2)));
    CHECK_FALSE(eisenstein_check(ip({-1, 0, 1}), BigInt(2)));
    CHECK_THROWS_AS(eisenstein_check(ip({-2, 0, 1}), BigInt(4)), Error);
  }

  TEST_CASE("rational roots") {
    CHECK(rational_roots(parse_poly("x^3 - 3x")) == std::vector<Rational>{Rational(0)});
    CHECK(rational_roots(parse_poly("x^3 - 3x + 2")) == std::vector<Rational>{Rational(-2), Rational(1)});
    CHECK(rational_roots(parse_poly("x^3 - 3x - 1")).empty());
    CHECK(rational_roots(parse_poly("8x^3 - 24x + 11")) ==
          std::vector<Rational>{Rational(BigInt(1), BigInt(2))});
  }

  TEST_CASE("resultant minimal polynomials") {
    const RatPoly g = parse_poly("x^3 - 3x");
    CHECK(resultant_minpoly(1, Rational(5), g) == ip({-110, 1}));
    CHECK(resultant_minpoly(2, Rational(2), g) == ip({-2, 0, 1}));
    const IntPoly m5 = resultant_minpoly(5, Rational(2), g);
    CHECK(m5.degree() == 5);
    CHECK(m5 == ip({478, 60, -90, 0, 0, 1}));
    const WitnessNumerics wn = witness_numerics(5, 2, m5);
    CHECK(wn.poly_vanishes);
    CHECK(wn.root_error < 1e-20);
  }

  TEST_CASE("cyclotomic") {
    CHECK(cyclotomic(1) == ip({-1, 1}));
    CHECK(cyclotomic(2) == ip({1, 1}));
    CHECK(cyclotomic(12) == ip({1, 0, -1, 0, 1}));
  }

  TEST_CASE("cosine minimal polynomials") {
    CHECK(cos_minimal_poly(1) == ip({-2, 1}));
    CHECK(cos_minimal_poly(12) == ip({-3, 0, 1}));
    CHECK(cos_minimal_poly(5) == ip({-1, 1, 1}));
  }

  TEST_CASE("Chebyshev-like") {
    CHECK(chebyshev_like(2) == ip({-2, 0, 1}));
    CHECK(chebyshev_like(1) == ip({0, 1}));
    CHECK(chebyshev_like(4) == ip({2, 0, -4, 0, 1}));
  }

  TEST_CASE("text forms") {
    const IntPoly p = ip({-2, 0, 1});
    CHECK(to_string(p) == "-2 + 1*x^2");
    CHECK(int_poly_from_strings(to_coeff_strings(p)) == p);
    CHECK(parse_poly("x^3 - 3x - 1/2") ==
          RatPoly{Rational(BigInt(-1), BigInt(2)), Rational(-3), Rational(0), Rational(1)});
  }

  TEST_CASE("properties") {
    for (const auto& r : {check_poly_ring_laws(21, 300), check_planted_roots(22, 200), check_resultant_numerics(),
                          check_cyclotomic_products(200), check_cos_minimal_polys(60), check_chebyshev_tower(10)}) {
      INFO(r.name << ": " << r.first_failure);
      CHECK(r.ok());
      CHECK(r.cases > 0);
    }
  }
}
