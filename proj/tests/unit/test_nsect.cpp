#include <doctest.h>

#include "trisect/error.hpp"
#include "trisect/nsect.hpp"
#include "trisect/verify_suite.hpp"

using namespace trisect;

namespace {

IntPoly ip(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

}  // namespace

TEST_SUITE("nsect") {
  TEST_CASE("p-section polynomials") {
    CHECK(psection_poly(3).body == ip({0, -3, 0, 4}));
    CHECK(psection_poly(5).body == ip({0, 5, 0, -20, 0, 16}));
    CHECK(psection_poly(7).body == ip({0, -7, 0, 56, 0, -112, 0, 64}));
    CHECK_THROWS_AS(psection_poly(9), Error);
    CHECK_THROWS_AS(psection_poly(2), Error);
  }

  TEST_CASE("structure") {
    const StructureReport s5 = verify_structure(psection_poly(5));
    CHECK(s5.leading == 16);
    CHECK(s5.x_coeff == 5);
    CHECK(s5.ok());
    const StructureReport s3 = verify_structure(psection_poly(3));
    CHECK(s3.leading == 4);
    CHECK(s3.x_coeff == -3);
    CHECK(verify_structure(psection_poly(11)).ok());
  }

  TEST_CASE("non-sectability certificates") {
    const Certificate a = nonsectability_cert(3, 3, 4);
    CHECK(std::get<PsectionEisenstein>(a.data).cleared == ip({-48, -192, 0, 256}));
    CHECK(verify(a).ok);
    CHECK(verify(nonsectability_cert(5, 5, 7)).ok);
    CHECK_THROWS_AS(nonsectability_cert(3, 9, 10), Error);
    CHECK_THROWS_AS(nonsectability_cert(3, 6, 4), Error);
  }

  TEST_CASE("reduction to odd primes") {
    CHECK(nsect_reduce(8).power_of_two);
    CHECK(nsect_reduce(12).p == 3);
    CHECK(nsect_reduce(15).p == 3);
    CHECK(nsect_reduce(20).p == 5);
  }

  TEST_CASE("dense family") {
    const Certificate ca = dense_family_certificate(5, 4);
    const auto& a = std::get<DenseFamilyBezout>(ca.data);
    CHECK(a.a == 1);
    CHECK(a.b == -1);
    CHECK(a.constructible_hypothesis);
    const Certificate cb = dense_family_certificate(3, 2);
    const auto& b = std::get<DenseFamilyBezout>(cb.data);
    CHECK((b.a == 1 && b.b == -1));
    CHECK_THROWS_AS(dense_family_certificate(5, 10), Error);
    const Certificate cc = dense_family_certificate(7, 2);
    CHECK_FALSE(std::get<DenseFamilyBezout>(cc.data).constructible_hypothesis);
  }

  TEST_CASE("cubic bridge") { CHECK(cubic_bridge_holds()); }

  TEST_CASE("properties") {
    for (const auto& r : {check_psection_numerics(31, 51, 100), check_psection_structure(101),
                          check_psection_certificates(52, 100)}) {
      INFO(r.name << ": " << r.first_failure);
      CHECK(r.ok());
      CHECK(r.cases > 0);
    }
  }
}
