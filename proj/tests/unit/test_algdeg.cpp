#include <doctest.h>

#include "trisect/algdeg.hpp"
#include "trisect/error.hpp"
#include "trisect/verify_suite.hpp"

using namespace trisect;

namespace {

IntPoly ip(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

}  // namespace

TEST_SUITE("algdeg") {
  TEST_CASE("tower") {
    CHECK(p_tower(1) == ip({-2, 0, 1}));
    CHECK(p_tower(2) == ip({2, 0, -4, 0, 1}));
    CHECK(p_tower(3) == ip({2, 0, -16, 0, 20, 0, -8, 0, 1}));
    CHECK_THROWS_AS(p_tower(13), Error);
    CHECK_THROWS_AS(p_tower(5, 16), Error);
  }

  TEST_CASE("tower checks") {
    const TowerReport two = tower_checks(2);
    CHECK(two.ok());
    CHECK(two.exact_cases == 2);
    for (std::uint64_t n = 1; n <= 10; ++n) CHECK(tower_checks(n).ok());
    CHECK(tower_checks(3).numeric_cases == 3);
  }

  TEST_CASE("angle degrees") {
    const AngleNumber a = angle_number(1, 12);
    CHECK(a.minpoly == ip({-3, 0, 1}));
    CHECK(a.value.mid() == doctest::Approx(1.7320508075688772));
    CHECK(angle_degree(1, 1) == 1);
    CHECK(angle_degree(7, 24) == 4);
    CHECK(angle_number(7, 24).value.mid() == doctest::Approx(-0.5176380902050415));
    CHECK_THROWS_AS(angle_degree(2, 12), Error);
  }

  TEST_CASE("degree of 2cos(pi/3 + pi/2^n)") {
    CHECK(cn_degree_check(1).degree == 2);
    CHECK(cn_degree_check(2).degree == 4);
    const DegreeCheck c8 = cn_degree_check(8);
    CHECK(c8.degree == 256);
    CHECK(c8.ok());
    CHECK(dn_index(1) == std::pair<std::uint64_t, std::uint64_t>(11, 12));
    CHECK(cn_index(1) == std::pair<std::uint64_t, std::uint64_t>(5, 12));
    CHECK_THROWS_AS(cn_degree_check(13), Error);
  }

  TEST_CASE("identities and the table") {
    const IdentityReport rep = identity_suite(2);
    CHECK(rep.ok());
    for (const auto& i : rep.identities) CHECK(i.method == "exact");
    CHECK(rep.table.size() == 12);
    bool found = false;
    for (const auto& t : rep.table)
      if (t.n == 1 && t.name == "c") {
        CHECK(t.value == "-1*sqrt(3)");
        found = true;
      }
    CHECK(found);
    const IdentityReport ten = identity_suite(10);
    CHECK(ten.ok());
    CHECK(ten.identities.size() == 80);
    CHECK(ten.max_residual < std::ldexp(1.0, -64));
  }

  TEST_CASE("properties") {
    for (const auto& r : {check_tower_numerics(10, 61, 50), check_degrees(10, 8), check_identities(10)}) {
      INFO(r.name << ": " << r.first_failure);
      CHECK(r.ok());
      CHECK(r.cases > 0);
    }
  }
}
