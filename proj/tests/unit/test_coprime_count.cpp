#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "trisect/coprime_count.hpp"
#include "trisect/error.hpp"
#include "trisect/numtheory.hpp"
#include "trisect/verify_suite.hpp"

using namespace trisect;

TEST_SUITE("coprime_count") {
  TEST_CASE("Moebius") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    const MobiusTable t(1000);
    for (std::uint64_t n = 1; n <= 1000; ++n) CHECK(t[n] == oracle::mobius(static_cast<std::int64_t>(n)));
  }

  TEST_CASE("sieve counts") {
    CHECK(sieve_count(Box::integer({4, 4})) == 11);
    CHECK(sieve_count(Box::integer({1, 1})) == 1);
    CHECK(sieve_count(Box::parse("5.9,3.2")) == 12);
    CHECK(sieve_count(Box::integer({2, 2, 2})) == 7);
    CHECK(sieve_count(Box::integer({100, 100})) == oracle::coprime_tuples({100, 100}));
    CHECK(sieve_count(Box::integer({10, 20, 40})) == oracle::coprime_tuples({10, 20, 40}));
  }

  TEST_CASE("brute counts") {
    CHECK(brute_count(Box::integer({4, 4})) == 11);
    CHECK(brute_count(Box::parse("5.9,3.2")) == 12);
    CHECK(brute_count(Box::integer({10, 20, 40})) == 6718);
    CHECK_THROWS_AS(brute_count(Box::integer({1000, 1000}), 1000), Error);
  }

  TEST_CASE("box validation") {
    CHECK_THROWS_AS(Box::integer({5}), Error);
    CHECK_THROWS_AS(Box::parse("0.5,3"), Error);
  }

  TEST_CASE("eccentricity and budgets") {
    CHECK(eccentricity(Box::integer({4, 4})) == doctest::Approx(1));
    CHECK(eccentricity(Box::integer({6, 2})) == doctest::Approx(3));
    CHECK(eccentricity(Box::integer({2, 4, 8})) == doctest::Approx(4));
    CHECK(error_term_budget(Box::integer({2, 4, 8})) == doctest::Approx(16));
    CHECK(error_term_budget(Box::integer({4, 4})) == doctest::Approx(4 * std::log(4.0)));
    CHECK(error_term_budget(Box::integer({1, 1})) == doctest::Approx(0));
  }

  TEST_CASE("zeta") {
    const double pi = std::acos(-1.0);
    CHECK(zeta(2) == doctest::Approx(pi * pi / 6).epsilon(1e-12));
    CHECK(zeta(4) == doctest::Approx(std::pow(pi, 4) / 90).epsilon(1e-12));
    CHECK(std::abs(zeta(3) - 1.2020569031595942) < 1e-9);
  }

  TEST_CASE("reports") {
    const CountReport r = lehmer_report(Box::integer({100, 100}));
    CHECK(r.count == 6087);
    CHECK(r.main_term == doctest::Approx(6079.27).epsilon(1e-5));
    CHECK(std::abs(r.error) <= r.f_k);
    const CountReport one = lehmer_report(Box::integer({1, 1}));
    CHECK(one.count == 1);
    CHECK(one.error == doctest::Approx(0.392).epsilon(1e-3));
    const CountReport big = lehmer_report(Box::integer({10, 20, 40}));
    CHECK(big.count == brute_count(Box::integer({10, 20, 40})));
  }

  TEST_CASE("sharding does not change counts") {
    const Box b = Box::integer({5000, 3000, 700});
    const BigInt one = sieve_count(b, 1);
    CHECK(sieve_count(b, 3) == one);
    CHECK(sieve_count(b, 8) == one);
    const Box s = Box::integer({60, 50, 40});
    CHECK(brute_count(s, 1000000, 4) == brute_count(s, 1000000, 1));
  }

  TEST_CASE("properties") {
    for (const auto& r : {check_sieve_random(31, 200), check_floor_invariance(32, 200), check_count_monotone(33, 200),
                          check_perturbation_bound(34, 1000), check_error_scaling({100, 1000, 10000})}) {
      INFO(r.name << ": " << r.first_failure);
      CHECK(r.ok());
      CHECK(r.cases > 0);
    }
  }
}
