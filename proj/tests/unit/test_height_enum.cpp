#include <doctest.h>

#include <algorithm>

#include "../oracles.hpp"
#include "trisect/coprime_count.hpp"
#include "trisect/error.hpp"
#include "trisect/height_enum.hpp"
#include "trisect/verify_suite.hpp"

using namespace trisect;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

std::vector<Tuple> from_oracle(const std::vector<oracle::Elem>& v) {
  std::vector<Tuple> out;
  for (const auto& e : v) out.push_back(Tuple{e.a1, e.a2, e.b});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("height_enum") {
  TEST_CASE("small balls") {
    CHECK(enumerate_ball(Q, Rational(1)).size() == 3);
    CHECK(enumerate_ball(Q, Rational(2)).size() == 7);
    CHECK(enumerate_ball(FieldDescriptor::quadratic(2), Rational(1)).size() == 9);
    CHECK(count_ball(Q, Rational(2)) == 7);
    CHECK(count_ball(FieldDescriptor::quadratic(2), Rational(1)) == 9);
  }

  TEST_CASE("enumeration matches the oracle element for element") {
    for (std::int64_t d : {0, 2, 3, 5}) {
      const FieldDescriptor f = d == 0 ? Q : FieldDescriptor::quadratic(d);
      for (std::int64_t R : {1, 4, 9}) {
        auto got = enumerate_ball(f, Rational(R));
        std::sort(got.begin(), got.end());
        CHECK(got == from_oracle(oracle::ball(d, R)));
      }
    }
  }

  TEST_CASE("enumeration order is (b, a1, a2)") {
    const auto v = enumerate_ball(FieldDescriptor::quadratic(3), Rational(6));
    CHECK(std::is_sorted(v.begin(), v.end()));
  }

  TEST_CASE("interval restriction") {
    CHECK(count_ball_interval(Q, Rational(2), Rational(-2), Rational(2)) == 7);
    CHECK(count_ball_interval(Q, Rational(5), Rational(-2), Rational(2)) == oracle::band_count(0, 5));
    CHECK(count_ball_interval(FieldDescriptor::quadratic(2), Rational(1), Rational(-2), Rational(2)) == 7);
    for (std::int64_t d : {0, 2, 3, 5, 6, 7})
      for (std::int64_t R : {3, 8, 13}) {
        const FieldDescriptor f = d == 0 ? Q : FieldDescriptor::quadratic(d);
        CHECK(count_ball_interval(f, Rational(R), Rational(-2), Rational(2)) == oracle::band_count(d, R));
        CHECK(enumerate_ball_interval(f, Rational(R), Rational(-2), Rational(2)).size() ==
              static_cast<std::size_t>(oracle::band_count(d, R)));
      }
  }

  TEST_CASE("sharded interval counts agree") {
    const auto K = FieldDescriptor::quadratic(2);
    const BigInt one = count_ball_interval(K, Rational(120), Rational(-2), Rational(2), 1);
    CHECK(count_ball_interval(K, Rational(120), Rational(-2), Rational(2), 4) == one);
  }

  TEST_CASE("main term") {
    const double ratio = count_ball(Q, Rational(1000)).get_d() / ball_main_term(Q, 1000);
    CHECK(std::abs(ratio - 1) < 0.01);
  }

  TEST_CASE("Q(R) box") {
    const QBoxReport r = qbox(Q, 9, 1000000);
    CHECK(r.outer == std::vector<Rational>{Rational(9), Rational(9)});
    CHECK(r.inner == std::vector<Rational>{Rational(9), Rational(BigInt(9), BigInt(2))});
    CHECK(r.violations == 0);
    CHECK(r.checked == r.count);
    CHECK(r.count == sieve_count(Box::integer({9, 9})) - sieve_count(Box::integer({9, 4})));
    const QBoxReport big = qbox(Q, 10000, 1000);
    CHECK(big.sampled);
    CHECK(big.violations == 0);
    CHECK(std::abs(big.ratio - 1) < 0.02);
    CHECK_THROWS_AS(qbox(FieldDescriptor::quadratic(2), 2, 1000), Error);
  }

  TEST_CASE("non-standard bases are rejected") {
    const auto K = FieldDescriptor::quadratic(2, QuadElem(Rational(1), 2), QuadElem::parse("1+sqrt(2)"));
    CHECK_THROWS_AS(enumerate_ball(K, Rational(3)), Error);
  }

  TEST_CASE("cap") { CHECK_THROWS_AS(enumerate_ball(Q, Rational(1000), 100), Error); }

  TEST_CASE("properties") {
    for (const auto& r : {check_ball_counts(60, 25), check_ball_nesting(41, 100), check_ball_asymptotics(10000, 300),
                          check_qbox_membership(200, std::uint64_t{1} << 22), check_qbox_main_term(10000, 300, 1000)}) {
      INFO(r.name << ": " << r.first_failure);
      CHECK(r.ok());
      CHECK(r.cases > 0);
    }
  }
}
