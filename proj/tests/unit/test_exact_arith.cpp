#include <doctest.h>

#include "trisect/error.hpp"
#include "trisect/exact_arith.hpp"
#include "trisect/verify_suite.hpp"

using namespace trisect;

namespace {

QuadElem q(const char* text) { return QuadElem::parse(text); }

}  // namespace

TEST_SUITE("exact_arith") {
  TEST_CASE("canonical form") {
    const QuadElem a = canonicalize(2, 2, 4, 5);
    CHECK(a.a1() == 1);
    CHECK(a.a2() == 1);
    CHECK(a.b() == 2);
    const QuadElem b = canonicalize(1, 0, -1, 2);
    CHECK(b.a1() == -1);
    CHECK(b.a2() == 0);
    CHECK(b.b() == 1);
    const QuadElem c = canonicalize(4, -4, 8, 5);
    CHECK(c.to_string() == "(1-1*sqrt(5))/2");
    CHECK(canonicalize(0, 0, 7, 3) == QuadElem(Rational(0), 3));
    CHECK_THROWS_AS(canonicalize(1, 1, 0, 2), Error);
  }

  TEST_CASE("radicand validation") {
    CHECK_NOTHROW(validate_radicand(6));
    CHECK_THROWS_AS(validate_radicand(8), Error);
    CHECK_THROWS_AS(validate_radicand(1), Error);
    try {
      validate_radicand(12);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonSquarefreeRadicand);
    }
  }

  TEST_CASE("heights") {
    CHECK(height(Rational::parse("-11/8")) == 11);
    CHECK(height(Rational(0)) == 1);
    CHECK(height(q("(1+sqrt(5))/2")) == 2);
  }

  TEST_CASE("field operations") {
    CHECK((q("1+sqrt(2)") * q("1-sqrt(2)")) == QuadElem(Rational(-1), 2));
    CHECK(q("(1+sqrt(5))/2").conjugate() == q("(1-sqrt(5))/2"));
    CHECK(q("sqrt(2)").inverse().to_string() == "(0+1*sqrt(2))/2");
    CHECK(q("1+sqrt(2)").norm() == Rational(-1));
    CHECK_THROWS_AS(QuadElem(Rational(0), 2).inverse(), Error);
    CHECK_THROWS_AS(q("sqrt(2)") + q("sqrt(3)"), Error);
  }

  TEST_CASE("interval membership") {
    CHECK(in_interval(q("(1-sqrt(5))/2"), Rational(-2), Rational(2)));
    CHECK(in_interval(Rational::parse("3/2"), Rational(-2), Rational(2)));
    CHECK_FALSE(in_interval(q("2+sqrt(5)"), Rational(-2), Rational(2)));
    CHECK(in_interval(Rational(2), Rational(-2), Rational(2)));
    CHECK(q("1-sqrt(2)").sign() < 0);
    CHECK(q("-3+2*sqrt(2)").sign() < 0);
    CHECK(q("3-2*sqrt(2)").sign() > 0);
  }

  TEST_CASE("heights in another basis") {
    const QuadElem one(Rational(1), 2), w = q("1+sqrt(2)");
    CHECK(height_in_basis(q("sqrt(2)"), one, w) == 1);
    CHECK(height_in_basis(one, one, w) == 1);
    CHECK(height_in_basis(q("(1+sqrt(2))/2"), one, w) == 2);
  }

  TEST_CASE("commensurability under a change of basis") {
    const auto r1 = verify_commensurability(2, QuadElem(Rational(1), 2), q("1+sqrt(2)"), 50);
    CHECK(r1.ok);
    CHECK(r1.factor <= 2);
    const auto r2 = verify_commensurability(2, QuadElem(Rational(1), 2), q("sqrt(2)"), 50);
    CHECK(r2.factor == 1);
    const auto r3 = verify_commensurability(3, QuadElem(Rational(1), 3), q("2*sqrt(3)"), 50);
    CHECK(r3.ok);
    CHECK(r3.factor <= 2);
  }

  TEST_CASE("text round trip") {
    for (const char* s : {"(1+1*sqrt(5))/2", "(-3+0*sqrt(7))/1", "(0-2*sqrt(3))/5"})
      CHECK(QuadElem::parse(s).to_string() == s);
    CHECK(Rational::parse("6/4").to_string() == "3/2");
    CHECK(Rational::parse("5.9") == Rational(BigInt(59), BigInt(10)));
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
  }

  TEST_CASE("field descriptors") {
    const auto K = FieldDescriptor::quadratic(5);
    CHECK(K.name() == "Q(sqrt(5))");
    CHECK(K.contains(K.parse_element("(1+sqrt(5))/2")));
    CHECK_THROWS_AS(K.parse_element("sqrt(2)"), Error);
    CHECK_THROWS_AS(FieldDescriptor::quadratic(2, q("sqrt(2)"), q("2*sqrt(2)")), Error);
  }

  TEST_CASE("properties") {
    for (const auto& r : {check_canonical_forms(11, 2000), check_field_laws(12, 1000),
                          check_interval_agreement(13, 10000), check_height_symmetry(14, 1000)}) {
      INFO(r.name << ": " << r.first_failure);
      CHECK(r.ok());
      CHECK(r.cases > 0);
    }
  }
}
