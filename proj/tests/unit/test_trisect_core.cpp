#include <doctest.h>

#include "../oracles.hpp"
#include "trisect/error.hpp"
#include "trisect/trisect_core.hpp"
#include "trisect/verify_suite.hpp"

using namespace trisect;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();
Rational r(const char* s) { return Rational::parse(s); }
QuadElem qe(const char* s) { return QuadElem::parse(s); }

}  // namespace

TEST_SUITE("trisect_core") {
  TEST_CASE("the map") {
    CHECK(apply_f(Rational(1)) == Rational(-2));
    CHECK(apply_f(r("1/2")) == r("-11/8"));
    CHECK(apply_f(qe("(1+sqrt(5))/2")) == qe("(1-sqrt(5))/2"));
  }

  TEST_CASE("raw images") {
    const ImageTriple a = raw_image(qe("(1+sqrt(5))/2"));
    CHECK(a.A1 == 4);
    CHECK(a.A2 == -4);
    CHECK(a.B == 8);
    CHECK(a.G == 4);
    const ImageTriple b = raw_image(QuadElem(Rational(1), 2));
    CHECK((b.A1 == -2 && b.A2 == 0 && b.B == 1 && b.G == 1));
    const ImageTriple c = raw_image(qe("(1+sqrt(2))/2"));
    CHECK((c.A1 == -5 && c.A2 == -7 && c.B == 8 && c.G == 1));
  }

  TEST_CASE("machine images agree with exact images") {
    for (std::int64_t d : {2, 3, 5, 6, 7})
      for (const auto& e : oracle::ball(d, 8)) {
        const TupleImage t = image_of(Tuple{e.a1, e.a2, e.b}, d);
        const oracle::Elem o = oracle::image(e, d);
        CHECK((t.image.a1 == o.a1 && t.image.a2 == o.a2 && t.image.b == o.b));
      }
  }

  TEST_CASE("preimage bound") {
    CHECK(preimage_bound(Q, Rational(1000)) == 20);
    CHECK(preimage_bound(Q, Rational(1)) == 2);
    CHECK(preimage_bound(FieldDescriptor::quadratic(2), Rational(1000)) == 51);
  }

  TEST_CASE("cubic curve bound instances") {
    const auto a = phi_bound_check(Rational(1), Rational(1), Rational(1), Rational(2));
    CHECK(a.phi == Rational(2));
    CHECK_FALSE(a.upper_premise);
    CHECK(a.consistent());
    CHECK(phi_bound_check(Rational(1), r("1/2"), Rational(1), Rational(0)).phi == Rational(0));
    const auto c = phi_bound_check(Rational(2), Rational(1), Rational(8), Rational(-3));
    CHECK(c.phi == Rational(-36));
    CHECK_FALSE(c.lower_premise);
    CHECK(c.consistent());
  }

  TEST_CASE("decisions") {
    const auto one = decide_trisection(Q, Rational(1));
    CHECK_FALSE(one.member);
    const auto zero = decide_trisection(Q, Rational(0));
    CHECK(zero.member);
    CHECK(*zero.witness == FieldElement(Rational(0)));
    const auto m = decide_trisection(Q, r("-11/8"));
    CHECK(m.member);
    CHECK(*m.witness == FieldElement(r("1/2")));
    const auto h = decide_trisection(Q, r("3/2"));
    CHECK_FALSE(h.member);
    CHECK(h.method == Method::Certificate);
    CHECK(h.certificate->kind() == "eisenstein-3rs");
    const auto s2 = decide_trisection(FieldDescriptor::quadratic(2), qe("sqrt(2)"));
    CHECK(s2.member);
    CHECK(*s2.witness == FieldElement(qe("-sqrt(2)")));
    CHECK_FALSE(decide_trisection(FieldDescriptor::quadratic(3), qe("sqrt(3)")).member);
    CHECK_THROWS_AS(decide_trisection(Q, Rational(3)), Error);
    CHECK_THROWS_AS(decide_trisection(FieldDescriptor::quadratic(3), qe("sqrt(2)")), Error);
  }

  TEST_CASE("decisions match the rational root oracle") {
    for (const auto& e : oracle::ball(0, 40)) {
      if (!oracle::in_unit_band(e, 0)) continue;
      const Rational a(BigInt(e.a1), BigInt(e.b));
      CHECK(decide_trisection(Q, a).member == oracle::cubic_has_rational_root(e.a1, e.b));
    }
  }

  TEST_CASE("Eisenstein certificates for 3r/s") {
    const Certificate a = eisenstein_cert_3rs(1, 2);
    const auto& pa = std::get<Eisenstein3rs>(a.data);
    CHECK(pa.a == r("3/2"));
    CHECK(pa.in_range);
    CHECK(verify(a).ok);
    const Certificate b = eisenstein_cert_3rs(1, 1);
    const auto& pb = std::get<Eisenstein3rs>(b.data);
    CHECK(pb.a == Rational(3));
    CHECK_FALSE(pb.in_range);
    const Certificate c = eisenstein_cert_3rs(2, 5);
    CHECK(std::get<Eisenstein3rs>(c.data).cleared == IntPoly{BigInt(-6), BigInt(-15), BigInt(0), BigInt(5)});
    CHECK(verify(c).ok);
    CHECK_THROWS_AS(eisenstein_cert_3rs(3, 2), Error);
  }

  TEST_CASE("square family") {
    for (const char* a : {"1", "1/4", "16/9"}) CHECK_FALSE(decide_trisection(Q, r(a)).member);
    const auto rep = square_family_check(100);
    CHECK(rep.checked > 0);
    CHECK(rep.members.empty());
  }

  TEST_CASE("Bezout for pi/k") {
    CHECK(yates_certificate(2) == std::pair<BigInt, BigInt>(1, -1));
    CHECK(yates_certificate(4) == std::pair<BigInt, BigInt>(-1, 1));
    CHECK_THROWS_AS(yates_certificate(3), Error);
    CHECK(verify(yates_bezout(7)).ok);
  }

  TEST_CASE("density numerators match the image oracle") {
    const auto d = density_experiment(Q, {10, 30, 60});
    CHECK(d.points[0].num == 5);
    for (const auto& p : d.points) {
      CHECK(p.num == oracle::image_count(0, oracle::icbrt_up(8 * p.R), p.R));
      CHECK(p.den == oracle::band_count(0, p.R));
    }
    const auto K = FieldDescriptor::quadratic(3);
    const auto dk = density_experiment(K, {4, 8, 12});
    for (const auto& p : dk.points) {
      CHECK(p.num == oracle::image_count(3, oracle::icbrt_up(8 * 8 * 3 * p.R), p.R));
      CHECK(p.den == oracle::band_count(3, p.R));
    }
    CHECK(dk.target_exponent == doctest::Approx(-2.0));
  }

  TEST_CASE("density is shard independent") {
    const auto K = FieldDescriptor::quadratic(2);
    const auto a = density_experiment(K, {25, 50}, 1), b = density_experiment(K, {25, 50}, 5);
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      CHECK(a.points[i].num == b.points[i].num);
      CHECK(a.points[i].den == b.points[i].den);
    }
  }

  TEST_CASE("density argument checks") {
    CHECK_THROWS_AS(density_experiment(Q, {10, 5}), Error);
    CHECK_THROWS_AS(density_experiment(Q, {0}), Error);
    CHECK_THROWS_AS(density_experiment(Q, {100000000}, 1, 1000), Error);
  }

  TEST_CASE("non-constructible witnesses") {
    const Certificate w5 = nonconstructible_witness(5, 2);
    const auto& p5 = std::get<NonconstructibleWitness>(w5.data);
    CHECK(p5.minpoly.degree() == 5);
    CHECK(std::stod(p5.value) == doctest::Approx(-1.930).epsilon(1e-3));
    CHECK(verify(w5).ok);
    CHECK(std::get<NonconstructibleWitness>(nonconstructible_witness(7, 2).data).minpoly.degree() == 7);
    CHECK_THROWS_AS(nonconstructible_witness(3, 2), Error);
    CHECK_THROWS_AS(nonconstructible_witness(5, 4), Error);
  }

  TEST_CASE("certificates survive JSON") {
    for (const Certificate& c : {eisenstein_cert_3rs(2, 5), yates_bezout(4), nonconstructible_witness(5, 3)}) {
      const Certificate back = certificate_from_json(to_json(c));
      CHECK(back.kind() == c.kind());
      CHECK(to_json(back) == to_json(c));
      CHECK(verify(back).ok);
    }
    auto j = to_json(eisenstein_cert_3rs(2, 5));
    j["r"] = "4";
    CHECK_FALSE(verify(certificate_from_json(j)).ok);
    CHECK_THROWS_AS(certificate_from_json(nlohmann::json{{"kind", "nope"}}), Error);
  }

  TEST_CASE("properties") {
    for (const auto& c : {check_search_bound(50, 20), check_fast_path_equivalence(200), check_ambient_consistency(60),
                          check_numerator_identity(50, 20, 1), check_density_monotone(2)}) {
      INFO(c.name << ": " << c.first_failure);
      CHECK(c.ok());
      CHECK(c.cases > 0);
    }
  }
}
