#include "trisect/certificate.hpp"

#include <cmath>

#include "trisect/error.hpp"
#include "trisect/nsect.hpp"
#include "trisect/numtheory.hpp"

namespace trisect {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

VerifyResult reject(std::string why) { return {false, std::move(why)}; }

bool divisible(const BigInt& a, long m) { return mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(m)) != 0; }

IntPoly cubic_with_parameter_cleared(const Rational& a) {
  // den(a) * (x^3 - 3x - a)
  const BigInt& s = a.den();
  return IntPoly{BigInt(-a.num()), BigInt(-3 * s), BigInt(0), s};
}

VerifyResult check(const Eisenstein3rs& c) {
  if (c.r == 0 || c.s == 0) return reject("r and s must be nonzero");
  if (gcd(c.r, c.s) != 1) return reject("r and s are not coprime");
  if (divisible(c.r, 3) || divisible(c.s, 3)) return reject("3 divides r or s");
  if (c.a != Rational(BigInt(3 * c.r), c.s)) return reject("a != 3r/s");
  const IntPoly expected{BigInt(-3 * c.r), BigInt(-3 * c.s), BigInt(0), c.s};
  if (c.cleared != expected) return reject("cleared polynomial is not s x^3 - 3s x - 3r");
  if (!eisenstein_check(c.cleared, 3)) return reject("Eisenstein at 3 fails");
  if (c.in_range != (abs(c.a) <= Rational(2))) return reject("range flag is wrong");
  if (!rational_roots(to_rat(c.cleared)).empty()) return reject("cubic has a rational root");
  return {};
}

VerifyResult check(const SquareFamily& c) {
  if (c.c.is_zero()) return reject("c must be nonzero");
  if (c.a != c.c * c.c) return reject("a != c^2");
  if (abs(c.a) > Rational(2)) return reject("a outside [-2, 2]");
  if (!rational_roots(to_rat(cubic_with_parameter_cleared(c.a))).empty())
    return reject("x^3 - 3x - a has a rational root");
  return {};
}

VerifyResult check(const YatesBezout& c) {
  if (c.k == 0 || divisible(c.k, 3)) return reject("k must be nonzero and prime to 3");
  if (3 * c.a + c.b * c.k != 1) return reject("3a + bk != 1");
  return {};
}

VerifyResult check(const NonconstructibleWitness& c) {
  if (c.m < 2 || c.m % 2 == 0 || c.m % 3 == 0) return reject("m must be > 1 and prime to 6");
  if (!is_prime(c.q)) return reject("q is not prime");
  if (c.m < 64 && c.q > (std::uint64_t{1} << c.m)) return reject("q^(1/m) > 2");
  const BigInt bq = static_cast<unsigned long>(c.q);
  const IntPoly radical = IntPoly::monomial(1, c.m) - IntPoly::constant(bq);
  if (!eisenstein_check(radical, bq)) return reject("y^m - q is not Eisenstein at q");
  const RatPoly g{Rational(0), Rational(-3), Rational(0), Rational(1)};
  const IntPoly expected = resultant_minpoly(c.m, Rational(bq), g);
  if (c.minpoly != expected) return reject("minimal polynomial does not match the resultant");
  if (c.minpoly.degree() != static_cast<int>(c.m)) return reject("degree differs from m");
  if (!is_squarefree(c.minpoly)) return reject("resultant is not squarefree");
  if (is_power_of_two(c.m)) return reject("degree is a power of two");
  const WitnessNumerics num = witness_numerics(c.m, c.q, c.minpoly);
  if (!num.poly_vanishes) return reject("minimal polynomial does not vanish on the enclosure of a");
  if (!(num.root_error < 1e-20)) return reject("numeric root too far from a");
  return {};
}

VerifyResult check(const PsectionEisenstein& c) {
  if (c.p < 3 || !is_prime(c.p)) return reject("p is not an odd prime");
  const BigInt bp = static_cast<unsigned long>(c.p);
  if (c.dd <= 0) return reject("denominator must be positive");
  if (c.c == 0 || !mpz_divisible_p(c.c.get_mpz_t(), bp.get_mpz_t())) return reject("p does not divide c");
  const BigInt p2 = bp * bp;
  if (mpz_divisible_p(c.c.get_mpz_t(), p2.get_mpz_t())) return reject("p^2 divides c");
  if (gcd(c.c, c.dd) != 1) return reject("c and d are not coprime");
  if (abs(c.c) > c.dd) return reject("|c/d| > 1");
  if (c.cleared != cleared_psection(c.p, c.c, c.dd)) return reject("cleared polynomial mismatch");
  if (!eisenstein_check(c.cleared, bp)) return reject("Eisenstein at p fails");
  return {};
}

VerifyResult check(const DenseFamilyBezout& c) {
  if (c.n <= 0 || c.m <= 0) return reject("n and m must be positive");
  if (c.a * c.n + c.b * c.m != 1) return reject("a n + b m != 1");
  if (fits_int64(c.n)) {
    const auto phi = euler_phi(static_cast<std::uint64_t>(to_int64(c.n)));
    if (phi != c.phi_n) return reject("phi(n) mismatch");
    if (is_power_of_two(phi) != c.constructible_hypothesis) return reject("hypothesis flag mismatch");
  }
  return {};
}

// ---------------------------------------------------------------- json helpers

nlohmann::json poly_json(const IntPoly& p) { return to_coeff_strings(p); }

IntPoly poly_from(const nlohmann::json& j) { return int_poly_from_strings(j.get<std::vector<std::string>>()); }

BigInt int_from(const nlohmann::json& j) {
  const Rational r = Rational::parse(j.get<std::string>());
  if (!r.is_integer()) fail(ErrorCode::Parse, "expected an integer");
  return r.num();
}

}  // namespace

WitnessNumerics witness_numerics(std::uint64_t m, std::uint64_t q, const IntPoly& minpoly) {
  constexpr mpfr_prec_t prec = 256;
  WitnessNumerics out;
  Interval beta(prec);
  {
    BigFloat lo(prec), hi(prec);
    mpfr_set_ui(lo.get(), q, MPFR_RNDD);
    mpfr_set_ui(hi.get(), q, MPFR_RNDU);
    mpfr_rootn_ui(lo.get(), lo.get(), static_cast<unsigned long>(m), MPFR_RNDD);
    mpfr_rootn_ui(hi.get(), hi.get(), static_cast<unsigned long>(m), MPFR_RNDU);
    beta = Interval(lo, hi);
  }
  out.a = beta * beta * beta - Interval::exact(BigInt(3), prec) * beta;
  out.poly_vanishes = eval_enclosure(minpoly, out.a).contains_zero();

  // Newton from the midpoint of the enclosure.
  BigFloat x(prec), px(prec), dpx(prec), t(prec);
  mpfr_add(x.get(), out.a.lo().get(), out.a.hi().get(), MPFR_RNDN);
  mpfr_div_2ui(x.get(), x.get(), 1, MPFR_RNDN);
  const BigFloat a_mid = x;
  const IntPoly deriv = minpoly.derivative();
  auto horner = [&](const IntPoly& p, BigFloat& acc) {
    mpfr_set_zero(acc.get(), 1);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
      mpfr_mul(acc.get(), acc.get(), x.get(), MPFR_RNDN);
      mpfr_add_z(acc.get(), acc.get(), p.coeffs()[i].get_mpz_t(), MPFR_RNDN);
    }
  };
  for (int it = 0; it < 60; ++it) {
    horner(minpoly, px);
    horner(deriv, dpx);
    if (mpfr_zero_p(dpx.get())) break;
    mpfr_div(t.get(), px.get(), dpx.get(), MPFR_RNDN);
    mpfr_sub(x.get(), x.get(), t.get(), MPFR_RNDN);
  }
  mpfr_sub(t.get(), x.get(), a_mid.get(), MPFR_RNDN);
  out.root_error = std::fabs(mpfr_get_d(t.get(), MPFR_RNDN));
  out.value = a_mid.to_string(40);
  return out;
}

std::string Certificate::kind() const {
  return std::visit(Overloaded{
                        [](const Eisenstein3rs&) { return std::string("eisenstein-3rs"); },
                        [](const SquareFamily&) { return std::string("square-family"); },
                        [](const YatesBezout&) { return std::string("yates-bezout"); },
                        [](const NonconstructibleWitness&) { return std::string("nonconstructible-witness"); },
                        [](const PsectionEisenstein&) { return std::string("psection-eisenstein"); },
                        [](const DenseFamilyBezout&) { return std::string("dense-family-bezout"); },
                    },
                    data);
}

VerifyResult verify(const Certificate& cert) {
  return std::visit([](const auto& c) { return check(c); }, cert.data);
}

nlohmann::json to_json(const Certificate& cert) {
  nlohmann::json j;
  j["kind"] = cert.kind();
  std::visit(Overloaded{
                 [&](const Eisenstein3rs& c) {
                   j["r"] = c.r.get_str();
                   j["s"] = c.s.get_str();
                   j["a"] = c.a.to_string();
                   j["prime"] = "3";
                   j["polynomial"] = poly_json(c.cleared);
                   j["in_range"] = c.in_range;
                 },
                 [&](const SquareFamily& c) {
                   j["c"] = c.c.to_string();
                   j["a"] = c.a.to_string();
                 },
                 [&](const YatesBezout& c) {
                   j["k"] = c.k.get_str();
                   j["a"] = c.a.get_str();
                   j["b"] = c.b.get_str();
                 },
                 [&](const NonconstructibleWitness& c) {
                   j["m"] = c.m;
                   j["q"] = c.q;
                   j["minimal_polynomial"] = poly_json(c.minpoly);
                   j["degree"] = c.minpoly.degree();
                   j["value"] = c.value;
                   j["root_error"] = c.root_error;
                 },
                 [&](const PsectionEisenstein& c) {
                   j["p"] = c.p;
                   j["c"] = c.c.get_str();
                   j["d"] = c.dd.get_str();
                   j["polynomial"] = poly_json(c.cleared);
                 },
                 [&](const DenseFamilyBezout& c) {
                   j["n"] = c.n.get_str();
                   j["m"] = c.m.get_str();
                   j["a"] = c.a.get_str();
                   j["b"] = c.b.get_str();
                   j["phi_n"] = c.phi_n;
                   j["phi_n_power_of_two"] = c.constructible_hypothesis;
                 },
             },
             cert.data);
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "eisenstein-3rs")
      return {Eisenstein3rs{int_from(j.at("r")), int_from(j.at("s")), Rational::parse(j.at("a").get<std::string>()),
                            poly_from(j.at("polynomial")), j.at("in_range").get<bool>()}};
    if (kind == "square-family")
      return {SquareFamily{Rational::parse(j.at("c").get<std::string>()), Rational::parse(j.at("a").get<std::string>())}};
    if (kind == "yates-bezout") return {YatesBezout{int_from(j.at("k")), int_from(j.at("a")), int_from(j.at("b"))}};
    if (kind == "nonconstructible-witness")
      return {NonconstructibleWitness{j.at("m").get<std::uint64_t>(), j.at("q").get<std::uint64_t>(),
                                      poly_from(j.at("minimal_polynomial")), j.at("value").get<std::string>(),
                                      j.at("root_error").get<double>()}};
    if (kind == "psection-eisenstein")
      return {PsectionEisenstein{j.at("p").get<std::uint64_t>(), int_from(j.at("c")), int_from(j.at("d")),
                                 poly_from(j.at("polynomial"))}};
    if (kind == "dense-family-bezout")
      return {DenseFamilyBezout{int_from(j.at("n")), int_from(j.at("m")), int_from(j.at("a")), int_from(j.at("b")),
                                j.at("phi_n").get<std::uint64_t>(), j.at("phi_n_power_of_two").get<bool>()}};
    fail(ErrorCode::Parse, "unknown certificate kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace trisect
