#include "trisect/nsect.hpp"

#include "trisect/error.hpp"
#include "trisect/numtheory.hpp"

namespace trisect {

namespace {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

RatPoly PsectionPoly::with_parameter(const Rational& a) const { return to_rat(body) - RatPoly::constant(a); }

PsectionPoly psection_poly(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) fail(ErrorCode::NotOddPrime, std::to_string(p) + " is not an odd prime");
  PsectionPoly pp;
  pp.p = p;
  pp.q = (p - 1) / 2;
  std::vector<BigInt> c(p + 1);
  for (std::uint64_t k = 0; k <= pp.q; ++k) {
    const BigInt outer = binomial(p, 2 * k);
    for (std::uint64_t l = 0; l <= k; ++l) {
      const BigInt term = outer * binomial(k, l);
      if ((k + l) % 2 == 0)
        c[p - 2 * k + 2 * l] += term;
      else
        c[p - 2 * k + 2 * l] -= term;
    }
  }
  pp.body = IntPoly(std::move(c));
  if (!verify_structure(pp).ok())
    fail(ErrorCode::BadParameters, "structure check failed for p = " + std::to_string(p));
  return pp;
}

StructureReport verify_structure(const PsectionPoly& pp) {
  StructureReport rep;
  rep.p = pp.p;
  const BigInt two_pow = BigInt(1) << static_cast<mp_bitcnt_t>(pp.p - 1);
  rep.degree_ok = pp.body.degree() == static_cast<int>(pp.p);
  rep.leading = pp.body.leading();
  rep.leading_ok = rep.leading == two_pow;
  BigInt sum = 0;
  for (std::uint64_t k = 0; 2 * k <= pp.p; ++k) sum += binomial(pp.p, 2 * k);
  rep.binomial_sum_ok = sum == two_pow;
  rep.x_coeff = pp.body.coeff(1);
  const BigInt expected_x = (pp.q % 2 == 0) ? BigInt(static_cast<unsigned long>(pp.p))
                                            : BigInt(-BigInt(static_cast<unsigned long>(pp.p)));
  rep.x_coeff_ok = rep.x_coeff == expected_x;
  rep.divisibility_ok = true;
  for (int i = 0; i < pp.body.degree(); ++i)
    if (!mpz_divisible_ui_p(pp.body.coeff(static_cast<std::size_t>(i)).get_mpz_t(), pp.p)) rep.divisibility_ok = false;
  return rep;
}

IntPoly cleared_psection(std::uint64_t p, const BigInt& c, const BigInt& dd) {
  const PsectionPoly pp = psection_poly(p);
  BigInt ddp, ddp1;
  mpz_pow_ui(ddp.get_mpz_t(), dd.get_mpz_t(), p);
  mpz_pow_ui(ddp1.get_mpz_t(), dd.get_mpz_t(), p - 1);
  return ddp * pp.body - IntPoly::constant(c * ddp1);
}

Certificate nonsectability_cert(std::uint64_t p, const BigInt& c, const BigInt& dd) {
  if (p < 3 || !is_prime(p)) fail(ErrorCode::BadParameters, std::to_string(p) + " is not an odd prime");
  const BigInt bp = static_cast<unsigned long>(p);
  if (dd <= 0) fail(ErrorCode::BadParameters, "denominator must be positive");
  if (c == 0 || !mpz_divisible_p(c.get_mpz_t(), bp.get_mpz_t()))
    fail(ErrorCode::BadParameters, "c must be a nonzero multiple of p");
  const BigInt p2 = bp * bp;
  if (mpz_divisible_p(c.get_mpz_t(), p2.get_mpz_t())) fail(ErrorCode::BadParameters, "c is divisible by p^2");
  if (gcd(c, dd) != 1) fail(ErrorCode::BadParameters, "c and the denominator share a factor");
  if (abs(c) > dd) fail(ErrorCode::BadParameters, "|c/d| > 1 is not the cosine of a real angle");
  Certificate cert{PsectionEisenstein{p, c, dd, cleared_psection(p, c, dd)}};
  const auto v = verify(cert);
  if (!v.ok) fail(ErrorCode::BadParameters, "certificate does not verify: " + v.reason);
  return cert;
}

NsectReduction nsect_reduce(std::uint64_t n) {
  if (n < 1) fail(ErrorCode::BadParameters, "n must be >= 1");
  NsectReduction r;
  r.n = n;
  if (is_power_of_two(n)) {
    r.power_of_two = true;
    r.rationale = "n is a power of two: every angle is n-sectable by repeated bisection";
    return r;
  }
  for (auto [p, e] : factorize(n)) {
    if (p == 2) continue;
    r.p = p;
    break;
  }
  r.rationale = "p = " + std::to_string(r.p) + " divides n; an n-sectable angle is p-sectable (take the (n/p)-fold multiple of its n-th part), so a non-p-sectable angle is not n-sectable";
  return r;
}

Certificate dense_family_certificate(const BigInt& n, const BigInt& m) {
  if (n <= 0 || m <= 0) fail(ErrorCode::BadParameters, "n and m must be positive");
  const Bezout bz = ext_gcd(n, m);
  if (bz.g != 1) fail(ErrorCode::BadParameters, "gcd(n, m) = " + bz.g.get_str() + " != 1");
  DenseFamilyBezout d{n, m, bz.x, bz.y, 0, false};
  if (fits_int64(n)) {
    d.phi_n = euler_phi(static_cast<std::uint64_t>(to_int64(n)));
    d.constructible_hypothesis = is_power_of_two(d.phi_n);
  }
  return Certificate{d};
}

bool cubic_bridge_holds() {
  const PsectionPoly pp = psection_poly(3);
  // p(2x, 2a) = (2x)^3 - 3(2x) - 2a; its x-part and the coefficient of a.
  const IntPoly cubic{BigInt(0), BigInt(-3), BigInt(0), BigInt(1)};
  const IntPoly lhs_body = BigInt(2) * pp.body;
  const IntPoly rhs_body = cubic.compose(IntPoly{BigInt(0), BigInt(2)});
  const BigInt lhs_a = 2 * -1, rhs_a = -2;
  return lhs_body == rhs_body && lhs_a == rhs_a;
}

}  // namespace trisect
