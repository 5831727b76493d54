#include "trisect/algdeg.hpp"

#include <array>
#include <cmath>
#include <numeric>

#include "trisect/error.hpp"
#include "trisect/exact_arith.hpp"
#include "trisect/numtheory.hpp"

namespace trisect {

namespace {

// Elements of Q(sqrt 2, sqrt 3) on the basis 1, sqrt 2, sqrt 3, sqrt 6.
struct Biquad {
  std::array<Rational, 4> c{};

  static Biquad of(Rational r0, Rational r2 = 0, Rational r3 = 0, Rational r6 = 0) {
    return Biquad{{std::move(r0), std::move(r2), std::move(r3), std::move(r6)}};
  }
  friend Biquad operator+(const Biquad& x, const Biquad& y) {
    Biquad r;
    for (int i = 0; i < 4; ++i) r.c[i] = x.c[i] + y.c[i];
    return r;
  }
  friend Biquad operator-(const Biquad& x, const Biquad& y) {
    Biquad r;
    for (int i = 0; i < 4; ++i) r.c[i] = x.c[i] - y.c[i];
    return r;
  }
  friend Biquad operator*(const Biquad& x, const Biquad& y) {
    const auto& [p0, p2, p3, p6] = x.c;
    const auto& [q0, q2, q3, q6] = y.c;
    return of(p0 * q0 + Rational(2) * p2 * q2 + Rational(3) * p3 * q3 + Rational(6) * p6 * q6,
              p0 * q2 + p2 * q0 + Rational(3) * (p3 * q6 + p6 * q3),
              p0 * q3 + p3 * q0 + Rational(2) * (p2 * q6 + p6 * q2),
              p0 * q6 + p6 * q0 + p2 * q3 + p3 * q2);
  }
  bool is_zero() const {
    return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
  }
  std::string to_string() const {
    static const std::array<const char*, 4> units{"", "*sqrt(2)", "*sqrt(3)", "*sqrt(6)"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
      if (c[i].is_zero()) continue;
      std::string term = c[i].to_string();
      if (!out.empty()) out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
      else out = term;
      out += units[i];
    }
    return out.empty() ? "0" : out;
  }
  Interval enclose(mpfr_prec_t prec) const {
    Interval r = Interval::exact(c[0], prec);
    const std::array<int, 3> rad{2, 3, 6};
    for (int i = 1; i < 4; ++i)
      r = r + Interval::exact(c[i], prec) * Interval::sqrt(Interval::exact(BigInt(rad[i - 1]), prec));
    return r;
  }
};

template <class T>
struct Quartet {
  T a, b, c, d;
};

// The eight half-angle identities as residuals lhs - rhs.
struct Identity {
  const char* label;
  int which;
};
constexpr std::array<Identity, 8> kIdentities{{
    {"a[n-1] = a[n]^2 - 2", 0},
    {"a[n-1] = 2 - b[n]^2", 1},
    {"b[n-1] = a[n]*b[n]", 2},
    {"c[n] = a[n]/2 - (sqrt(3)/2)*b[n]", 3},
    {"d[n] = a[n]/2 + (sqrt(3)/2)*b[n]", 4},
    {"d[n-1] = 2 - c[n]^2", 5},
    {"a[n-1] = c[n]*d[n] + 1", 6},
    {"c[n-1] = 2 - d[n]^2", 7},
}};

template <class T>
T residual(int which, const Quartet<T>& prev, const Quartet<T>& cur, const T& one, const T& two, const T& half,
           const T& s3) {
  switch (which) {
    case 0:
      return prev.a - (cur.a * cur.a - two);
    case 1:
      return prev.a - (two - cur.b * cur.b);
    case 2:
      return prev.b - cur.a * cur.b;
    case 3:
      return cur.c - (cur.a * half - s3 * half * cur.b);
    case 4:
      return cur.d - (cur.a * half + s3 * half * cur.b);
    case 5:
      return prev.d - (two - cur.c * cur.c);
    case 6:
      return prev.a - (cur.c * cur.d + one);
    default:
      return prev.c - (two - cur.d * cur.d);
  }
}

Quartet<Biquad> exact_values(std::uint64_t n) {
  const Rational h(BigInt(1), BigInt(2));
  switch (n) {
    case 0:
      return {Biquad::of(-2), Biquad::of(0), Biquad::of(-1), Biquad::of(-1)};
    case 1:
      return {Biquad::of(0), Biquad::of(2), Biquad::of(0, 0, -1), Biquad::of(0, 0, 1)};
    case 2:
      return {Biquad::of(0, 1), Biquad::of(0, 1), Biquad::of(0, h, 0, -h), Biquad::of(0, h, 0, h)};
    default:
      fail(ErrorCode::OutOfRange, "no exact form beyond n = 2");
  }
}

Interval scaled_pi(const Rational& t, mpfr_prec_t prec) { return Interval::pi(prec) * Interval::exact(t, prec); }

Quartet<Interval> interval_values(std::uint64_t n, mpfr_prec_t prec) {
  const Interval two = Interval::exact(BigInt(2), prec);
  const Interval theta = scaled_pi(Rational(BigInt(1), BigInt(1) << static_cast<mp_bitcnt_t>(n)), prec);
  const Interval third = scaled_pi(Rational(BigInt(1), BigInt(3)), prec);
  return {two * Interval::cos(theta), two * Interval::sin(theta), two * Interval::cos(third + theta),
          two * Interval::cos(third - theta)};
}

// 2cos(2 pi t) as 2cos(2 pi j/m) with 0 <= j/m <= 1/2 reduced; t = 0 gives (1, 1).
std::pair<std::uint64_t, std::uint64_t> angle_index(Rational t) {
  t = t - Rational(floor(t));
  if (t > Rational(BigInt(1), BigInt(2))) t = Rational(1) - t;
  if (t.is_zero()) return {1, 1};
  return {static_cast<std::uint64_t>(to_int64(t.num())), static_cast<std::uint64_t>(to_int64(t.den()))};
}

Rational table_angle(std::uint64_t n, char name) {
  const Rational step(BigInt(1), BigInt(1) << static_cast<mp_bitcnt_t>(n + 1));
  const Rational sixth(BigInt(1), BigInt(6));
  switch (name) {
    case 'a':
      return step;
    case 'b':
      return Rational(BigInt(1), BigInt(4)) - step;
    case 'c':
      return sixth + step;
    default:
      return sixth - step;
  }
}

std::uint64_t pow2(std::uint64_t n, std::uint64_t cap) {
  if (n >= 63 || (std::uint64_t{1} << n) > cap)
    fail(ErrorCode::CapExceeded, "degree 2^" + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  return std::uint64_t{1} << n;
}

mpfr_prec_t eval_precision(const IntPoly& p) {
  std::size_t bits = 0;
  for (const auto& c : p.coeffs()) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return static_cast<mpfr_prec_t>(bits + 2 * static_cast<std::size_t>(std::max(p.degree(), 0)) + 192);
}

bool tight_zero(const Interval& r) {
  static const double limit = std::ldexp(1.0, -64);
  return r.contains_zero() && r.width().to_double() < limit;
}

}  // namespace

IntPoly p_tower(std::uint64_t n, std::uint64_t degree_cap) {
  if (n < 1) fail(ErrorCode::BadParameters, "n must be >= 1");
  pow2(n, degree_cap);
  const IntPoly p1{BigInt(-2), BigInt(0), BigInt(1)};
  IntPoly p = p1;
  for (std::uint64_t i = 1; i < n; ++i) p = p1.compose(p);
  return p;
}

TowerReport tower_checks(std::uint64_t n, std::uint64_t degree_cap) {
  TowerReport rep;
  rep.n = n;
  const IntPoly pn = p_tower(n, degree_cap);
  const std::size_t deg = static_cast<std::size_t>(pn.degree());

  rep.shape_ok = pn.leading() == 1 && abs(pn.coeff(0)) == 2;
  for (std::size_t i = 1; i < deg; ++i)
    if (!mpz_even_p(pn.coeff(i).get_mpz_t())) rep.shape_ok = false;
  rep.eisenstein_ok = eisenstein_check(pn, BigInt(2));
  rep.chebyshev_ok = pn == chebyshev_like(deg);

  rep.composition_ok = true;
  if (n <= 2) {
    const std::array<QuadElem, 3> a{QuadElem(Rational(-2), 2), QuadElem(Rational(0), 2),
                                    QuadElem::parse("sqrt(2)")};
    for (std::uint64_t k = 1; k <= n; ++k) {
      const QuadElem v = p_tower(k, degree_cap).eval_with(a[n], [](const BigInt& c) { return QuadElem(Rational(c), 2); });
      if (!(v == a[n - k])) rep.composition_ok = false;
      ++rep.exact_cases;
    }
  } else {
    const mpfr_prec_t prec = eval_precision(pn);
    auto a_of = [&](std::uint64_t i) {
      return Interval::exact(BigInt(2), prec) *
             Interval::cos(scaled_pi(Rational(BigInt(1), BigInt(1) << static_cast<mp_bitcnt_t>(i)), prec));
    };
    const Interval an = a_of(n);
    for (std::uint64_t k = 1; k <= n; ++k) {
      const Interval r = eval_enclosure(p_tower(k, degree_cap), an) - a_of(n - k);
      if (!tight_zero(r)) rep.composition_ok = false;
      ++rep.numeric_cases;
    }
  }
  return rep;
}

AngleNumber angle_number(std::uint64_t j, std::uint64_t m) {
  if (m < 1 || j < 1) fail(ErrorCode::BadParameters, "j and m must be positive");
  if (std::gcd(j, m) != 1)
    fail(ErrorCode::NotCoprime, "gcd(" + std::to_string(j) + ", " + std::to_string(m) + ") != 1");
  AngleNumber an;
  an.j = j;
  an.m = m;
  an.minpoly = cos_minimal_poly(m);
  const mpfr_prec_t prec = eval_precision(an.minpoly);
  const Rational t(BigInt(static_cast<unsigned long>(2 * j)), BigInt(static_cast<unsigned long>(m)));
  an.value = Interval::exact(BigInt(2), prec) * Interval::cos(scaled_pi(t, prec));
  const Interval r = eval_enclosure(an.minpoly, an.value);
  an.residual = r.magnitude().to_double();
  if (!r.contains_zero() || an.residual >= 1e-25)
    fail(ErrorCode::BadParameters, "minimal polynomial does not vanish on 2cos(2pi*" + std::to_string(j) + "/" +
                                       std::to_string(m) + ")");
  return an;
}

std::uint64_t angle_degree(std::uint64_t j, std::uint64_t m) {
  return static_cast<std::uint64_t>(angle_number(j, m).minpoly.degree());
}

std::pair<std::uint64_t, std::uint64_t> cn_index(std::uint64_t n) {
  if (n >= 60) fail(ErrorCode::CapExceeded, "index too large");
  const std::uint64_t p = std::uint64_t{1} << n;
  return {p + 3, 6 * p};
}

std::pair<std::uint64_t, std::uint64_t> dn_index(std::uint64_t n) {
  if (n >= 60) fail(ErrorCode::CapExceeded, "index too large");
  const std::uint64_t p = std::uint64_t{1} << n;
  const std::uint64_t m = 6 * p;
  return {(p + m - 3) % m, m};
}

namespace {

DegreeCheck degree_check(std::uint64_t n, std::pair<std::uint64_t, std::uint64_t> jm, std::uint64_t expected) {
  DegreeCheck dc;
  dc.n = n;
  dc.j = jm.first;
  dc.m = jm.second;
  dc.coprime = std::gcd(dc.j, dc.m) == 1;
  dc.expected = expected;
  if (dc.coprime) dc.degree = angle_degree(dc.j, dc.m);
  return dc;
}

}  // namespace

DegreeCheck cn_degree_check(std::uint64_t n, std::uint64_t degree_cap) {
  if (n < 1) fail(ErrorCode::BadParameters, "n must be >= 1");
  return degree_check(n, cn_index(n), pow2(n, degree_cap));
}

DegreeCheck dn_degree_check(std::uint64_t n, std::uint64_t degree_cap) {
  if (n < 1) fail(ErrorCode::BadParameters, "n must be >= 1");
  return degree_check(n, dn_index(n), pow2(n, degree_cap));
}

DegreeCheck an_degree_check(std::uint64_t n, std::uint64_t degree_cap) {
  if (n < 1) fail(ErrorCode::BadParameters, "n must be >= 1");
  pow2(n + 1, 2 * degree_cap);
  return degree_check(n, {1, std::uint64_t{1} << (n + 1)}, std::uint64_t{1} << (n - 1));
}

bool IdentityReport::ok() const {
  for (const auto& r : identities)
    if (!r.holds) return false;
  for (const auto& t : table)
    if (!t.ok) return false;
  return true;
}

IdentityReport identity_suite(std::uint64_t N) {
  if (N < 1) fail(ErrorCode::BadParameters, "N must be >= 1");
  if (N >= 60) fail(ErrorCode::CapExceeded, "N too large");
  IdentityReport rep;
  rep.N = N;

  const Rational half_r(BigInt(1), BigInt(2));
  const Biquad one = Biquad::of(1), two = Biquad::of(2), half = Biquad::of(half_r), s3 = Biquad::of(0, 0, 1);
  for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(N, 2); ++n) {
    const auto prev = exact_values(n - 1), cur = exact_values(n);
    for (const auto& id : kIdentities) {
      const Biquad r = residual(id.which, prev, cur, one, two, half, s3);
      rep.identities.push_back({id.label, n, "exact", r.is_zero(), r.is_zero() ? 0.0 : 1.0, 0});
    }
  }

  for (std::uint64_t n = 3; n <= N; ++n) {
    for (const auto& id : kIdentities) {
      IdentityResult res{id.label, n, "interval", false, 0, 0};
      for (mpfr_prec_t prec : {100, 200}) {
        const auto prev = interval_values(n - 1, prec), cur = interval_values(n, prec);
        const Interval ione = Interval::exact(BigInt(1), prec), itwo = Interval::exact(BigInt(2), prec);
        const Interval ihalf = Interval::exact(half_r, prec);
        const Interval is3 = Interval::sqrt(Interval::exact(BigInt(3), prec));
        const Interval r = residual(id.which, prev, cur, ione, itwo, ihalf, is3);
        res.precision = prec;
        res.residual = r.magnitude().to_double();
        res.holds = tight_zero(r);
        if (res.holds) break;
      }
      rep.identities.push_back(res);
    }
  }

  for (std::uint64_t n = 0; n <= 2; ++n) {
    const auto vals = exact_values(n);
    const std::array<std::pair<char, const Biquad*>, 4> named{
        {{'a', &vals.a}, {'b', &vals.b}, {'c', &vals.c}, {'d', &vals.d}}};
    for (const auto& [name, v] : named) {
      const auto [j, m] = angle_index(table_angle(n, name));
      const IntPoly mp = cos_minimal_poly(m);
      const Biquad at = mp.eval_with(*v, [](const BigInt& c) { return Biquad::of(Rational(c)); });
      const AngleNumber num = angle_number(j, m);
      const bool matches = (v->enclose(num.value.prec()) - num.value).contains_zero();
      rep.table.push_back({n, std::string(1, name), v->to_string(), at.is_zero() && matches});
    }
  }

  for (const auto& r : rep.identities) rep.max_residual = std::max(rep.max_residual, r.residual);
  return rep;
}

}  // namespace trisect
