#include "trisect/trisect_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "trisect/config.hpp"
#include "trisect/error.hpp"
#include "trisect/numtheory.hpp"
#include "trisect/parallel.hpp"

namespace trisect {

namespace {

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits128(const BigInt& v) { return mpz_sizeinbase(v.get_mpz_t(), 2) < 100; }

__int128 to128(const BigInt& v) {
  if (!fits128(v)) fail(ErrorCode::CapExceeded, "coordinate too large: " + v.get_str());
  const bool neg = v < 0;
  BigInt mag = abs(v);
  const BigInt hi = mag >> 64;
  const BigInt lo = mag - (hi << 64);
  const __int128 r = (static_cast<__int128>(hi.get_ui()) << 64) | static_cast<unsigned long>(lo.get_ui());
  return neg ? -r : r;
}

std::optional<Certificate> certificate_for(const Rational& a) {
  if (a.is_zero()) return std::nullopt;
  const BigInt& p = a.num();
  const BigInt& q = a.den();
  if (mpz_divisible_ui_p(p.get_mpz_t(), 3) && !mpz_divisible_ui_p(p.get_mpz_t(), 9) &&
      !mpz_divisible_ui_p(q.get_mpz_t(), 3))
    return eisenstein_cert_3rs(BigInt(p / 3), q);
  if (a.sign() > 0 && mpz_perfect_square_p(p.get_mpz_t()) && mpz_perfect_square_p(q.get_mpz_t())) {
    BigInt u, v;
    mpz_sqrt(u.get_mpz_t(), p.get_mpz_t());
    mpz_sqrt(v.get_mpz_t(), q.get_mpz_t());
    return Certificate{SquareFamily{Rational(u, v), a}};
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------- the map f

Rational apply_f(const Rational& x) { return x * x * x - Rational(3) * x; }

ImageTriple raw_image(const QuadElem& x) {
  const BigInt d = static_cast<long>(x.d());
  const BigInt &a1 = x.a1(), &a2 = x.a2(), &b = x.b();
  ImageTriple t;
  t.A1 = a1 * a1 * a1 + 3 * d * a1 * a2 * a2 - 3 * a1 * b * b;
  t.A2 = 3 * a1 * a1 * a2 + d * a2 * a2 * a2 - 3 * a2 * b * b;
  t.B = b * b * b;
  mpz_gcd(t.G.get_mpz_t(), t.A1.get_mpz_t(), t.A2.get_mpz_t());
  mpz_gcd(t.G.get_mpz_t(), t.G.get_mpz_t(), t.B.get_mpz_t());
  const BigInt eight_d = 8 * d;
  if (!mpz_divisible_p(eight_d.get_mpz_t(), t.G.get_mpz_t()))
    fail(ErrorCode::GcdBoundViolated, "G = " + t.G.get_str() + " does not divide 8d for " + x.to_string());
  return t;
}

QuadElem apply_f(const QuadElem& x) {
  const ImageTriple t = raw_image(x);
  return canonicalize(t.A1, t.A2, t.B, x.d());
}

FieldElement apply_f(const FieldElement& x) {
  return std::visit([](const auto& v) -> FieldElement { return apply_f(v); }, x);
}

TupleImage image_of(const Tuple& t, std::int64_t d) {
  constexpr std::int64_t small = 1 << 16;
  if (std::abs(t.a1) < small && std::abs(t.a2) < small && t.b < small && d < 1024) {
    // Every term stays below 2^60.
    const std::int64_t a1 = t.a1, a2 = t.a2, b = t.b, b2 = b * b;
    const std::int64_t A1 = a1 * (a1 * a1 + 3 * d * a2 * a2 - 3 * b2);
    const std::int64_t A2 = a2 * (3 * a1 * a1 + d * a2 * a2 - 3 * b2);
    const std::int64_t B = b2 * b;
    const std::int64_t G = std::gcd(std::gcd(A1, A2), B);
    const std::int64_t bound = d == 0 ? 1 : 8 * d;
    if (bound % G != 0)
      fail(ErrorCode::GcdBoundViolated, "G = " + std::to_string(G) + " does not divide " + std::to_string(bound));
    return TupleImage{Tuple{A1 / G, A2 / G, B / G}, G};
  }
  const __int128 a1 = t.a1, a2 = t.a2, b = t.b, dd = d;
  const __int128 b2 = b * b;
  const __int128 A1 = a1 * (a1 * a1 + 3 * dd * a2 * a2 - 3 * b2);
  const __int128 A2 = a2 * (3 * a1 * a1 + dd * a2 * a2 - 3 * b2);
  const __int128 B = b2 * b;
  const __int128 G = gcd128(gcd128(A1, A2), B);
  const __int128 bound = d == 0 ? 1 : 8 * dd;
  if (bound % G != 0)
    fail(ErrorCode::GcdBoundViolated, "G = " + from_int128(G).get_str() + " does not divide " +
                                          from_int128(bound).get_str());
  TupleImage out;
  out.G = static_cast<std::int64_t>(G);
  const __int128 n1 = A1 / G, n2 = A2 / G, den = B / G;
  const __int128 lim = static_cast<__int128>(1) << 62;
  if (abs128(n1) >= lim || abs128(n2) >= lim || den >= lim) fail(ErrorCode::CapExceeded, "image exceeds 64 bits");
  out.image = Tuple{static_cast<std::int64_t>(n1), static_cast<std::int64_t>(n2), static_cast<std::int64_t>(den)};
  return out;
}

BigInt preimage_bound(const FieldDescriptor& field, const Rational& R) {
  if (R.sign() <= 0) fail(ErrorCode::BadParameters, "R must be positive");
  const Rational T = field.is_rational() ? R : Rational(8 * field.d()) * R;
  return ceil_cbrt(ceil(Rational(8) * T));
}

Rational phi_curve(const Rational& D, const Rational& E, const Rational& x) {
  return D * (x * x * x - Rational(3) * E * E * x);
}

bool PhiBoundCheck::consistent() const {
  if (!odd_symmetry) return false;
  if (!hypothesis) return true;
  return (!upper_premise || upper_claim) && (!lower_premise || lower_claim);
}

PhiBoundCheck phi_bound_check(const Rational& D, const Rational& E, const Rational& T, const Rational& x) {
  if (D.sign() <= 0 || E.sign() <= 0 || T.sign() <= 0) fail(ErrorCode::BadParameters, "D, E, T must be positive");
  PhiBoundCheck c;
  c.phi = phi_curve(D, E, x);
  c.hypothesis = E * E * E <= T;
  c.upper_premise = c.phi <= D * T;
  c.lower_premise = c.phi >= -(D * T);
  // x <= 2 T^(1/3)  <=>  x <= 0 or x^3 <= 8T
  c.upper_claim = x.sign() <= 0 || x * x * x <= Rational(8) * T;
  c.lower_claim = x.sign() >= 0 || -(x * x * x) <= Rational(8) * T;
  c.odd_symmetry = phi_curve(D, E, -x) == -c.phi;
  return c;
}

// ---------------------------------------------------------------- deciding

std::string to_string(Method m) {
  switch (m) {
    case Method::RationalFastPath:
      return "rational-fast-path";
    case Method::BoundedSearch:
      return "bounded-search";
    case Method::Certificate:
      return "certificate";
  }
  return "unknown";
}

std::optional<Rational> rational_fast_path(const Rational& a) {
  BigInt s;
  if (mpz_root(s.get_mpz_t(), a.den().get_mpz_t(), 3) == 0) return std::nullopt;
  if (s > 1000000) {
    const RatPoly cubic{-a, Rational(-3), Rational(0), Rational(1)};
    const auto roots = rational_roots(cubic);
    if (roots.empty()) return std::nullopt;
    return roots.front();
  }
  const std::int64_t si = to_int64(s);
  const __int128 p = to128(a.num());
  const __int128 s2 = static_cast<__int128>(si) * si;
  for (std::int64_t r = -2 * si; r <= 2 * si; ++r) {
    const __int128 rr = r;
    if (rr * (rr * rr - 3 * s2) == p) return Rational(BigInt(static_cast<long>(r)), s);
  }
  return std::nullopt;
}

std::optional<FieldElement> bounded_search(const FieldDescriptor& field, const FieldElement& a, const BigInt& S) {
  const std::int64_t s = to_int64(S);
  const BigInt ball = BigInt(s) * (2 * s + 1) * (field.is_rational() ? 1 : (2 * s + 1));
  if (ball > BigInt(static_cast<unsigned long>(default_cap())))
    fail(ErrorCode::CapExceeded, "preimage search over height " + S.get_str() + " exceeds the cap");
  const Tuple target = to_tuple(a);
  const std::int64_t d = field.d();
  const __int128 n1 = target.a1, n2 = target.a2, m = target.b;
  for (std::int64_t b = 1; b <= s; ++b) {
    const __int128 B = static_cast<__int128>(b) * b * b;
    if (B % m != 0) continue;  // the reduced denominator m = B/G divides B
    const __int128 G = B / m;
    const __int128 b2 = static_cast<__int128>(b) * b;
    for (std::int64_t a1 = -s; a1 <= s; ++a1) {
      const std::int64_t g1 = std::gcd(a1, b);
      if (field.is_rational()) {
        if (g1 != 1) continue;
        const __int128 x = a1;
        if (x * (x * x - 3 * b2) == G * n1) return FieldElement(Rational(BigInt(static_cast<long>(a1)), BigInt(static_cast<long>(b))));
        continue;
      }
      const __int128 x = a1;
      for (std::int64_t a2 = -s; a2 <= s; ++a2) {
        const __int128 y = a2;
        if (x * (x * x + 3 * d * y * y - 3 * b2) != G * n1) continue;
        if (y * (3 * x * x + d * y * y - 3 * b2) != G * n2) continue;
        if (std::gcd(g1, a2) != 1) continue;
        return FieldElement(canonicalize(static_cast<long>(a1), static_cast<long>(a2), static_cast<long>(b), d));
      }
    }
  }
  return std::nullopt;
}

TrisectionVerdict decide_trisection(const FieldDescriptor& field, const FieldElement& a_in) {
  FieldElement a = a_in;
  if (field.is_rational()) {
    if (const auto* q = std::get_if<QuadElem>(&a)) {
      if (!q->is_rational()) fail(ErrorCode::RadicandMismatch, q->to_string() + " is not in Q");
      a = q->rational_value();
    }
  } else if (const auto* r = std::get_if<Rational>(&a)) {
    a = QuadElem(*r, field.d());
  } else if (std::get<QuadElem>(a).d() != field.d()) {
    fail(ErrorCode::RadicandMismatch, to_string(a) + " is not in " + field.name());
  }
  if (!in_interval(a, Rational(-2), Rational(2)))
    fail(ErrorCode::OutOfRange, to_string(a) + " lies outside [-2, 2]");

  TrisectionVerdict v;
  v.field = field;
  v.a = a;
  if (field.is_rational()) {
    v.method = Method::RationalFastPath;
    v.search_bound = 0;
    if (auto w = rational_fast_path(std::get<Rational>(a))) v.witness = *w;
  } else {
    v.method = Method::BoundedSearch;
    v.search_bound = preimage_bound(field, Rational(height(a)));
    v.witness = bounded_search(field, a, v.search_bound);
  }
  v.member = v.witness.has_value();
  if (!v.member && is_rational(a)) {
    const Rational r = std::visit(
        [](const auto& x) -> Rational {
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>)
            return x;
          else
            return x.rational_value();
        },
        a);
    if (auto cert = certificate_for(r); cert && verify(*cert).ok) {
      v.certificate = std::move(cert);
      v.method = Method::Certificate;
    }
  }
  return v;
}

Certificate eisenstein_cert_3rs(const BigInt& r, const BigInt& s) {
  if (r == 0 || s == 0) fail(ErrorCode::BadParameters, "r and s must be nonzero");
  if (gcd(r, s) != 1) fail(ErrorCode::BadParameters, "r and s must be coprime");
  if (mpz_divisible_ui_p(r.get_mpz_t(), 3) || mpz_divisible_ui_p(s.get_mpz_t(), 3))
    fail(ErrorCode::BadParameters, "r and s must be prime to 3");
  Eisenstein3rs c;
  c.r = r;
  c.s = s;
  c.a = Rational(BigInt(3 * r), s);
  c.cleared = IntPoly{BigInt(-3 * r), BigInt(-3 * s), BigInt(0), s};
  c.in_range = abs(c.a) <= Rational(2);
  return Certificate{c};
}

SquareFamilyReport square_family_check(std::int64_t H) {
  if (H < 1) fail(ErrorCode::BadParameters, "H must be >= 1");
  SquareFamilyReport rep;
  rep.H = H;
  const auto Q = FieldDescriptor::rationals();
  std::int64_t root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(H)));
  while ((root + 1) * (root + 1) <= H) ++root;
  while (root * root > H) --root;
  for (std::int64_t v = 1; v <= root; ++v)
    for (std::int64_t u = 1; u <= root; ++u) {
      if (std::gcd(u, v) != 1 || u * u > 2 * v * v) continue;
      const Rational a(BigInt(static_cast<long>(u * u)), BigInt(static_cast<long>(v * v)));
      ++rep.checked;
      if (decide_trisection(Q, a).member) rep.members.push_back(a);
    }
  return rep;
}

std::pair<BigInt, BigInt> yates_certificate(const BigInt& k) {
  if (k == 0 || mpz_divisible_ui_p(k.get_mpz_t(), 3))
    fail(ErrorCode::BadParameters, "k must be nonzero and not a multiple of 3");
  const Bezout bz = ext_gcd(3, k);
  return {bz.x, bz.y};
}

Certificate yates_bezout(const BigInt& k) {
  const auto [a, b] = yates_certificate(k);
  return Certificate{YatesBezout{k, a, b}};
}

// ---------------------------------------------------------------- density

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) fail(ErrorCode::BadParameters, "slope needs at least two points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

DensityReport density_experiment(const FieldDescriptor& field, const std::vector<std::int64_t>& R_list,
                                 unsigned shards, std::uint64_t cap) {
  if (R_list.empty()) fail(ErrorCode::BadParameters, "empty R list");
  for (std::size_t i = 0; i < R_list.size(); ++i) {
    if (R_list[i] < 1) fail(ErrorCode::BadParameters, "R must be >= 1");
    if (i > 0 && R_list[i] <= R_list[i - 1]) fail(ErrorCode::BadParameters, "R list must be strictly increasing");
  }
  DensityReport rep;
  rep.field = field;
  rep.target_exponent = -2.0 * (field.degree() + 1) / 3.0;
  const std::int64_t r_max = R_list.back();
  const std::int64_t s_max = to_int64(preimage_bound(field, Rational(r_max)));
  const BigInt ball = count_ball(field, Rational(s_max));
  if (ball > BigInt(static_cast<unsigned long>(cap)))
    fail(ErrorCode::CapExceeded, "preimage ball of height " + std::to_string(s_max) + " holds " + ball.get_str() +
                                     " elements, cap " + std::to_string(cap));

  // (image, smallest preimage height) over B_K(S(max R)) ∩ [-2, 2].
  using Entry = std::pair<Tuple, std::int64_t>;
  const std::int64_t d = field.d();
  auto parts = run_shards<std::vector<Entry>>(shards, [&](unsigned s) {
    const auto [b_lo, b_hi] = shard_range(1, s_max + 1, s, shards);
    std::vector<Entry> out;
    visit_ball_interval(field, s_max, Rational(-2), Rational(2), b_lo, b_hi - 1, [&](const Tuple& t) {
      const TupleImage img = image_of(t, d);
      if (height(img.image) <= r_max) out.emplace_back(img.image, height(t));
    });
    return out;
  });
  std::vector<Entry> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  std::vector<Entry> images;
  for (const auto& e : all)
    if (images.empty() || !(images.back().first == e.first)) images.push_back(e);

  std::vector<double> xs, ys;
  for (std::int64_t R : R_list) {
    DensityPoint pt;
    pt.R = R;
    const std::int64_t s_r = to_int64(preimage_bound(field, Rational(R)));
    std::int64_t num = 0;
    for (const auto& [img, pre] : images)
      if (height(img) <= R && pre <= s_r) ++num;
    pt.num = static_cast<long>(num);
    pt.den = count_ball_interval(field, Rational(R), Rational(-2), Rational(2), shards);
    pt.delta = pt.den > 0 ? mpq_class(pt.num, pt.den).get_d() : 0.0;
    if (pt.delta > 0) {
      xs.push_back(static_cast<double>(R));
      ys.push_back(pt.delta);
    }
    rep.points.push_back(pt);
  }
  if (xs.size() >= 3) rep.slope = loglog_slope(xs, ys);
  return rep;
}

DensityReport density_experiment(const FieldDescriptor& field, const std::vector<std::int64_t>& R_list,
                                 unsigned shards) {
  return density_experiment(field, R_list, shards, default_cap());
}

// ---------------------------------------------------------------- non-constructible witnesses

Certificate nonconstructible_witness(std::uint64_t m, std::uint64_t q) {
  if (m < 2 || m % 2 == 0) fail(ErrorCode::BadParameters, "m must be odd and > 1");
  if (m % 3 == 0) fail(ErrorCode::BadParameters, "m must be prime to 3");
  if (!is_prime(q)) fail(ErrorCode::BadParameters, std::to_string(q) + " is not prime");
  if (m < 64 && q > (std::uint64_t{1} << m)) fail(ErrorCode::BadParameters, "q^(1/m) exceeds 2");
  const RatPoly g{Rational(0), Rational(-3), Rational(0), Rational(1)};
  NonconstructibleWitness w;
  w.m = m;
  w.q = q;
  w.minpoly = resultant_minpoly(m, Rational(BigInt(static_cast<unsigned long>(q))), g);
  const WitnessNumerics num = witness_numerics(m, q, w.minpoly);
  w.value = num.value;
  w.root_error = num.root_error;
  Certificate cert{w};
  const auto v = verify(cert);
  if (!v.ok) fail(ErrorCode::BadParameters, "witness does not verify: " + v.reason);
  return cert;
}

}  // namespace trisect
