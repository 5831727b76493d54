#include "trisect/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "trisect/algdeg.hpp"
#include "trisect/bigfloat.hpp"
#include "trisect/coprime_count.hpp"
#include "trisect/error.hpp"
#include "trisect/height_enum.hpp"
#include "trisect/nsect.hpp"
#include "trisect/numtheory.hpp"
#include "trisect/polyalg.hpp"
#include "trisect/trisect_core.hpp"

namespace trisect {

void CheckResult::record(bool holds, const std::string& what) {
  ++cases;
  if (holds) return;
  if (falsified++ == 0) first_failure = what;
}

std::uint64_t SuiteReport::falsifications() const {
  std::uint64_t n = 0;
  for (const auto& c : checks) n += c.falsified;
  return n;
}

namespace {

using Rng = std::mt19937_64;

const std::vector<std::int64_t> kRadicands{2, 3, 5, 6, 7};

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::int64_t nonzero(Rng& rng, std::int64_t lim) {
  std::int64_t v = 0;
  while (v == 0) v = uniform(rng, -lim, lim);
  return v;
}

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

QuadElem random_quad(Rng& rng, std::int64_t d, std::int64_t lim) {
  return canonicalize(big(uniform(rng, -lim, lim)), big(uniform(rng, -lim, lim)), big(uniform(rng, 1, lim)), d);
}

IntPoly random_int_poly(Rng& rng, int max_deg, std::int64_t lim) {
  std::vector<BigInt> c(static_cast<std::size_t>(uniform(rng, 0, max_deg) + 1));
  for (auto& v : c) v = big(uniform(rng, -lim, lim));
  return IntPoly(std::move(c));
}

Rational random_rational(Rng& rng, std::int64_t lim) { return Rational(big(uniform(rng, -lim, lim)), big(uniform(rng, 1, lim))); }

Interval enclose(const QuadElem& x, mpfr_prec_t prec) {
  const Interval s = Interval::sqrt(Interval::exact(big(x.d()), prec));
  return (Interval::exact(x.a1(), prec) + Interval::exact(x.a2(), prec) * s) / Interval::exact(x.b(), prec);
}

Rational random_angle(Rng& rng) {
  // [0, 3.14159265)
  return Rational(big(uniform(rng, 0, 314159264)), BigInt(100000000));
}

const std::vector<FieldDescriptor>& quadratic_fields(const std::vector<std::int64_t>& ds) {
  static std::map<std::vector<std::int64_t>, std::vector<FieldDescriptor>> cache;
  auto& v = cache[ds];
  if (v.empty())
    for (auto d : ds) v.push_back(FieldDescriptor::quadratic(d));
  return v;
}

std::string tuple_text(const Tuple& t) {
  return "(" + std::to_string(t.a1) + "," + std::to_string(t.a2) + "," + std::to_string(t.b) + ")";
}

}  // namespace

// ---------------------------------------------------------------- arithmetic

CheckResult check_canonical_forms(std::uint64_t seed, int n) {
  CheckResult r{"canonical forms"};
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const std::int64_t d = kRadicands[static_cast<std::size_t>(uniform(rng, 0, 4))];
    const std::int64_t a1 = uniform(rng, -50, 50), a2 = uniform(rng, -50, 50), b = nonzero(rng, 50);
    const std::int64_t t = nonzero(rng, 9);
    const QuadElem c = canonicalize(big(a1), big(a2), big(b), d);
    const bool same = c == canonicalize(big(t * a1), big(t * a2), big(t * b), d);
    const bool idem = c == canonicalize(c.a1(), c.a2(), c.b(), d);
    r.record(same && idem && c.b() > 0, c.to_string());
  }
  return r;
}

CheckResult check_field_laws(std::uint64_t seed, int n) {
  CheckResult r{"field laws"};
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const std::int64_t d = kRadicands[static_cast<std::size_t>(uniform(rng, 0, 4))];
    const QuadElem x = random_quad(rng, d, 30), y = random_quad(rng, d, 30), z = random_quad(rng, d, 30);
    const QuadElem one(Rational(1), d);
    const Rational q = random_rational(rng, 20);
    bool ok = x + y == y + x && x * y == y * x && (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) &&
              x * (y + z) == x * y + x * z;
    if (!x.is_zero()) ok = ok && x * x.inverse() == one;
    ok = ok && (x * y).conjugate() == x.conjugate() * y.conjugate() &&
         (x + y).conjugate() == x.conjugate() + y.conjugate() && QuadElem(q, d).conjugate() == QuadElem(q, d);
    r.record(ok, x.to_string() + ", " + y.to_string() + ", " + z.to_string());
  }
  return r;
}

CheckResult check_interval_agreement(std::uint64_t seed, int n) {
  CheckResult r{"interval membership vs 100-bit enclosure"};
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const std::int64_t d = kRadicands[static_cast<std::size_t>(uniform(rng, 0, 4))];
    const QuadElem x = random_quad(rng, d, 100);
    Rational lo = random_rational(rng, 5), hi = random_rational(rng, 5);
    if (hi < lo) std::swap(lo, hi);
    const Interval e = enclose(x, 100);
    const Interval above = e - Interval::exact(lo, 100), below = Interval::exact(hi, 100) - e;
    const bool inside = above.lo().sign() >= 0 && below.lo().sign() >= 0;
    const bool outside = above.hi().sign() < 0 || below.hi().sign() < 0;
    if (!inside && !outside) continue;
    r.record(in_interval(x, lo, hi) == inside, x.to_string() + " in [" + lo.to_string() + ", " + hi.to_string() + "]");
  }
  return r;
}

CheckResult check_height_symmetry(std::uint64_t seed, int n) {
  CheckResult r{"height symmetry"};
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const std::int64_t d = kRadicands[static_cast<std::size_t>(uniform(rng, 0, 4))];
    const QuadElem x = random_quad(rng, d, 200);
    const QuadElem one(Rational(1), d), root = canonicalize(0, 1, 1, d);
    const BigInt h = height(x);
    r.record(h == height(-x) && h == height_in_basis(x, one, root) && h == height_in_basis(x, root, one),
             x.to_string());
  }
  return r;
}

CheckResult check_poly_ring_laws(std::uint64_t seed, int n) {
  CheckResult r{"polynomial ring laws"};
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const IntPoly f = random_int_poly(rng, 6, 20), g = random_int_poly(rng, 6, 20), h = random_int_poly(rng, 6, 20);
    bool ok = f + g == g + f && f * g == g * f && (f * g) * h == f * (g * h) && f * (g + h) == f * g + f * h;
    if (!f.is_zero() && !g.is_zero()) ok = ok && (f * g).degree() == f.degree() + g.degree();
    r.record(ok, to_string(f) + " ; " + to_string(g));
  }
  return r;
}

CheckResult check_planted_roots(std::uint64_t seed, int n) {
  CheckResult r{"planted rational roots"};
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> c(static_cast<std::size_t>(uniform(rng, 1, 5)));
    for (auto& v : c) v = random_rational(rng, 12);
    if (c.back().is_zero()) c.back() = Rational(1);
    const RatPoly f(std::move(c));
    const Rational root = random_rational(rng, 30);
    const auto roots = rational_roots(f * RatPoly{-root, Rational(1)});
    r.record(std::find(roots.begin(), roots.end(), root) != roots.end(), to_string(f) + " at " + root.to_string());
  }
  return r;
}

CheckResult check_resultant_numerics() {
  CheckResult r{"resultant minimal polynomials vanish numerically"};
  const RatPoly g{Rational(0), Rational(-3), Rational(0), Rational(1)};
  const double limit = std::ldexp(1.0, -100);
  for (auto [m, q] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 2}, {3, 2}, {5, 2}, {5, 3}, {7, 3}}) {
    const IntPoly mp = resultant_minpoly(m, Rational(big(static_cast<std::int64_t>(q))), g);
    const WitnessNumerics wn = witness_numerics(m, q, mp);
    const Interval v = eval_enclosure(mp, wn.a);
    r.record(static_cast<std::uint64_t>(mp.degree()) == m && v.contains_zero() && v.magnitude().to_double() < limit,
             "(" + std::to_string(m) + ", " + std::to_string(q) + ")");
  }
  return r;
}

CheckResult check_cyclotomic_products(std::uint64_t max_m) {
  CheckResult r{"cyclotomic products"};
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    IntPoly prod = IntPoly::constant(1);
    for (auto e : divisors(m)) prod = prod * cyclotomic(e);
    const IntPoly target = IntPoly::monomial(BigInt(1), m) - IntPoly::constant(1);
    r.record(prod == target && static_cast<std::uint64_t>(cyclotomic(m).degree()) == euler_phi(m),
             "m = " + std::to_string(m));
  }
  return r;
}

CheckResult check_cos_minimal_polys(std::uint64_t max_m) {
  CheckResult r{"cosine minimal polynomials"};
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    const IntPoly mp = cos_minimal_poly(m);
    const std::uint64_t expected = m <= 2 ? 1 : euler_phi(m) / 2;
    bool ok = static_cast<std::uint64_t>(mp.degree()) == expected && is_squarefree(mp);
    if (mp.degree() >= 2 && mp.degree() <= 3) ok = ok && rational_roots(to_rat(mp)).empty();
    // Every conjugate 2cos(2 pi j/m), gcd(j, m) = 1, is a root: mp is their product.
    std::uint64_t conjugates = 0;
    for (std::uint64_t j = 1; 2 * j <= m || (m <= 2 && j == 1); ++j) {
      if (std::gcd(j, m) != 1) continue;
      ++conjugates;
      try {
        angle_number(j, m);
      } catch (const Error&) {
        ok = false;
      }
    }
    r.record(ok && conjugates == expected, "m = " + std::to_string(m));
  }
  return r;
}

CheckResult check_chebyshev_tower(std::uint64_t max_n) {
  CheckResult r{"Chebyshev-like polynomials match the tower"};
  for (std::uint64_t n = 1; n <= max_n; ++n)
    r.record(chebyshev_like(std::uint64_t{1} << n) == p_tower(n), "n = " + std::to_string(n));
  return r;
}

// ---------------------------------------------------------------- coprime counting

namespace {

Box random_box(Rng& rng, std::int64_t max_floor) {
  const auto k = static_cast<std::size_t>(uniform(rng, 2, 4));
  std::vector<Rational> sides;
  for (std::size_t i = 0; i < k; ++i)
    sides.emplace_back(Rational(big(uniform(rng, 1, max_floor))) + Rational(big(uniform(rng, 0, 99)), BigInt(100)));
  return Box(std::move(sides));
}

std::string box_text(const Box& b) {
  std::string s;
  for (const auto& x : b.sides()) s += (s.empty() ? "" : ",") + x.to_string();
  return s;
}

}  // namespace

CheckResult check_sieve_random(std::uint64_t seed, int n) {
  CheckResult r{"sieve equals enumeration on random boxes"};
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const Box b = random_box(rng, 25);
    r.record(sieve_count(b) == brute_count(b), box_text(b));
  }
  return r;
}

CheckResult check_floor_invariance(std::uint64_t seed, int n) {
  CheckResult r{"floor invariance"};
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const Box b = random_box(rng, 200);
    r.record(sieve_count(b) == sieve_count(Box::integer(b.floors())), box_text(b));
  }
  return r;
}

CheckResult check_count_monotone(std::uint64_t seed, int n) {
  CheckResult r{"count monotone in each side"};
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const Box b = random_box(rng, 200);
    auto sides = b.sides();
    const auto at = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(sides.size()) - 1));
    sides[at] = sides[at] + Rational(big(uniform(rng, 0, 300)), BigInt(100));
    r.record(sieve_count(Box(sides)) >= sieve_count(b), box_text(b));
  }
  return r;
}

CheckResult check_perturbation_bound(std::uint64_t seed, int n) {
  CheckResult r{"product perturbation bound"};
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(uniform(rng, 2, 5));
    const double base = 1 + 1000 * unit(rng), E = 4;
    std::vector<double> x(k), y(k);
    for (std::size_t j = 0; j < k; ++j) {
      x[j] = base * (1 + (E - 1) * unit(rng));
      y[j] = x[j] + (2 * unit(rng) - 1);
    }
    double px = 1, py = 1;
    for (std::size_t j = 0; j < k; ++j) {
      px *= x[j];
      py *= y[j];
    }
    r.record(std::abs(px - py) <= product_perturbation_bound(x) * (1 + 1e-12), "k = " + std::to_string(k));
  }
  return r;
}

CheckResult check_error_scaling(const std::vector<std::int64_t>& Ns) {
  CheckResult r{"count error within 10 f_k"};
  for (std::size_t k : {2, 3})
    for (auto N : Ns) {
      const CountReport rep = lehmer_report(Box::integer(std::vector<std::int64_t>(k, N)));
      r.record(std::abs(rep.error) <= 10 * rep.f_k, "k = " + std::to_string(k) + ", N = " + std::to_string(N));
    }
  return r;
}

// ---------------------------------------------------------------- height balls

CheckResult check_ball_counts(std::int64_t max_rational_R, std::int64_t max_quadratic_R) {
  CheckResult r{"ball counts equal enumeration"};
  auto run = [&](const FieldDescriptor& f, std::int64_t max_R) {
    for (std::int64_t R = 1; R <= max_R; ++R) {
      const Rational q(R);
      const bool ok = count_ball(f, q) == enumerate_ball(f, q).size() &&
                      count_ball_interval(f, q, Rational(-2), Rational(2)) ==
                          enumerate_ball_interval(f, q, Rational(-2), Rational(2)).size();
      r.record(ok, f.name() + ", R = " + std::to_string(R));
    }
  };
  run(FieldDescriptor::rationals(), max_rational_R);
  for (const auto& f : quadratic_fields(kRadicands)) run(f, max_quadratic_R);
  return r;
}

CheckResult check_ball_nesting(std::uint64_t seed, int n) {
  CheckResult r{"ball nesting"};
  std::vector<FieldDescriptor> fields{FieldDescriptor::rationals(), FieldDescriptor::quadratic(2)};
  for (const auto& f : fields) {
    std::vector<Tuple> prev;
    for (std::int64_t R = 1; R <= 12; ++R) {
      auto cur = enumerate_ball(f, Rational(R));
      std::sort(cur.begin(), cur.end());
      r.record(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()), f.name() + ", R = " + std::to_string(R));
      prev = std::move(cur);
    }
  }
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const auto& f = fields[static_cast<std::size_t>(uniform(rng, 0, 1))];
    const Tuple t = f.is_rational() ? to_tuple(f.embed(random_rational(rng, 15))) : to_tuple(random_quad(rng, 2, 15));
    auto at = enumerate_ball(f, Rational(height(t)));
    auto below = height(t) > 1 ? enumerate_ball(f, Rational(height(t) - 1)) : std::vector<Tuple>{};
    std::sort(at.begin(), at.end());
    std::sort(below.begin(), below.end());
    r.record(std::binary_search(at.begin(), at.end(), t) && !std::binary_search(below.begin(), below.end(), t),
             tuple_text(t));
  }
  return r;
}

CheckResult check_ball_asymptotics(std::int64_t rational_R, std::int64_t quadratic_R) {
  CheckResult r{"ball size against its main term"};
  auto one = [&](const FieldDescriptor& f, std::int64_t R) {
    const int k = f.degree();
    const double ratio = count_ball(f, Rational(R)).get_d() * zeta(k + 1) / (std::pow(2.0, k) * std::pow(double(R), k + 1));
    r.record(ratio >= 0.97 && ratio <= 1.03, f.name() + ", ratio " + std::to_string(ratio));
  };
  one(FieldDescriptor::rationals(), rational_R);
  for (const auto& f : quadratic_fields({2, 3, 5})) one(f, quadratic_R);
  return r;
}

CheckResult check_qbox_membership(std::int64_t max_R, std::uint64_t cap) {
  CheckResult r{"Q(R) lies in the ball and in [-2, 2]"};
  const auto Q = FieldDescriptor::rationals();
  for (std::int64_t R = 2; R <= max_R; ++R) {
    const QBoxReport q = qbox(Q, R, cap);
    r.record(q.violations == 0 && !q.sampled && q.checked == q.count, "R = " + std::to_string(R));
  }
  return r;
}

CheckResult check_qbox_main_term(std::int64_t rational_R, std::int64_t quadratic_R, std::uint64_t cap) {
  CheckResult r{"Q(R) size against its main term"};
  auto one = [&](const FieldDescriptor& f, std::int64_t R) {
    const QBoxReport q = qbox(f, R, cap);
    r.record(q.violations == 0 && std::abs(q.ratio - 1) <= 0.03, f.name() + ", ratio " + std::to_string(q.ratio));
  };
  one(FieldDescriptor::rationals(), rational_R);
  one(FieldDescriptor::quadratic(2), quadratic_R);
  return r;
}

// ---------------------------------------------------------------- trisection numbers

CheckResult check_search_bound(std::int64_t max_rational_R, std::int64_t max_quadratic_R) {
  CheckResult r{"preimages of height-R values lie in the search ball"};
  auto run = [&](const FieldDescriptor& f, std::int64_t max_R) {
    std::vector<std::int64_t> S(static_cast<std::size_t>(max_R + 1));
    for (std::int64_t R = 1; R <= max_R; ++R) S[static_cast<std::size_t>(R)] = to_int64(preimage_bound(f, Rational(R)));
    const std::int64_t T = 3 * S.back();
    visit_ball(f, T, 1, T, [&](const Tuple& t) {
      const std::int64_t h = height(image_of(t, f.d()).image);
      if (h > max_R) return;
      r.record(height(t) <= S[static_cast<std::size_t>(h)], f.name() + " " + tuple_text(t));
    });
  };
  run(FieldDescriptor::rationals(), max_rational_R);
  for (const auto& f : quadratic_fields({2, 3, 5})) run(f, max_quadratic_R);
  return r;
}

CheckResult check_fast_path_equivalence(std::int64_t R) {
  CheckResult r{"fast path agrees with bounded search"};
  const auto Q = FieldDescriptor::rationals();
  for (const Tuple& t : enumerate_ball_interval(Q, Rational(R), Rational(-2), Rational(2))) {
    const Rational a(big(t.a1), big(t.b));
    const auto fast = rational_fast_path(a);
    const auto slow = bounded_search(Q, a, preimage_bound(Q, Rational(height(t))));
    const bool ok = fast.has_value() == slow.has_value() && (!fast || FieldElement(*fast) == *slow);
    r.record(ok, a.to_string());
  }
  return r;
}

CheckResult check_ambient_consistency(std::int64_t H) {
  CheckResult r{"rational values decide alike over Q and Q(sqrt d)"};
  const auto Q = FieldDescriptor::rationals();
  for (const Tuple& t : enumerate_ball_interval(Q, Rational(H), Rational(-2), Rational(2))) {
    const Rational a(big(t.a1), big(t.b));
    const bool in_q = decide_trisection(Q, a).member;
    for (const auto& f : quadratic_fields({2, 3, 5}))
      r.record(decide_trisection(f, a).member == in_q, a.to_string() + " over " + f.name());
  }
  return r;
}

CheckResult check_numerator_identity(std::int64_t max_rational_R, std::int64_t max_quadratic_R, unsigned shards) {
  CheckResult r{"decided members equal the density numerator"};
  auto run = [&](const FieldDescriptor& f, std::int64_t max_R) {
    std::vector<std::uint64_t> members(static_cast<std::size_t>(max_R + 1), 0);
    for (const Tuple& t : enumerate_ball_interval(f, Rational(max_R), Rational(-2), Rational(2))) {
      const FieldElement a = to_element(f, t);
      const TrisectionVerdict v = decide_trisection(f, a);
      if (!v.member) continue;
      ++members[static_cast<std::size_t>(height(t))];
      const FieldElement w = *v.witness;
      r.record(apply_f(w) == a && in_interval(w, Rational(-2), Rational(2)), "witness for " + to_string(a));
    }
    std::vector<std::int64_t> Rs(static_cast<std::size_t>(max_R));
    std::iota(Rs.begin(), Rs.end(), 1);
    const DensityReport d = density_experiment(f, Rs, shards);
    std::uint64_t cumulative = 0;
    for (std::int64_t R = 1; R <= max_R; ++R) {
      cumulative += members[static_cast<std::size_t>(R)];
      r.record(d.points[static_cast<std::size_t>(R - 1)].num == cumulative, f.name() + ", R = " + std::to_string(R));
    }
  };
  run(FieldDescriptor::rationals(), max_rational_R);
  for (const auto& f : quadratic_fields({2, 3, 5})) run(f, max_quadratic_R);
  return r;
}

CheckResult check_gcd_bound(std::int64_t R, const std::vector<std::int64_t>& ds) {
  CheckResult r{"image gcd divides 8d"};
  for (const auto& f : quadratic_fields(ds)) {
    std::uint64_t violations = 0, seen = 0;
    std::string first;
    visit_ball(f, R, 1, R, [&](const Tuple& t) {
      ++seen;
      try {
        image_of(t, f.d());
      } catch (const Error&) {
        if (violations++ == 0) first = f.name() + " " + tuple_text(t);
      }
    });
    r.cases += seen;
    r.falsified += violations;
    if (violations > 0 && r.first_failure.empty()) r.first_failure = first;
  }
  return r;
}

CheckResult check_density_monotone(unsigned shards) {
  CheckResult r{"density numerator and denominator monotone"};
  auto run = [&](const FieldDescriptor& f, const std::vector<std::int64_t>& Rs) {
    const DensityReport d = density_experiment(f, Rs, shards);
    for (std::size_t i = 0; i < d.points.size(); ++i) {
      const auto& p = d.points[i];
      bool ok = p.delta >= 0 && p.delta <= 1 && p.num <= p.den;
      if (i > 0) ok = ok && p.num >= d.points[i - 1].num && p.den >= d.points[i - 1].den;
      r.record(ok, f.name() + ", R = " + std::to_string(p.R));
    }
  };
  std::vector<std::int64_t> q, k;
  for (std::int64_t R = 5; R <= 100; R += 5) q.push_back(R);
  for (std::int64_t R = 2; R <= 20; R += 2) k.push_back(R);
  run(FieldDescriptor::rationals(), q);
  run(FieldDescriptor::quadratic(2), k);
  return r;
}

// ---------------------------------------------------------------- n-section and degrees

CheckResult check_psection_numerics(std::uint64_t max_p, std::uint64_t seed, int samples) {
  CheckResult r{"P(cos t) = cos(p t)"};
  Rng rng(seed);
  const mpfr_prec_t prec = 256;
  for (std::uint64_t p = 3; p <= max_p; p += 2) {
    if (!is_prime(p)) continue;
    const PsectionPoly pp = psection_poly(p);
    for (int i = 0; i < samples; ++i) {
      const Rational t = random_angle(rng);
      const Interval theta = Interval::exact(t, prec);
      const Interval v = eval_enclosure(pp.body, Interval::cos(theta)) -
                         Interval::cos(Interval::exact(big(static_cast<std::int64_t>(p)), prec) * theta);
      r.record(v.contains_zero() && v.magnitude().to_double() < 1e-25,
               "p = " + std::to_string(p) + ", t = " + t.to_string());
    }
  }
  return r;
}

CheckResult check_psection_structure(std::uint64_t max_p) {
  CheckResult r{"p-section polynomial structure"};
  for (std::uint64_t p = 3; p <= max_p; p += 2)
    if (is_prime(p)) r.record(verify_structure(psection_poly(p)).ok(), "p = " + std::to_string(p));
  r.record(cubic_bridge_holds(), "2P(x, a) = p(2x, 2a)");
  return r;
}

CheckResult check_psection_certificates(std::uint64_t seed, int n) {
  CheckResult r{"p-section certificates"};
  Rng rng(seed);
  const std::vector<std::int64_t> primes{3, 5, 7, 11, 13};
  const auto Q = FieldDescriptor::rationals();
  for (int i = 0; i < n; ++i) {
    const std::int64_t p = primes[static_cast<std::size_t>(uniform(rng, 0, 4))];
    std::int64_t t = 0;
    while (t == 0 || t % p == 0) t = nonzero(rng, 20);
    const std::int64_t c = p * t;
    std::int64_t dd = 0;
    while (dd < std::abs(c) || std::gcd(c, dd) != 1) dd = uniform(rng, std::abs(c), 4 * std::abs(c) + 10);
    const auto up = static_cast<std::uint64_t>(p);
    const Certificate cert = nonsectability_cert(up, big(c), big(dd));
    const auto& pe = std::get<PsectionEisenstein>(cert.data);
    bool ok = verify(cert).ok && eisenstein_check(pe.cleared, big(p));
    // For p = 3, cos(alpha) = c/dd makes 2c/dd a non-member.
    if (p == 3) ok = ok && !decide_trisection(Q, Rational(big(2 * c), big(dd))).member;
    r.record(ok, "p = " + std::to_string(p) + ", c/d = " + std::to_string(c) + "/" + std::to_string(dd));
  }
  return r;
}

CheckResult check_tower_numerics(std::uint64_t max_n, std::uint64_t seed, int samples) {
  CheckResult r{"p_n(2cos t) = 2cos(2^n t)"};
  Rng rng(seed);
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    const IntPoly pn = p_tower(n);
    std::size_t bits = 0;
    for (const auto& c : pn.coeffs()) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    const auto prec = static_cast<mpfr_prec_t>(bits + 2 * static_cast<std::size_t>(pn.degree()) + 192);
    const Interval two = Interval::exact(BigInt(2), prec);
    for (int i = 0; i < samples; ++i) {
      const Rational t = random_angle(rng);
      const Interval theta = Interval::exact(t, prec);
      const Interval v = eval_enclosure(pn, two * Interval::cos(theta)) -
                         two * Interval::cos(Interval::exact(BigInt(1) << static_cast<mp_bitcnt_t>(n), prec) * theta);
      r.record(v.contains_zero() && v.magnitude().to_double() < 1e-25,
               "n = " + std::to_string(n) + ", t = " + t.to_string());
    }
  }
  return r;
}

CheckResult check_degrees(std::uint64_t max_a, std::uint64_t max_cd) {
  CheckResult r{"degrees of a_n, c_n, d_n"};
  for (std::uint64_t n = 1; n <= max_a; ++n) r.record(an_degree_check(n).ok(), "a_" + std::to_string(n));
  for (std::uint64_t n = 1; n <= max_cd; ++n) {
    r.record(cn_degree_check(n).ok(), "c_" + std::to_string(n));
    r.record(dn_degree_check(n).ok(), "d_" + std::to_string(n));
  }
  return r;
}

CheckResult check_identities(std::uint64_t N) {
  CheckResult r{"half-angle identities and the small table"};
  const IdentityReport rep = identity_suite(N);
  const double limit = std::ldexp(1.0, -64);
  for (const auto& i : rep.identities)
    r.record(i.holds && i.residual < limit, i.identity + " at n = " + std::to_string(i.n));
  for (const auto& t : rep.table) r.record(t.ok, t.name + "_" + std::to_string(t.n) + " = " + t.value);
  return r;
}

// ---------------------------------------------------------------- suite

SuiteReport verify_suite(const VerifyConfig& config) {
  const bool full = config.full;
  const std::uint64_t s = config.seed;
  SuiteReport rep;
  auto add = [&](CheckResult c) { rep.checks.push_back(std::move(c)); };
  add(check_canonical_forms(s, 2000));
  add(check_field_laws(s + 1, 1000));
  add(check_interval_agreement(s + 2, full ? 10000 : 2000));
  add(check_height_symmetry(s + 3, 1000));
  add(check_poly_ring_laws(s + 4, 300));
  add(check_planted_roots(s + 5, 200));
  add(check_resultant_numerics());
  add(check_cyclotomic_products(full ? 200 : 60));
  add(check_cos_minimal_polys(60));
  add(check_chebyshev_tower(10));
  add(check_sieve_random(s + 6, 200));
  add(check_floor_invariance(s + 7, 200));
  add(check_count_monotone(s + 8, 200));
  add(check_perturbation_bound(s + 9, 1000));
  add(check_error_scaling(full ? std::vector<std::int64_t>{100, 1000, 10000} : std::vector<std::int64_t>{100, 1000}));
  add(check_ball_counts(full ? 60 : 30, full ? 25 : 12));
  add(check_ball_nesting(s + 10, 100));
  add(check_ball_asymptotics(10000, 300));
  add(check_qbox_membership(full ? 200 : 60, std::uint64_t{1} << 22));
  add(check_qbox_main_term(10000, 300, 1000));
  add(check_search_bound(full ? 50 : 20, full ? 20 : 8));
  add(check_fast_path_equivalence(full ? 200 : 60));
  add(check_ambient_consistency(full ? 60 : 20));
  add(check_numerator_identity(full ? 50 : 20, full ? 20 : 8, config.shards));
  add(check_gcd_bound(full ? 200 : 40, kRadicands));
  add(check_density_monotone(config.shards));
  add(check_psection_numerics(31, s + 11, full ? 100 : 20));
  add(check_psection_structure(101));
  add(check_psection_certificates(s + 12, 100));
  add(check_tower_numerics(10, s + 13, full ? 50 : 10));
  add(check_degrees(10, 8));
  add(check_identities(10));
  return rep;
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j{{"name", c.name}, {"cases", c.cases}, {"falsified", c.falsified}};
    if (!c.ok()) j["first_failure"] = c.first_failure;
    checks.push_back(std::move(j));
  }
  return {{"checks", checks}, {"falsifications", r.falsifications()}};
}

}  // namespace trisect
