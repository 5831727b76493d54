#include "trisect/height_enum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "trisect/config.hpp"
#include "trisect/coprime_count.hpp"
#include "trisect/error.hpp"
#include "trisect/parallel.hpp"

namespace trisect {

namespace {

void require_standard(const FieldDescriptor& field) {
  if (!field.has_standard_basis())
    fail(ErrorCode::BadParameters, "height balls are enumerated in the standard basis only");
}

__int128 floor_div128(__int128 a, __int128 b) {
  __int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

__int128 ceil_div128(__int128 a, __int128 b) { return -floor_div128(-a, b); }

// An endpoint t = num/den with machine-sized parts.
struct Endpoint {
  std::int64_t num;
  std::int64_t den;
  long double value;
};

Endpoint make_endpoint(const Rational& t) {
  return {to_int64(t.num()), to_int64(t.den()), static_cast<long double>(t.to_double())};
}

// sign((a1 + a2 sqrt d)/b - t)
int sign_minus(std::int64_t a1, std::int64_t a2, std::int64_t b, std::int64_t d, const Endpoint& t) {
  const __int128 x = static_cast<__int128>(a1) * t.den - static_cast<__int128>(t.num) * b;
  const __int128 y = static_cast<__int128>(a2) * t.den;
  return sign_of_surd(x, y, d);
}

// Clamps [lo, hi] to the range any element of B_K(R) can reach.
std::pair<Rational, Rational> clamp_interval(const FieldDescriptor& field, std::int64_t R, const Rational& lo,
                                             const Rational& hi) {
  const std::int64_t root = field.is_rational() ? 0 : static_cast<std::int64_t>(std::sqrt(field.d())) + 1;
  const Rational reach(BigInt(BigInt(static_cast<long>(R)) * (1 + root) + 1));
  return {std::max(lo, -reach), std::min(hi, reach)};
}

// Smallest v in [vmin, vmax + 1] with pred(v) true, pred monotone nondecreasing,
// starting from a floating estimate.
template <class Pred>
std::int64_t first_true(std::int64_t estimate, std::int64_t vmin, std::int64_t vmax, Pred pred) {
  std::int64_t v = std::clamp(estimate, vmin, vmax + 1);
  while (v > vmin && pred(v - 1)) --v;
  while (v <= vmax && !pred(v)) ++v;
  return v;
}

std::int64_t clamp_estimate(long double x) {
  if (!(x > -4e18L)) return std::numeric_limits<std::int64_t>::min() / 2;
  if (!(x < 4e18L)) return std::numeric_limits<std::int64_t>::max() / 2;
  return static_cast<std::int64_t>(std::floor(x));
}

}  // namespace

FieldElement to_element(const FieldDescriptor& field, const Tuple& t) {
  if (field.is_rational()) return Rational(BigInt(static_cast<long>(t.a1)), BigInt(static_cast<long>(t.b)));
  return canonicalize(static_cast<long>(t.a1), static_cast<long>(t.a2), static_cast<long>(t.b), field.d());
}

Tuple to_tuple(const FieldElement& x) {
  if (const auto* r = std::get_if<Rational>(&x)) return {to_int64(r->num()), 0, to_int64(r->den())};
  const auto& q = std::get<QuadElem>(x);
  return {to_int64(q.a1()), to_int64(q.a2()), to_int64(q.b())};
}

std::int64_t height(const Tuple& t) { return std::max({std::abs(t.a1), std::abs(t.a2), t.b}); }

std::int64_t height_limit(const Rational& R) {
  if (R < Rational(1)) return 0;
  return to_int64(floor(R));
}

void visit_ball(const FieldDescriptor& field, std::int64_t R, std::int64_t b_lo, std::int64_t b_hi,
                const TupleVisitor& visit) {
  require_standard(field);
  b_lo = std::max<std::int64_t>(b_lo, 1);
  b_hi = std::min(b_hi, R);
  for (std::int64_t b = b_lo; b <= b_hi; ++b) {
    for (std::int64_t a1 = -R; a1 <= R; ++a1) {
      const std::int64_t g1 = std::gcd(a1, b);
      if (field.is_rational()) {
        if (g1 == 1) visit(Tuple{a1, 0, b});
        continue;
      }
      for (std::int64_t a2 = -R; a2 <= R; ++a2)
        if (g1 == 1 || std::gcd(g1, a2) == 1) visit(Tuple{a1, a2, b});
    }
  }
}

void visit_ball_interval(const FieldDescriptor& field, std::int64_t R, const Rational& lo, const Rational& hi,
                         std::int64_t b_lo, std::int64_t b_hi, const TupleVisitor& visit) {
  require_standard(field);
  if (hi < lo || R < 1) return;
  const auto [clo, chi] = clamp_interval(field, R, lo, hi);
  if (chi < clo) return;
  const Endpoint L = make_endpoint(clo), H = make_endpoint(chi);
  b_lo = std::max<std::int64_t>(b_lo, 1);
  b_hi = std::min(b_hi, R);
  const std::int64_t d = field.d();
  for (std::int64_t b = b_lo; b <= b_hi; ++b) {
    if (field.is_rational()) {
      const auto a_lo = static_cast<std::int64_t>(
          std::max<__int128>(-R, ceil_div128(static_cast<__int128>(L.num) * b, L.den)));
      const auto a_hi = static_cast<std::int64_t>(
          std::min<__int128>(R, floor_div128(static_cast<__int128>(H.num) * b, H.den)));
      for (std::int64_t a1 = a_lo; a1 <= a_hi; ++a1)
        if (std::gcd(a1, b) == 1) visit(Tuple{a1, 0, b});
      continue;
    }
    const long double root = std::sqrt(static_cast<long double>(d));
    for (std::int64_t a1 = -R; a1 <= R; ++a1) {
      // a2 with lo*b <= a1 + a2 sqrt(d) <= hi*b
      const std::int64_t lo2 = first_true(clamp_estimate((L.value * b - a1) / root), -R, R,
                                          [&](std::int64_t a2) { return sign_minus(a1, a2, b, d, L) >= 0; });
      const std::int64_t hi2 =
          first_true(clamp_estimate((H.value * b - a1) / root), -R, R,
                     [&](std::int64_t a2) { return sign_minus(a1, a2, b, d, H) > 0; }) -
          1;
      if (lo2 > hi2) continue;
      const std::int64_t g1 = std::gcd(a1, b);
      for (std::int64_t a2 = lo2; a2 <= hi2; ++a2)
        if (g1 == 1 || std::gcd(g1, a2) == 1) visit(Tuple{a1, a2, b});
    }
  }
}

std::vector<Tuple> enumerate_ball(const FieldDescriptor& field, const Rational& R, std::uint64_t cap) {
  const BigInt n = count_ball(field, R);
  if (n > BigInt(static_cast<unsigned long>(cap)))
    fail(ErrorCode::CapExceeded, "ball holds " + n.get_str() + " elements, cap " + std::to_string(cap));
  std::vector<Tuple> out;
  out.reserve(n.get_ui());
  const std::int64_t r = height_limit(R);
  visit_ball(field, r, 1, r, [&](const Tuple& t) { out.push_back(t); });
  return out;
}

std::vector<Tuple> enumerate_ball(const FieldDescriptor& field, const Rational& R) {
  return enumerate_ball(field, R, default_cap());
}

std::vector<Tuple> enumerate_ball_interval(const FieldDescriptor& field, const Rational& R, const Rational& lo,
                                           const Rational& hi, std::uint64_t cap) {
  const BigInt n = count_ball_interval(field, R, lo, hi);
  if (n > BigInt(static_cast<unsigned long>(cap)))
    fail(ErrorCode::CapExceeded, "interval ball holds " + n.get_str() + " elements, cap " + std::to_string(cap));
  std::vector<Tuple> out;
  out.reserve(n.get_ui());
  const std::int64_t r = height_limit(R);
  visit_ball_interval(field, r, lo, hi, 1, r, [&](const Tuple& t) { out.push_back(t); });
  return out;
}

std::vector<Tuple> enumerate_ball_interval(const FieldDescriptor& field, const Rational& R, const Rational& lo,
                                           const Rational& hi) {
  return enumerate_ball_interval(field, R, lo, hi, default_cap());
}

BigInt count_ball(const FieldDescriptor& field, const Rational& R) {
  require_standard(field);
  const std::int64_t r = height_limit(R);
  if (r < 1) return 0;
  const int k = field.degree();
  const MobiusTable table(static_cast<std::uint64_t>(r));
  // Choose which m of the k numerator coordinates vanish; the rest carry a sign
  // and, together with b, form a coprime tuple of positive integers <= r. All
  // numerators zero leaves only b = 1.
  BigInt total = 1;
  for (int m = 0; m < k; ++m) {
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
    const std::vector<std::int64_t> sides(static_cast<std::size_t>(k - m + 1), r);
    total += binom * (BigInt(1) << (k - m)) * sieve_count(sides, table);
  }
  return total;
}

BigInt count_ball_interval(const FieldDescriptor& field, const Rational& R, const Rational& lo, const Rational& hi,
                           unsigned shards) {
  require_standard(field);
  const std::int64_t r = height_limit(R);
  if (hi < lo || r < 1) return 0;
  const auto [clo, chi] = clamp_interval(field, r, lo, hi);
  if (chi < clo) return 0;
  const Endpoint L = make_endpoint(clo), H = make_endpoint(chi);
  const std::int64_t d = field.d();

  auto partial = run_shards<BigInt>(shards, [&](unsigned s) {
    const auto [b_begin, b_end] = shard_range(1, r + 1, s, shards);
    std::int64_t acc = 0;
    for (std::int64_t b = b_begin; b < b_end; ++b) {
      if (field.is_rational()) {
        const auto a_lo = static_cast<std::int64_t>(
            std::max<__int128>(-r, ceil_div128(static_cast<__int128>(L.num) * b, L.den)));
        const auto a_hi = static_cast<std::int64_t>(
            std::min<__int128>(r, floor_div128(static_cast<__int128>(H.num) * b, H.den)));
        if (a_lo <= a_hi)
          acc += count_coprime_in_range(a_lo, a_hi, signed_squarefree_divisors(static_cast<std::uint64_t>(b)));
        continue;
      }
      const long double root = std::sqrt(static_cast<long double>(d));
      for (std::int64_t a2 = -r; a2 <= r; ++a2) {
        // a1 with lo*b <= a1 + a2 sqrt(d) <= hi*b
        const std::int64_t lo1 = first_true(clamp_estimate(L.value * b - a2 * root), -r, r,
                                            [&](std::int64_t a1) { return sign_minus(a1, a2, b, d, L) >= 0; });
        const std::int64_t hi1 =
            first_true(clamp_estimate(H.value * b - a2 * root), -r, r,
                       [&](std::int64_t a1) { return sign_minus(a1, a2, b, d, H) > 0; }) -
            1;
        if (lo1 > hi1) continue;
        const std::int64_t g = std::gcd(a2, b);
        if (g == 1)
          acc += hi1 - lo1 + 1;
        else
          acc += count_coprime_in_range(lo1, hi1, signed_squarefree_divisors(static_cast<std::uint64_t>(g)));
      }
    }
    return BigInt(static_cast<long>(acc));
  });
  BigInt total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

double ball_main_term(const FieldDescriptor& field, double R) {
  const int k = field.degree();
  return std::ldexp(std::pow(R, k + 1), k) / zeta(k + 1, 1e-12);
}

QBoxReport qbox(const FieldDescriptor& field, std::int64_t R, std::uint64_t cap, std::uint64_t seed,
                std::uint64_t samples) {
  require_standard(field);
  const int k = field.degree();
  if (R < k + 1) fail(ErrorCode::BadParameters, "Q(R) needs R >= k + 1");
  QBoxReport rep;
  rep.R = R;
  // Outer sides n_i = 2R/((k+1) v_i), n_{k+1} = R; the inner box differs only in
  // the last side, kR/(k+1). The sqrt(d) side is stored as its floor.
  const BigInt bigR = static_cast<long>(R);
  std::vector<std::int64_t> caps;
  rep.outer.emplace_back(BigInt(2 * bigR), BigInt(k + 1));
  caps.push_back(to_int64(floor(rep.outer.back())));
  if (k == 2) {
    BigInt s;
    const BigInt q = (4 * bigR * bigR) / (9 * field.d());
    mpz_sqrt(s.get_mpz_t(), q.get_mpz_t());
    rep.outer.emplace_back(s);
    caps.push_back(to_int64(s));
  }
  rep.inner = rep.outer;
  rep.outer.emplace_back(bigR);
  rep.inner.emplace_back(BigInt(k * bigR), BigInt(k + 1));

  std::vector<std::int64_t> outer_floors = caps, inner_floors = caps;
  outer_floors.push_back(R);
  const std::int64_t b_min = to_int64(floor(rep.inner.back())) + 1;
  inner_floors.push_back(b_min - 1);
  const MobiusTable table(static_cast<std::uint64_t>(R));
  rep.count = sieve_count(outer_floors, table) - sieve_count(inner_floors, table);

  const Endpoint minus2 = make_endpoint(Rational(-2)), plus2 = make_endpoint(Rational(2));
  const std::int64_t d = field.d();
  auto check = [&](std::int64_t a1, std::int64_t a2, std::int64_t b) {
    ++rep.checked;
    const bool in_ball = std::max({std::abs(a1), std::abs(a2), b}) <= R && b >= 1;
    const bool in_range = field.is_rational()
                              ? (a1 <= 2 * b && a1 >= -2 * b)
                              : (sign_minus(a1, a2, b, d, minus2) >= 0 && sign_minus(a1, a2, b, d, plus2) <= 0);
    if (!in_ball || !in_range) ++rep.violations;
  };
  const std::int64_t n1 = caps[0], n2 = k == 2 ? caps[1] : 0;
  if (rep.count <= BigInt(static_cast<unsigned long>(cap))) {
    for (std::int64_t b = b_min; b <= R; ++b)
      for (std::int64_t a1 = 1; a1 <= n1; ++a1) {
        const std::int64_t g1 = std::gcd(a1, b);
        if (k == 1) {
          if (g1 == 1) check(a1, 0, b);
          continue;
        }
        for (std::int64_t a2 = 1; a2 <= n2; ++a2)
          if (std::gcd(g1, a2) == 1) check(a1, a2, b);
      }
    if (BigInt(static_cast<unsigned long>(rep.checked)) != rep.count) ++rep.violations;
  } else {
    rep.sampled = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> pick_b(b_min, R), pick_a1(1, n1), pick_a2(1, std::max<std::int64_t>(n2, 1));
    while (rep.checked < samples) {
      const std::int64_t b = pick_b(rng), a1 = pick_a1(rng), a2 = k == 2 ? pick_a2(rng) : 0;
      if (std::gcd(std::gcd(a1, a2), b) != 1) continue;
      check(a1, a2, b);
    }
  }
  const double Rd = static_cast<double>(R);
  const double vnorm = field.basis_norm();
  rep.main_term = std::ldexp(std::pow(Rd, k + 1), k) /
                  (std::pow(static_cast<double>(k + 1), k + 1) * vnorm * zeta(k + 1, 1e-12));
  rep.ratio = rep.count.get_d() / rep.main_term;
  return rep;
}

}  // namespace trisect
