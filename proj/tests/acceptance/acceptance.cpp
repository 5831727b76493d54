// One line per acceptance criterion: PASS/FAIL, elapsed time against its limit,
// and the measured quantities. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "trisect/algdeg.hpp"
#include "trisect/cli.hpp"
#include "trisect/config.hpp"
#include "trisect/coprime_count.hpp"
#include "trisect/error.hpp"
#include "trisect/height_enum.hpp"
#include "trisect/nsect.hpp"
#include "trisect/polyalg.hpp"
#include "trisect/trisect_core.hpp"
#include "trisect/verify_suite.hpp"

using namespace trisect;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "failed: " << what << "; ";
    ok = ok && cond;
  }
};

using Criterion = std::function<void(Outcome&)>;

int failures = 0;

void run(int id, const char* title, double limit_s, const Criterion& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.require(secs < limit_s, "time limit");
  if (!out.ok) ++failures;
  std::printf("%s %2d %-28s %8.2fs / %.0fs  %s\n", out.ok ? "PASS" : "FAIL", id, title, secs, limit_s,
              out.detail.str().c_str());
  std::fflush(stdout);
}

const FieldDescriptor kQ = FieldDescriptor::rationals();

void wantzel(Outcome& o) {
  const TrisectionVerdict v = decide_trisection(kQ, kQ.embed(Rational(1)));
  o.require(!v.member, "decide(1) is a member");
  const RatPoly p = parse_poly("x^3 - 3*x - 1");
  o.require(rational_roots(p).empty(), "x^3 - 3x - 1 has a rational root");
  o.detail << "method=" << to_string(v.method);
}

void eisenstein_family(Outcome& o) {
  int n = 0;
  for (long s = 1; s <= 20; ++s)
    for (long r = -20; r <= 20; ++r) {
      if (r == 0 || std::gcd(r, s) != 1 || r % 3 == 0 || s % 3 == 0 || 3 * std::abs(r) > 2 * s) continue;
      ++n;
      const Rational a(BigInt(3 * r), BigInt(s));
      const TrisectionVerdict v = decide_trisection(kQ, kQ.embed(a));
      o.require(!v.member, "3r/s member at r=" + std::to_string(r) + " s=" + std::to_string(s));
      o.require(verify(eisenstein_cert_3rs(BigInt(r), BigInt(s))).ok,
                "certificate at r=" + std::to_string(r) + " s=" + std::to_string(s));
    }
  o.require(n > 0, "empty family");
  o.detail << "pairs=" << n;
}

void square_family(Outcome& o) {
  const SquareFamilyReport r = square_family_check(100);
  o.require(r.checked > 0, "nothing checked");
  o.require(r.members.empty(), "a square is a member");
  o.detail << "checked=" << r.checked << " members=" << r.members.size();
}

// Coprime counts of every integer box [1,n1]x...x[1,nk], nj <= L, by gcd
// enumeration and k-dimensional prefix sums.
std::vector<std::int64_t> prefix_table(int k, int L) {
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) total *= static_cast<std::size_t>(L + 1);
  std::vector<std::int64_t> t(total, 0);
  std::vector<int> x(k, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    bool inside = true;
    long g = 0;
    for (int i = 0; i < k; ++i) {
      x[i] = static_cast<int>(rem % (L + 1));
      rem /= L + 1;
      inside = inside && x[i] > 0;
      g = std::gcd(g, static_cast<long>(x[i]));
    }
    t[idx] = inside && g == 1;
  }
  std::size_t stride = 1;
  for (int i = 0; i < k; ++i) {
    for (std::size_t idx = 0; idx < total; ++idx)
      if ((idx / stride) % (L + 1) > 0) t[idx] += t[idx - stride];
    stride *= L + 1;
  }
  return t;
}

void lehmer(Outcome& o) {
  const int L = 40;
  const MobiusTable table(L);
  std::uint64_t boxes = 0;
  for (int k = 2; k <= 4; ++k) {
    const std::vector<std::int64_t> t = prefix_table(k, L);
    std::vector<std::int64_t> floors(k);
    for (std::size_t idx = 0; idx < t.size(); ++idx) {
      std::size_t rem = idx;
      bool inside = true;
      for (int i = 0; i < k; ++i) {
        floors[i] = static_cast<std::int64_t>(rem % (L + 1));
        rem /= L + 1;
        inside = inside && floors[i] > 0;
      }
      if (!inside) continue;
      ++boxes;
      if (sieve_count(floors, table) != t[idx]) {
        o.require(false, "sieve vs enumeration, k=" + std::to_string(k));
        return;
      }
    }
  }
  std::mt19937_64 rng(2024);
  for (const auto& sides : {std::vector<std::int64_t>{40, 40}, {40, 1, 17}, {7, 40, 40, 3}, {1, 1}})
    o.require(brute_count(Box::integer(sides)) == sieve_count(Box::integer(sides)), "brute_count spot check");
  std::uniform_int_distribution<int> kdist(2, 4), num(100, 6000), den(1, 100);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> sides;
    const int k = kdist(rng);
    for (int j = 0; j < k; ++j) {
      Rational s(BigInt(num(rng)), BigInt(den(rng)));
      if (s < Rational(1)) s = Rational(1);
      if (s > Rational(60)) s = Rational(60);
      sides.push_back(s);
    }
    const Box box(sides);
    o.require(sieve_count(box) == brute_count(box), "random real-sided box " + std::to_string(i));
  }
  const double N = 1e4;
  const BigInt c = sieve_count(Box::integer({10000, 10000}));
  const double err = std::abs(c.get_d() / (N * N) - 1.0 / zeta(2));
  o.require(err <= 10 * std::log(N) / N, "N=10^4 error bound");
  o.detail << "boxes=" << boxes << " random=200 err=" << err;
}

void ball_counts(Outcome& o) {
  std::uint64_t cases = 0;
  for (std::int64_t R = 1; R <= 60; ++R, ++cases)
    o.require(count_ball(kQ, Rational(R)) == enumerate_ball(kQ, Rational(R)).size(), "Q at R=" + std::to_string(R));
  for (std::int64_t d : {2, 3, 5, 6, 7}) {
    const FieldDescriptor K = FieldDescriptor::quadratic(d);
    for (std::int64_t R = 1; R <= 25; ++R, ++cases)
      o.require(count_ball(K, Rational(R)) == enumerate_ball(K, Rational(R)).size(),
                "d=" + std::to_string(d) + " R=" + std::to_string(R));
  }
  const double ratio = count_ball(kQ, Rational(10000)).get_d() * zeta(2) / 2e8;
  o.require(ratio >= 0.99 && ratio <= 1.01, "ratio at 10^4");
  o.detail << "balls=" << cases << " ratio=" << ratio;
}

void qbox_check(Outcome& o) {
  std::uint64_t checked = 0;
  for (std::int64_t R = 2; R <= 200; ++R) {
    const QBoxReport r = qbox(kQ, R, default_cap());
    o.require(!r.sampled, "sampled at R=" + std::to_string(R));
    o.require(r.violations == 0, "membership at R=" + std::to_string(R));
    checked += r.checked;
  }
  const QBoxReport big = qbox(kQ, 10000, default_cap());
  o.require(std::abs(big.ratio - 1) <= 0.03, "main term at 10^4");
  o.detail << "checked=" << checked << " ratio=" << big.ratio;
}

void gcd_bound(Outcome& o) {
  const std::vector<std::int64_t> ds{2, 3, 5, 6, 7};
  const CheckResult r = check_gcd_bound(200, ds);
  BigInt expected = 0;
  for (std::int64_t d : ds) expected += count_ball(FieldDescriptor::quadratic(d), Rational(200));
  o.require(r.ok(), r.first_failure);
  o.require(BigInt(std::to_string(r.cases)) == expected, "case count");
  o.detail << "cases=" << r.cases << " violations=" << r.falsified;
}

void density_check(Outcome& o, const FieldDescriptor& K, const std::vector<std::int64_t>& Rs, double lo, double hi,
                   double exponent, double spread) {
  const DensityReport r = density_experiment(K, Rs, 1);
  o.require(r.slope.has_value(), "no slope");
  if (!r.slope) return;
  o.require(*r.slope >= lo && *r.slope <= hi, "slope");
  double mx = 0, mn = INFINITY;
  for (const auto& p : r.points) {
    const double scaled = p.delta * std::pow(static_cast<double>(p.R), exponent);
    mx = std::max(mx, scaled);
    mn = std::min(mn, scaled);
  }
  o.require(mn > 0 && mx / mn <= spread, "scaled density spread");
  o.detail << K.name() << " slope=" << *r.slope << " spread=" << mx / mn << "; ";
}

void nsect_check(Outcome& o) {
  int primes = 0;
  for (std::uint64_t p = 3; p <= 101; p += 2) {
    bool prime = true;
    for (std::uint64_t q = 3; q * q <= p; q += 2) prime = prime && p % q;
    if (!prime) continue;
    ++primes;
    o.require(verify_structure(psection_poly(p)).ok(), "structure p=" + std::to_string(p));
  }
  o.require(verify(nonsectability_cert(3, BigInt(3), BigInt(4))).ok, "(3,3,4)");
  o.require(verify(nonsectability_cert(5, BigInt(5), BigInt(7))).ok, "(5,5,7)");
  o.require(cubic_bridge_holds(), "cubic bridge");
  o.detail << "primes=" << primes;
}

void degrees(Outcome& o) {
  for (std::uint64_t n = 1; n <= 8; ++n) {
    const DegreeCheck c = cn_degree_check(n);
    o.require(c.ok() && c.degree == (std::uint64_t{1} << n), "c_" + std::to_string(n));
  }
  for (std::uint64_t n = 1; n <= 10; ++n) {
    const DegreeCheck a = an_degree_check(n);
    o.require(a.ok() && a.degree == (std::uint64_t{1} << (n - 1)), "a_" + std::to_string(n));
  }
  const IdentityReport r = identity_suite(10);
  o.require(r.ok(), "identity suite");
  o.require(r.max_residual < std::ldexp(1.0, -64), "residual");
  for (const auto& t : r.table) o.require(t.ok, "table " + t.name + std::to_string(t.n));
  o.detail << "max_residual=" << r.max_residual << " table=" << r.table.size();
}

void witnesses(Outcome& o) {
  for (std::uint64_t m : {5, 7}) {
    const Certificate c = nonconstructible_witness(m, 2);
    const auto& w = std::get<NonconstructibleWitness>(c.data);
    o.require(w.minpoly.degree() == static_cast<int>(m), "degree m=" + std::to_string(m));
    o.require(w.minpoly.degree() > 2, "degree above 2");
    o.require(w.root_error < 1e-20, "root error m=" + std::to_string(m));
    o.require(verify(c).ok, "verify m=" + std::to_string(m));
    o.detail << "m=" << m << " err=" << w.root_error << " ";
  }
}

void determinism(Outcome& o) {
  for (const char* fmt : {"json", "csv"}) {
    RunConfig d;
    d.verb = "density";
    d.R = {100, 1000, 10000};
    d.format = fmt;
    RunConfig l;
    l.verb = "lehmer";
    l.sides = "300.5,211,97.25";
    l.format = fmt;
    std::string d1, l1;
    for (unsigned s : {1u, 4u, 8u}) {
      d.shards = l.shards = s;
      const RunResult dr = execute(d), lr = execute(l);
      o.require(dr.exit_code == kExitOk && lr.exit_code == kExitOk, "exit code");
      if (s == 1) {
        d1 = dr.output;
        l1 = lr.output;
      }
      o.require(dr.output == d1, std::string("density ") + fmt + " shards=" + std::to_string(s));
      o.require(lr.output == l1, std::string("lehmer ") + fmt + " shards=" + std::to_string(s));
    }
  }
  o.detail << "shards={1,4,8} formats={json,csv}";
}

}  // namespace

int main() {
  run(1, "pi/3 not trisectable", 1, wantzel);
  run(2, "3r/s family", 10, eisenstein_family);
  run(3, "square family", 10, square_family);
  run(4, "coprime box counts", 60, lehmer);
  run(5, "height ball counts", 60, ball_counts);
  run(6, "Q(R) box", 60, qbox_check);
  run(7, "image gcd bound", 120, gcd_bound);
  run(8, "density over Q", 300, [](Outcome& o) {
    density_check(o, kQ, {100, 1000, 10000}, -4.0 / 3 - 0.15, -4.0 / 3 + 0.15, 4.0 / 3, 3);
  });
  run(9, "density over Q(sqrt d)", 900, [](Outcome& o) {
    for (std::int64_t d : {2, 3})
      density_check(o, FieldDescriptor::quadratic(d), {25, 50, 100, 200}, -2.35, -1.65, 2, 4);
  });
  run(10, "p-section structure", 10, nsect_check);
  run(11, "degrees and identities", 30, degrees);
  run(12, "non-constructible witnesses", 5, witnesses);
  run(13, "shard determinism", 600, determinism);
  std::printf("%d failed\n", failures);
  return failures == 0 ? 0 : 1;
}
