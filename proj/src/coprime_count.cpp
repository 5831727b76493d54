#include "trisect/coprime_count.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "trisect/config.hpp"
#include "trisect/error.hpp"
#include "trisect/parallel.hpp"

namespace trisect {

Box::Box(std::vector<Rational> sides) : sides_(std::move(sides)) {
  if (sides_.size() < 2) fail(ErrorCode::BadParameters, "a box needs at least two sides");
  for (const auto& s : sides_)
    if (s < Rational(1)) fail(ErrorCode::BadParameters, "box side " + s.to_string() + " is below 1");
}

Box Box::integer(const std::vector<std::int64_t>& sides) {
  std::vector<Rational> r;
  r.reserve(sides.size());
  for (auto s : sides) r.emplace_back(s);
  return Box(std::move(r));
}

Box Box::parse(std::string_view text) {
  std::vector<Rational> r;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) r.push_back(Rational::parse(item));
  return Box(std::move(r));
}

std::vector<std::int64_t> Box::floors() const {
  std::vector<std::int64_t> out;
  out.reserve(sides_.size());
  for (const auto& s : sides_) out.push_back(to_int64(floor(s)));
  return out;
}

std::vector<double> Box::as_doubles() const {
  std::vector<double> out;
  out.reserve(sides_.size());
  for (const auto& s : sides_) out.push_back(s.to_double());
  return out;
}

MobiusTable::MobiusTable(std::uint64_t n) : mu_(n + 1, 0) {
  if (n >= 1) mu_[1] = 1;
  std::vector<std::uint64_t> primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu_[i] = -1;
    }
    for (std::uint64_t p : primes) {
      if (i * p > n) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu_[i * p] = 0;
        break;
      }
      mu_[i * p] = static_cast<signed char>(-mu_[i]);
    }
  }
}

BigInt sieve_count(const std::vector<std::int64_t>& floors, const MobiusTable& table, unsigned shards) {
  if (floors.empty()) return 0;
  const std::int64_t m = *std::min_element(floors.begin(), floors.end());
  if (m < 1) return 0;
  if (static_cast<std::uint64_t>(m) > table.size()) fail(ErrorCode::BadParameters, "Moebius table too small");
  long double magnitude = 1;
  for (auto n : floors) magnitude *= static_cast<long double>(n);
  const bool narrow = magnitude < 1e36L;

  auto partial = run_shards<BigInt>(shards, [&](unsigned s) {
    const auto [lo, hi] = shard_range(1, m + 1, s, shards);
    if (narrow) {
      __int128 acc = 0;
      for (std::int64_t j = lo; j < hi; ++j) {
        const int mu = table[static_cast<std::uint64_t>(j)];
        if (mu == 0) continue;
        __int128 prod = 1;
        for (auto n : floors) prod *= n / j;
        acc += mu > 0 ? prod : -prod;
      }
      return from_int128(acc);
    }
    BigInt acc = 0, prod;
    for (std::int64_t j = lo; j < hi; ++j) {
      const int mu = table[static_cast<std::uint64_t>(j)];
      if (mu == 0) continue;
      prod = 1;
      for (auto n : floors) prod *= static_cast<long>(n / j);
      if (mu > 0)
        acc += prod;
      else
        acc -= prod;
    }
    return acc;
  });
  BigInt total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

BigInt sieve_count(const Box& box, unsigned shards) {
  const auto floors = box.floors();
  const auto m = *std::min_element(floors.begin(), floors.end());
  return sieve_count(floors, MobiusTable(static_cast<std::uint64_t>(m)), shards);
}

BigInt brute_count(const Box& box, std::uint64_t cap, unsigned shards) {
  const auto n = box.floors();
  const std::size_t k = n.size();
  unsigned __int128 total = 1;
  for (auto v : n) {
    total *= static_cast<std::uint64_t>(v);
    if (total > cap)
      fail(ErrorCode::CapExceeded, "brute force box exceeds cap of " + std::to_string(cap) + " tuples");
  }
  auto partial = run_shards<std::uint64_t>(shards, [&](unsigned s) {
    const auto [lo, hi] = shard_range(1, n[0] + 1, s, shards);
    std::uint64_t count = 0;
    std::vector<std::int64_t> t(k, 1), g(k, 0);
    for (std::int64_t first = lo; first < hi; ++first) {
      t[0] = first;
      g[0] = first;
      // odometer over coordinates 1..k-1, g[i] = gcd(t[0..i])
      std::size_t level = 1;
      t[1] = 0;
      while (level >= 1) {
        if (++t[level] > n[level]) {
          --level;
          continue;
        }
        g[level] = std::gcd(g[level - 1], t[level]);
        if (level + 1 == k) {
          if (g[level] == 1) ++count;
        } else {
          ++level;
          t[level] = 0;
        }
      }
    }
    return count;
  });
  std::uint64_t sum = 0;
  for (auto p : partial) sum += p;
  return BigInt(static_cast<unsigned long>(sum));
}

BigInt brute_count(const Box& box) { return brute_count(box, default_cap()); }

double eccentricity(const Box& box) {
  const auto& s = box.sides();
  const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  return (*hi / *lo).to_double();
}

double error_term_budget(const Box& box) {
  double log_prod = 0;
  for (double v : box.as_doubles()) log_prod += std::log(v);
  const double k = static_cast<double>(box.k());
  const double log_gamma = log_prod / k;
  if (box.k() == 2) return std::exp(log_gamma) * log_gamma;
  return std::exp((k - 1) * log_gamma);
}

double zeta(int k, double tol) {
  if (k < 2) fail(ErrorCode::BadParameters, "zeta needs k >= 2");
  if (!(tol > 0)) fail(ErrorCode::BadParameters, "zeta needs tol > 0");
  tol = std::max(tol, 1e-16);
  // The tail after N lies in [(N+1)^(1-k), N^(1-k)]/(k-1); its half-width is below N^-k / 2.
  const double kk = static_cast<double>(k);
  const auto N = static_cast<std::uint64_t>(std::ceil(std::pow(2.0 * tol, -1.0 / kk))) + 1;
  long double sum = 0;
  for (std::uint64_t n = N; n >= 1; --n) {
    long double p = 1;
    for (int i = 0; i < k; ++i) p *= static_cast<long double>(n);
    sum += 1 / p;
  }
  const long double lo = std::pow(static_cast<long double>(N + 1), 1 - static_cast<long double>(k)) / (k - 1);
  const long double hi = std::pow(static_cast<long double>(N), 1 - static_cast<long double>(k)) / (k - 1);
  return static_cast<double>(sum + (lo + hi) / 2);
}

double product_perturbation_bound(const std::vector<double>& x) {
  double prod = 1, lo = x.at(0);
  for (double v : x) {
    prod *= v;
    lo = std::min(lo, v);
  }
  return (std::ldexp(1.0, static_cast<int>(x.size())) - 1) * prod / lo;
}

CountReport lehmer_report(const Box& box, unsigned shards) {
  CountReport r;
  r.sides = box.sides();
  r.count = sieve_count(box, shards);
  double prod = 1;
  for (double v : box.as_doubles()) prod *= v;
  r.main_term = prod / zeta(static_cast<int>(box.k()), 1e-12);
  r.error = r.count.get_d() - r.main_term;
  r.f_k = error_term_budget(box);
  r.eccentricity = eccentricity(box);
  return r;
}

}  // namespace trisect
