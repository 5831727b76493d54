#pragma once

// Counting relatively prime k-tuples in boxes [1, n_1] x ... x [1, n_k] with
// real (rational) sides, by the Moebius sum and by direct enumeration.

#include <cstdint>
#include <string>
#include <vector>

#include "trisect/exact_arith.hpp"
#include "trisect/numtheory.hpp"

namespace trisect {

class Box {
 public:
  /// k >= 2 sides, each >= 1; BadParameters otherwise.
  explicit Box(std::vector<Rational> sides);
  static Box integer(const std::vector<std::int64_t>& sides);
  /// Comma separated sides, e.g. "5.9,3.2" or "4,7/2".
  static Box parse(std::string_view text);

  std::size_t k() const { return sides_.size(); }
  const std::vector<Rational>& sides() const { return sides_; }
  /// floor of each side; throws CapExceeded beyond int64.
  std::vector<std::int64_t> floors() const;
  std::vector<double> as_doubles() const;

 private:
  std::vector<Rational> sides_;
};

/// Moebius values 1..n by a linear sieve.
class MobiusTable {
 public:
  explicit MobiusTable(std::uint64_t n);
  int operator[](std::uint64_t j) const { return mu_[j]; }
  std::uint64_t size() const { return mu_.size() - 1; }

 private:
  std::vector<signed char> mu_;
};

/// Exact count from integer floors; table must cover min(floors).
BigInt sieve_count(const std::vector<std::int64_t>& floors, const MobiusTable& table, unsigned shards = 1);
BigInt sieve_count(const Box& box, unsigned shards = 1);

/// Direct enumeration; CapExceeded if the box holds more than cap tuples.
BigInt brute_count(const Box& box, std::uint64_t cap, unsigned shards = 1);
BigInt brute_count(const Box& box);

double eccentricity(const Box& box);
/// gamma ln gamma for k = 2, gamma^(k-1) otherwise, gamma the geometric mean.
double error_term_budget(const Box& box);
double zeta(int k, double tol = 1e-12);
/// (2^k - 1) prod(x) / min(x): bound on |prod x - prod y| when |x_i - y_i| <= 1.
double product_perturbation_bound(const std::vector<double>& x);

struct CountReport {
  std::vector<Rational> sides;
  BigInt count;
  double main_term = 0;
  double error = 0;
  double f_k = 0;
  double eccentricity = 0;
};

CountReport lehmer_report(const Box& box, unsigned shards = 1);

}  // namespace trisect
