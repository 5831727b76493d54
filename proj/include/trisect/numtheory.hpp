#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace trisect {

using BigInt = mpz_class;

// Elementary number theory on machine integers. Trial division throughout;
// the arguments here are parameters (radicands, cyclotomic indices, box
// sides), never data volume.

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
bool is_prime(std::uint64_t n);
bool is_prime(const BigInt& n);
bool is_squarefree(std::uint64_t n);
/// Moebius function, n >= 1.
int mobius(std::uint64_t n);
bool is_power_of_two(std::uint64_t n) noexcept;

/// Squarefree divisors e of n paired with mu(e); used for inclusion-exclusion
/// counts of integers coprime to n.
std::vector<std::pair<std::int64_t, int>> signed_squarefree_divisors(std::uint64_t n);

/// Number of integers t in [lo, hi] with gcd(t, n) == 1 (gcd(0, n) = n).
std::int64_t count_coprime_in_range(std::int64_t lo, std::int64_t hi,
                                    const std::vector<std::pair<std::int64_t, int>>& sqf_divs);

std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept;
std::int64_t ceil_div(std::int64_t a, std::int64_t b) noexcept;

struct Bezout {
  BigInt g;
  BigInt x;
  BigInt y;
};

/// Extended Euclid: a*x + b*y = g = gcd(a, b) >= 0.
Bezout ext_gcd(const BigInt& a, const BigInt& b);

/// Smallest integer s >= 0 with s^3 >= n (n >= 0).
BigInt ceil_cbrt(const BigInt& n);

std::int64_t to_int64(const BigInt& v);
bool fits_int64(const BigInt& v) noexcept;
BigInt from_int128(__int128 v);

}  // namespace trisect
