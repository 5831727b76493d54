#include "trisect/numtheory.hpp"

#include <algorithm>
#include <limits>

#include "trisect/error.hpp"

namespace trisect {

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  if (n < 2) return out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t p = 3; p * p <= n; p += 2)
    if (n % p == 0) return false;
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p() && n.get_ui() < (1ULL << 40)) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

int mobius(std::uint64_t n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (auto [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

bool is_power_of_two(std::uint64_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

std::vector<std::pair<std::int64_t, int>> signed_squarefree_divisors(std::uint64_t n) {
  std::vector<std::pair<std::int64_t, int>> out{{1, 1}};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    for (std::size_t j = 0; j < base; ++j)
      out.emplace_back(out[j].first * static_cast<std::int64_t>(p), -out[j].second);
  }
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) noexcept { return -floor_div(-a, b); }

std::int64_t count_coprime_in_range(std::int64_t lo, std::int64_t hi,
                                    const std::vector<std::pair<std::int64_t, int>>& sqf_divs) {
  if (lo > hi) return 0;
  std::int64_t total = 0;
  for (auto [e, mu] : sqf_divs) {
    // multiples of e in [lo, hi]
    const std::int64_t multiples = floor_div(hi, e) - ceil_div(lo, e) + 1;
    total += mu * multiples;
  }
  return total;
}

Bezout ext_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = abs(a), r = abs(b);
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (a < 0) old_s = -old_s;
  if (b < 0) old_t = -old_t;
  return {old_r, old_s, old_t};
}

BigInt ceil_cbrt(const BigInt& n) {
  if (n < 0) fail(ErrorCode::BadParameters, "ceil_cbrt of a negative number");
  BigInt root;
  mpz_root(root.get_mpz_t(), n.get_mpz_t(), 3);  // floor
  if (root * root * root < n) ++root;
  return root;
}

bool fits_int64(const BigInt& v) noexcept { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

std::int64_t to_int64(const BigInt& v) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (!fits_int64(v)) fail(ErrorCode::CapExceeded, "integer does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

BigInt from_int128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  BigInt out = (hi << 64) + lo;
  return neg ? BigInt(-out) : out;
}

}  // namespace trisect
