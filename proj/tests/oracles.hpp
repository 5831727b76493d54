#pragma once

// Brute-force references that share no code with the library: plain loops,
// std::gcd and machine integers only.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

inline int mobius(i64 n) {
  int mu = 1;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

/// Coprime k-tuples in [1, n_1] x ... x [1, n_k] by odometer.
inline i64 coprime_tuples(const std::vector<i64>& n) {
  std::vector<i64> x(n.size(), 1);
  i64 count = 0;
  while (true) {
    i64 g = 0;
    for (i64 v : x) g = std::gcd(g, v);
    if (g == 1) ++count;
    std::size_t i = 0;
    while (i < x.size() && x[i] == n[i]) x[i++] = 1;
    if (i == x.size()) return count;
    ++x[i];
  }
}

struct Elem {
  i64 a1, a2, b;
  auto operator<=>(const Elem&) const = default;
};

inline i64 height(const Elem& e) { return std::max({std::abs(e.a1), std::abs(e.a2), e.b}); }

/// Every canonical (a1, a2, b) with height <= R; a2 = 0 when d = 0.
inline std::vector<Elem> ball(i64 d, i64 R) {
  std::vector<Elem> out;
  const i64 a2max = d == 0 ? 0 : R;
  for (i64 b = 1; b <= R; ++b)
    for (i64 a1 = -R; a1 <= R; ++a1)
      for (i64 a2 = -a2max; a2 <= a2max; ++a2)
        if (std::gcd(std::gcd(a1, a2), b) == 1) out.push_back({a1, a2, b});
  return out;
}

/// x in [-2, 2]: 2b - a1 >= a2 sqrt d and a2 sqrt d >= -2b - a1, decided by squaring.
inline bool in_unit_band(const Elem& e, i64 d) {
  auto ge = [d](i64 lhs, i64 y) {  // lhs >= y sqrt(d)
    if (d == 0 || y == 0) return lhs >= 0;
    if (y > 0) return lhs >= 0 && static_cast<__int128>(lhs) * lhs >= static_cast<__int128>(y) * y * d;
    return lhs >= 0 || static_cast<__int128>(lhs) * lhs <= static_cast<__int128>(y) * y * d;
  };
  return ge(2 * e.b - e.a1, e.a2) && ge(e.a1 + 2 * e.b, -e.a2);
}

/// Reduced image of x^3 - 3x.
inline Elem image(const Elem& e, i64 d) {
  const __int128 a1 = e.a1, a2 = e.a2, b = e.b;
  __int128 A1 = a1 * a1 * a1 + 3 * d * a1 * a2 * a2 - 3 * a1 * b * b;
  __int128 A2 = 3 * a1 * a1 * a2 + d * a2 * a2 * a2 - 3 * a2 * b * b;
  __int128 B = b * b * b;
  i64 g = std::gcd(std::gcd(static_cast<i64>(A1 < 0 ? -A1 : A1), static_cast<i64>(A2 < 0 ? -A2 : A2)),
                   static_cast<i64>(B));
  return {static_cast<i64>(A1 / g), static_cast<i64>(A2 / g), static_cast<i64>(B / g)};
}

/// Rational roots of x^3 - 3x - p/q: candidates r/s with r | p and s | q.
inline bool cubic_has_rational_root(i64 p, i64 q) {
  if (p == 0) return true;
  for (i64 s = 1; s <= q; ++s) {
    if (q % s) continue;
    for (i64 r = 1; r <= std::abs(p); ++r) {
      if (std::abs(p) % r) continue;
      for (i64 sr : {r, -r}) {
        // q sr^3 - 3 q sr s^2 - p s^3 = 0
        const __int128 v = static_cast<__int128>(q) * sr * sr * sr - static_cast<__int128>(3) * q * sr * s * s -
                           static_cast<__int128>(p) * s * s * s;
        if (v == 0) return true;
      }
    }
  }
  return false;
}

/// #{f(beta) : beta in ball(d, S), f(beta) in [-2, 2], height(f(beta)) <= R}.
inline i64 image_count(i64 d, i64 S, i64 R) {
  std::set<Elem> seen;
  for (const Elem& e : ball(d, S)) {
    if (!in_unit_band(e, d)) continue;
    const Elem im = image(e, d);
    if (height(im) <= R) seen.insert(im);
  }
  return static_cast<i64>(seen.size());
}

inline i64 band_count(i64 d, i64 R) {
  i64 n = 0;
  for (const Elem& e : ball(d, R)) n += in_unit_band(e, d);
  return n;
}

/// Smallest S with S^3 >= n.
inline i64 icbrt_up(i64 n) {
  i64 s = 0;
  while (s * s * s < n) ++s;
  return s;
}

}  // namespace oracle
