#include "trisect/polyalg.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include "trisect/error.hpp"
#include "trisect/numtheory.hpp"

namespace trisect {

RatPoly to_rat(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& v : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v / g);
  return IntPoly(std::move(c));
}

IntPoly primitive_part(const RatPoly& p) {
  BigInt l = 1;
  for (const auto& v : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
  std::vector<BigInt> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v.num() * (l / v.den()));
  return primitive_part(IntPoly(std::move(c)));
}

std::pair<RatPoly, RatPoly> div_rem(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational t = r[k + db] / bc[db];
    q[k] = t;
    if (t.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j)
      if (!bc[j].is_zero()) r[k + j] -= t * bc[j];
  }
  r.resize(db);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return a;
  if (a.degree() < b.degree()) fail(ErrorCode::BadParameters, "inexact polynomial division");
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), bc[db].get_mpz_t()))
      fail(ErrorCode::BadParameters, "inexact polynomial division");
    const BigInt t = top / bc[db];
    q[k] = t;
    for (std::size_t j = 0; j <= db; ++j)
      if (bc[j] != 0) r[k + j] -= t * bc[j];
  }
  for (std::size_t j = 0; j < db; ++j)
    if (r[j] != 0) fail(ErrorCode::BadParameters, "inexact polynomial division");
  return IntPoly(std::move(q));
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = div_rem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  const Rational lead = x.leading();
  std::vector<Rational> c;
  for (const auto& v : x.coeffs()) c.push_back(v / lead);
  return RatPoly(std::move(c));
}

bool is_squarefree(const IntPoly& p) {
  if (p.degree() <= 0) return true;
  const RatPoly r = to_rat(p);
  return gcd(r, r.derivative()).degree() == 0;
}

// ---------------------------------------------------------------- text forms

namespace {

template <class C>
std::string coeff_text(const C& v) {
  if constexpr (std::is_same_v<C, BigInt>)
    return v.get_str();
  else
    return v.to_string();
}

template <class C>
std::string poly_text(const Poly<C>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const C& v = p.coeffs()[i];
    if (v == 0) continue;
    const bool neg = v < 0;
    std::string mag = coeff_text(C(neg ? C(-v) : v));
    if (first)
      out += (neg ? "-" : "") + mag;
    else
      out += (neg ? " - " : " + ") + mag;
    if (i >= 1) out += "*x";
    if (i >= 2) out += "^" + std::to_string(i);
    first = false;
  }
  return out;
}

template <class C>
std::vector<std::string> coeff_strings(const Poly<C>& p) {
  std::vector<std::string> out;
  for (const auto& v : p.coeffs()) out.push_back(coeff_text(v));
  return out;
}

}  // namespace

std::string to_string(const IntPoly& p) { return poly_text(p); }
std::string to_string(const RatPoly& p) { return poly_text(p); }
std::vector<std::string> to_coeff_strings(const IntPoly& p) { return coeff_strings(p); }
std::vector<std::string> to_coeff_strings(const RatPoly& p) { return coeff_strings(p); }

IntPoly int_poly_from_strings(const std::vector<std::string>& coeffs) {
  std::vector<BigInt> c;
  for (const auto& s : coeffs) {
    const Rational r = Rational::parse(s);
    if (!r.is_integer()) fail(ErrorCode::Parse, "non-integer coefficient '" + s + "'");
    c.push_back(r.num());
  }
  return IntPoly(std::move(c));
}

RatPoly parse_poly(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) fail(ErrorCode::Parse, "empty polynomial");
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '^' && s[i - 1] != '*' && s[i - 1] != '/') {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  }
  terms.push_back(s.substr(start));
  static const std::regex term_re(R"(^([+-]?)(\d+(?:/\d+)?)?(\*?x(?:\^(\d+))?)?$)");
  std::vector<Rational> c;
  for (const auto& t : terms) {
    std::smatch m;
    if (!std::regex_match(t, m, term_re) || (!m[2].matched && !m[3].matched))
      fail(ErrorCode::Parse, "bad polynomial term '" + t + "'");
    Rational v = m[2].matched ? Rational::parse(m[2].str()) : Rational(1);
    if (m[1].str() == "-") v = -v;
    std::size_t deg = 0;
    if (m[3].matched) deg = m[4].matched ? std::stoul(m[4].str()) : 1;
    if (c.size() <= deg) c.resize(deg + 1);
    c[deg] += v;
  }
  return RatPoly(std::move(c));
}

Interval eval_enclosure(const IntPoly& p, const Interval& x) {
  const mpfr_prec_t prec = x.prec();
  return p.eval_with(x, [prec](const BigInt& c) { return Interval::exact(c, prec); });
}

// ---------------------------------------------------------------- irreducibility tools

bool eisenstein_check(const IntPoly& p, const BigInt& prime) {
  if (!is_prime(prime)) fail(ErrorCode::NotPrime, prime.get_str() + " is not prime");
  if (p.is_zero()) fail(ErrorCode::BadParameters, "Eisenstein check of the zero polynomial");
  const auto& c = p.coeffs();
  if (mpz_divisible_p(c.back().get_mpz_t(), prime.get_mpz_t())) return false;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (!mpz_divisible_p(c[i].get_mpz_t(), prime.get_mpz_t())) return false;
  const BigInt p2 = prime * prime;
  return !mpz_divisible_p(c[0].get_mpz_t(), p2.get_mpz_t());
}

namespace {

// Positive divisors of |n| (n != 0). Trial division to 10^6; a cofactor left
// over is either prime or has two factors above 10^6.
std::vector<BigInt> big_divisors(const BigInt& n) {
  BigInt rest = abs(n);
  std::vector<std::pair<BigInt, int>> fac;
  for (unsigned long p = 2; p <= 1000000 && BigInt(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    fac.emplace_back(BigInt(p), e);
  }
  if (rest > 1) {
    if (rest > BigInt(1000000) * 1000000 && !is_prime(rest))
      fail(ErrorCode::CapExceeded, "coefficient too large to factor: " + n.get_str());
    fac.emplace_back(rest, 1);
  }
  std::vector<BigInt> out{1};
  for (const auto& [p, e] : fac) {
    const std::size_t base = out.size();
    BigInt pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const RatPoly& p) {
  if (p.is_zero()) fail(ErrorCode::BadParameters, "rational roots of the zero polynomial");
  IntPoly ip = primitive_part(p);
  std::set<Rational> roots;
  std::size_t low = 0;
  while (ip.coeffs()[low] == 0) ++low;
  if (low > 0) {
    roots.insert(Rational(0));
    std::vector<BigInt> c(ip.coeffs().begin() + static_cast<long>(low), ip.coeffs().end());
    ip = IntPoly(std::move(c));
  }
  if (ip.degree() >= 1) {
    const RatPoly rp = to_rat(ip);
    const auto nums = big_divisors(ip.coeffs().front());
    const auto dens = big_divisors(ip.leading());
    for (const auto& r : nums) {
      for (const auto& s : dens) {
        if (gcd(r, s) != 1) continue;
        for (int sg : {1, -1}) {
          const Rational cand(BigInt(sg * r), s);
          if (rp.eval(cand).is_zero()) roots.insert(cand);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

IntPoly bareiss_determinant(std::vector<std::vector<IntPoly>> mat) {
  const std::size_t n = mat.size();
  if (n == 0) return IntPoly::constant(1);
  int sign = 1;
  IntPoly prev = IntPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (mat[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && mat[piv][k].is_zero()) ++piv;
      if (piv == n) return IntPoly();
      std::swap(mat[k], mat[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        mat[i][j] = exact_div(mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j], prev);
      mat[i][k] = IntPoly();
    }
    prev = mat[k][k];
  }
  return sign < 0 ? -mat[n - 1][n - 1] : mat[n - 1][n - 1];
}

IntPoly resultant_minpoly(std::uint64_t m, const Rational& q, const RatPoly& g) {
  if (m < 1) fail(ErrorCode::BadParameters, "resultant_minpoly needs m >= 1");
  if (g.is_zero()) fail(ErrorCode::BadParameters, "resultant_minpoly needs nonzero g");
  // A(y) = den(q) y^m - num(q); B(y) = L g(y) - L x with L clearing g's denominators.
  BigInt L = 1;
  for (const auto& v : g.coeffs()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), v.den().get_mpz_t());
  const std::size_t n = static_cast<std::size_t>(g.degree());
  std::vector<IntPoly> a_desc(m + 1), b_desc(n + 1);
  a_desc[0] = IntPoly::constant(q.den());
  a_desc[m] = IntPoly::constant(-q.num());
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational& gi = g.coeff(n - i);
    b_desc[i] = IntPoly::constant(gi.num() * (L / gi.den()));
  }
  b_desc[n] -= IntPoly::monomial(L, 1);

  const std::size_t size = m + n;
  std::vector<std::vector<IntPoly>> syl(size, std::vector<IntPoly>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) syl[r][r + i] = a_desc[i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) syl[n + r][r + i] = b_desc[i];
  return primitive_part(bareiss_determinant(std::move(syl)));
}

// ---------------------------------------------------------------- cyclotomic family

IntPoly cyclotomic(std::uint64_t m) {
  if (m < 1) fail(ErrorCode::BadParameters, "cyclotomic index must be >= 1");
  // Phi_m = prod_{e | m} (x^e - 1)^{mu(m/e)}
  IntPoly num = IntPoly::constant(1), den = IntPoly::constant(1);
  for (std::uint64_t e : divisors(m)) {
    const int mu = mobius(m / e);
    if (mu == 0) continue;
    IntPoly f = IntPoly::monomial(1, e) - IntPoly::constant(1);
    if (mu > 0)
      num = num * f;
    else
      den = den * f;
  }
  IntPoly r = exact_div(num, den);
  return r.leading() < 0 ? -r : r;
}

IntPoly chebyshev_like(std::uint64_t n) {
  IntPoly prev = IntPoly::constant(2), cur = IntPoly::x();
  if (n == 0) return prev;
  for (std::uint64_t k = 1; k < n; ++k) {
    IntPoly next = cur.shift(1) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly cos_minimal_poly(std::uint64_t m) {
  if (m < 1) fail(ErrorCode::BadParameters, "index must be >= 1");
  if (m == 1) return IntPoly{BigInt(-2), BigInt(1)};
  if (m == 2) return IntPoly{BigInt(2), BigInt(1)};
  // Phi_m is palindromic of degree 2h: z^{-h} Phi_m(z) = c_h + sum_k c_{h+k} (z^k + z^{-k}),
  // and z^k + z^{-k} = C_k(z + 1/z).
  const IntPoly phi = cyclotomic(m);
  const std::size_t h = static_cast<std::size_t>(phi.degree()) / 2;
  IntPoly psi = IntPoly::constant(phi.coeff(h));
  IntPoly prev = IntPoly::constant(2), cur = IntPoly::x();
  for (std::size_t k = 1; k <= h; ++k) {
    if (phi.coeff(h + k) != phi.coeff(h - k)) fail(ErrorCode::BadParameters, "cyclotomic polynomial not palindromic");
    psi += phi.coeff(h + k) * cur;
    IntPoly next = cur.shift(1) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return psi;
}

}  // namespace trisect
