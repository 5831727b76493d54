#include "trisect/exact_arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <regex>

#include "trisect/error.hpp"

namespace trisect {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out.push_back(c);
  return out;
}

BigInt parse_int(const std::string& s) {
  BigInt v;
  const std::string body = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
  if (body.empty() || v.set_str(body, 10) != 0) fail(ErrorCode::Parse, "bad integer '" + s + "'");
  return v;
}

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorCode::ZeroDenominator, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  static const std::regex re(R"(^([+-]?\d+)(?:/([+-]?\d+))?$)");
  static const std::regex dec(R"(^([+-]?)(\d*)\.(\d+)$)");
  const std::string s = strip_spaces(text);
  std::smatch m;
  if (std::regex_match(s, m, dec)) {
    const std::string frac = m[3].str();
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt num = parse_int(m[2].str().empty() ? "0" : m[2].str()) * scale + parse_int(frac);
    if (m[1].str() == "-") num = -num;
    return Rational(num, scale);
  }
  if (!std::regex_match(s, m, re)) fail(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");
  const BigInt num = parse_int(m[1].str());
  const BigInt den = m[2].matched ? parse_int(m[2].str()) : BigInt(1);
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

BigInt floor(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

BigInt ceil(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

// ---------------------------------------------------------------- QuadElem

void validate_radicand(std::int64_t d) {
  if (d < 2 || !is_squarefree(static_cast<std::uint64_t>(d)))
    fail(ErrorCode::NonSquarefreeRadicand, "radicand must be squarefree and >= 2, got " + std::to_string(d));
}

QuadElem canonicalize(const BigInt& a1, const BigInt& a2, const BigInt& b, std::int64_t d) {
  if (b == 0) fail(ErrorCode::ZeroDenominator, "quadratic element with zero denominator");
  validate_radicand(d);
  BigInt g = gcd3(a1, a2, b);
  if (b < 0) g = -g;
  return QuadElem(a1 / g, a2 / g, b / g, d);
}

QuadElem::QuadElem(const Rational& r, std::int64_t d) : a1_(r.num()), a2_(0), b_(r.den()), d_(d) {
  validate_radicand(d);
}

Rational QuadElem::rational_value() const {
  if (!is_rational()) fail(ErrorCode::BadParameters, "element " + to_string() + " is not rational");
  return Rational(a1_, b_);
}

QuadElem QuadElem::conjugate() const { return QuadElem(a1_, -a2_, b_, d_); }

QuadElem QuadElem::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  // 1/x = b (a1 - a2 sqrt d) / (a1^2 - d a2^2)
  const BigInt den = a1_ * a1_ - BigInt(static_cast<long>(d_)) * a2_ * a2_;
  return canonicalize(b_ * a1_, -(b_ * a2_), den, d_);
}

Rational QuadElem::norm() const {
  return Rational(BigInt(a1_ * a1_ - BigInt(static_cast<long>(d_)) * a2_ * a2_), BigInt(b_ * b_));
}

Rational QuadElem::trace() const { return Rational(BigInt(2 * a1_), b_); }

int QuadElem::sign() const { return sign_of_surd(a1_, a2_, d_); }

double QuadElem::to_double() const {
  return (a1_.get_d() + a2_.get_d() * std::sqrt(static_cast<double>(d_))) / b_.get_d();
}

std::string QuadElem::to_string() const {
  std::string out = "(" + a1_.get_str();
  out += (a2_ < 0) ? "-" : "+";
  out += BigInt(abs(a2_)).get_str() + "*sqrt(" + std::to_string(d_) + "))/" + b_.get_str();
  return out;
}

QuadElem QuadElem::parse(std::string_view text) {
  static const std::regex full(R"(^\(?([+-]?\d+)([+-])(\d*)\*?sqrt\((\d+)\)\)?(?:/([+-]?\d+))?$)");
  static const std::regex surd(R"(^\(?([+-]?)(\d*)\*?sqrt\((\d+)\)\)?(?:/([+-]?\d+))?$)");
  const std::string s = strip_spaces(text);
  std::smatch m;
  BigInt a1 = 0, a2 = 1, b = 1;
  std::int64_t d = 0;
  if (std::regex_match(s, m, full)) {
    a1 = parse_int(m[1].str());
    a2 = m[3].length() > 0 ? parse_int(m[3].str()) : BigInt(1);
    if (m[2].str() == "-") a2 = -a2;
    d = to_int64(parse_int(m[4].str()));
    if (m[5].matched) b = parse_int(m[5].str());
  } else if (std::regex_match(s, m, surd)) {
    a2 = m[2].length() > 0 ? parse_int(m[2].str()) : BigInt(1);
    if (m[1].str() == "-") a2 = -a2;
    d = to_int64(parse_int(m[3].str()));
    if (m[4].matched) b = parse_int(m[4].str());
  } else {
    fail(ErrorCode::Parse, "not a quadratic element: '" + std::string(text) + "'");
  }
  return canonicalize(a1, a2, b, d);
}

namespace {
void require_same_field(const QuadElem& x, const QuadElem& y) {
  if (x.d() != y.d())
    fail(ErrorCode::RadicandMismatch,
         "radicands differ: " + std::to_string(x.d()) + " vs " + std::to_string(y.d()));
}
}  // namespace

QuadElem QuadElem::operator-() const { return QuadElem(-a1_, -a2_, b_, d_); }

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
  require_same_field(x, y);
  return canonicalize(x.a1_ * y.b_ + y.a1_ * x.b_, x.a2_ * y.b_ + y.a2_ * x.b_, x.b_ * y.b_, x.d_);
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) { return x + (-y); }

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  require_same_field(x, y);
  const BigInt d = static_cast<long>(x.d_);
  return canonicalize(x.a1_ * y.a1_ + d * x.a2_ * y.a2_, x.a1_ * y.a2_ + x.a2_ * y.a1_, x.b_ * y.b_, x.d_);
}

QuadElem operator/(const QuadElem& x, const QuadElem& y) {
  require_same_field(x, y);
  return x * y.inverse();
}

int sign_of_surd(const BigInt& x, const BigInt& y, std::int64_t d) {
  const int sx = sgn(x), sy = sgn(y);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // opposite signs: whichever of x^2 and d*y^2 is larger wins
  const int c = cmp(BigInt(x * x), BigInt(BigInt(static_cast<long>(d)) * y * y));
  if (c == 0) return 0;
  return c > 0 ? sx : sy;
}

int sign_of_surd(__int128 x, __int128 y, std::int64_t d) {
  const int sx = (x > 0) - (x < 0), sy = (y > 0) - (y < 0);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  constexpr __int128 kLimit = static_cast<__int128>(1) << 60;
  if (x > -kLimit && x < kLimit && y > -kLimit / 64 && y < kLimit / 64 && d < 4096) {
    const __int128 xx = x * x, dyy = static_cast<__int128>(d) * y * y;
    if (xx == dyy) return 0;
    return xx > dyy ? sx : sy;
  }
  return sign_of_surd(from_int128(x), from_int128(y), d);
}

// ---------------------------------------------------------------- heights & comparisons

BigInt height(const Rational& x) { return std::max(BigInt(abs(x.num())), x.den()); }

BigInt height(const QuadElem& x) {
  return std::max({BigInt(abs(x.a1())), BigInt(abs(x.a2())), x.b()});
}

BigInt height(const FieldElement& x) {
  return std::visit([](const auto& v) { return height(v); }, x);
}

int compare(const QuadElem& x, const Rational& t) {
  // x - t = (a1*den - num*b + a2*den*sqrt d) / (b*den)
  return sign_of_surd(BigInt(x.a1() * t.den() - t.num() * x.b()), BigInt(x.a2() * t.den()), x.d());
}

bool in_interval(const Rational& x, const Rational& lo, const Rational& hi) { return lo <= x && x <= hi; }

bool in_interval(const QuadElem& x, const Rational& lo, const Rational& hi) {
  return compare(x, lo) >= 0 && compare(x, hi) <= 0;
}

bool in_interval(const FieldElement& x, const Rational& lo, const Rational& hi) {
  return std::visit([&](const auto& v) { return in_interval(v, lo, hi); }, x);
}

bool is_rational(const FieldElement& x) {
  if (const auto* q = std::get_if<QuadElem>(&x)) return q->is_rational();
  return true;
}

std::string to_string(const FieldElement& x) {
  return std::visit([](const auto& v) { return v.to_string(); }, x);
}

// ---------------------------------------------------------------- FieldDescriptor

FieldDescriptor FieldDescriptor::rationals() {
  FieldDescriptor f;
  f.kind_ = Kind::Rational;
  f.d_ = 0;
  f.basis_ = {Rational(1)};
  return f;
}

FieldDescriptor FieldDescriptor::quadratic(std::int64_t d) {
  validate_radicand(d);
  FieldDescriptor f;
  f.kind_ = Kind::Quadratic;
  f.d_ = d;
  f.basis_ = {QuadElem(Rational(1), d), canonicalize(0, 1, 1, d)};
  return f;
}

FieldDescriptor FieldDescriptor::quadratic(std::int64_t d, const QuadElem& v1, const QuadElem& v2) {
  FieldDescriptor f = quadratic(d);
  if (v1.d() != d || v2.d() != d) fail(ErrorCode::RadicandMismatch, "basis element outside Q(sqrt(d))");
  BasisChange check(v1, v2);  // throws DegenerateBasis when dependent
  if (compare(v1, Rational(1)) < 0 || compare(v2, Rational(1)) < 0)
    fail(ErrorCode::DegenerateBasis, "basis elements must be >= 1");
  f.basis_ = {v1, v2};
  return f;
}

bool FieldDescriptor::has_standard_basis() const {
  if (is_rational()) return true;
  return std::get<QuadElem>(basis_[0]) == QuadElem(Rational(1), d_) &&
         std::get<QuadElem>(basis_[1]) == canonicalize(0, 1, 1, d_);
}

double FieldDescriptor::basis_norm() const {
  double p = 1.0;
  for (const auto& v : basis_)
    p *= std::visit([](const auto& e) { return e.to_double(); }, v);
  return p;
}

std::string FieldDescriptor::name() const {
  return is_rational() ? "Q" : "Q(sqrt(" + std::to_string(d_) + "))";
}

FieldElement FieldDescriptor::embed(const Rational& r) const {
  if (is_rational()) return r;
  return QuadElem(r, d_);
}

FieldElement FieldDescriptor::parse_element(std::string_view text) const {
  if (std::string_view::npos == text.find("sqrt")) return embed(Rational::parse(text));
  if (is_rational()) fail(ErrorCode::RadicandMismatch, "quadratic element given for the field Q");
  QuadElem q = QuadElem::parse(text);
  if (q.d() != d_) fail(ErrorCode::RadicandMismatch, "element " + q.to_string() + " is not in " + name());
  return q;
}

bool FieldDescriptor::contains(const FieldElement& x) const {
  if (const auto* q = std::get_if<QuadElem>(&x)) return !is_rational() && q->d() == d_;
  return is_rational();
}

bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
  return a.kind_ == b.kind_ && a.d_ == b.d_ && a.basis_ == b.basis_;
}

// ---------------------------------------------------------------- change of basis

BasisChange::BasisChange(const QuadElem& w1, const QuadElem& w2) : d_(w1.d()) {
  if (w1.d() != w2.d()) fail(ErrorCode::RadicandMismatch, "basis elements from different fields");
  // Columns of M' are (p_j * r_other, q_j * r_other) so that M = M'/(r1 r2).
  const BigInt p1 = w1.a1() * w2.b(), q1 = w1.a2() * w2.b();
  const BigInt p2 = w2.a1() * w1.b(), q2 = w2.a2() * w1.b();
  det_ = p1 * q2 - p2 * q1;
  if (det_ == 0) fail(ErrorCode::DegenerateBasis, "basis elements are Q-linearly dependent");
  // u = r1 r2 adj(M') (a1, a2) / (det' b)
  const BigInt r = w1.b() * w2.b();
  m11_ = r * q2;
  m12_ = -r * p2;
  m21_ = -r * q1;
  m22_ = r * p1;
}

BigInt BasisChange::height(const BigInt& a1, const BigInt& a2, const BigInt& b) const {
  BigInt n1 = m11_ * a1 + m12_ * a2;
  BigInt n2 = m21_ * a1 + m22_ * a2;
  BigInt den = det_ * b;
  BigInt g = gcd3(n1, n2, den);
  return std::max({BigInt(abs(n1) / g), BigInt(abs(n2) / g), BigInt(abs(den) / g)});
}

BigInt height_in_basis(const QuadElem& x, const QuadElem& w1, const QuadElem& w2) {
  if (x.d() != w1.d()) fail(ErrorCode::RadicandMismatch, "element and basis from different fields");
  return BasisChange(w1, w2).height(x.a1(), x.a2(), x.b());
}

CommensurabilityResult verify_commensurability(std::int64_t d, const QuadElem& w1, const QuadElem& w2,
                                               std::int64_t R, std::int64_t ceiling) {
  validate_radicand(d);
  if (w1.d() != d || w2.d() != d) fail(ErrorCode::RadicandMismatch, "basis outside Q(sqrt(d))");
  const BasisChange change(w1, w2);
  CommensurabilityResult res;
  res.max_h1_over_h2 = Rational(0);
  res.max_h2_over_h1 = Rational(0);
  for (std::int64_t b = 1; b <= R; ++b) {
    for (std::int64_t a1 = -R; a1 <= R; ++a1) {
      const std::int64_t g1 = std::gcd(a1, b);
      for (std::int64_t a2 = -R; a2 <= R; ++a2) {
        if (std::gcd(g1, a2) != 1) continue;
        const BigInt h1 = std::max({std::abs(a1), std::abs(a2), b});
        const BigInt h2 = change.height(a1, a2, b);
        const Rational r12(h1, h2), r21(h2, h1);
        if (r12 > res.max_h1_over_h2) res.max_h1_over_h2 = r12;
        if (r21 > res.max_h2_over_h1) res.max_h2_over_h1 = r21;
        ++res.checked;
      }
    }
  }
  res.factor = std::max(ceil(res.max_h1_over_h2), ceil(res.max_h2_over_h1));
  if (res.factor < 1) res.factor = 1;
  res.ok = res.factor <= ceiling;
  return res;
}

}  // namespace trisect
