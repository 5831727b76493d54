#include "trisect/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "trisect/error.hpp"

namespace trisect {

using nlohmann::json;

namespace {

json rationals_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.to_string());
  return a;
}

json optional_double(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

BoxcountReport boxcount_report(const FieldDescriptor& field, std::int64_t R, std::uint64_t cap, std::uint64_t seed,
                               unsigned shards) {
  if (R < 1) fail(ErrorCode::BadParameters, "R must be >= 1");
  BoxcountReport r;
  r.field = field;
  r.R = R;
  r.count = count_ball(field, Rational(R));
  r.main_term = ball_main_term(field, static_cast<double>(R));
  r.ratio = r.count.get_d() / r.main_term;
  r.interval_count = count_ball_interval(field, Rational(R), Rational(-2), Rational(2), shards);
  if (R >= field.degree() + 1) r.qbox = qbox(field, R, cap, seed);
  return r;
}

bool AlgdegReport::ok() const {
  for (const auto& t : towers)
    if (!t.ok()) return false;
  for (const auto* v : {&a_degrees, &c_degrees, &d_degrees})
    for (const auto& c : *v)
      if (!c.ok()) return false;
  return identities.ok();
}

AlgdegReport algdeg_report(std::uint64_t n, std::uint64_t degree_cap) {
  if (n < 1) fail(ErrorCode::BadParameters, "n must be >= 1");
  AlgdegReport r;
  r.n = n;
  for (std::uint64_t i = 1; i <= n; ++i) {
    r.towers.push_back(tower_checks(i, degree_cap));
    r.a_degrees.push_back(an_degree_check(i, degree_cap));
    r.c_degrees.push_back(cn_degree_check(i, degree_cap));
    r.d_degrees.push_back(dn_degree_check(i, degree_cap));
  }
  r.identities = identity_suite(n);
  return r;
}

json field_json(const FieldDescriptor& field) {
  json j;
  j["field"] = field.name();
  if (!field.is_rational()) j["d"] = field.d();
  return j;
}

json to_json(const TrisectionVerdict& v) {
  json j = field_json(v.field);
  j["a"] = to_string(v.a);
  j["member"] = v.member;
  j["witness"] = v.witness ? json(to_string(*v.witness)) : json(nullptr);
  j["method"] = to_string(v.method);
  j["certificate"] = v.certificate ? to_json(*v.certificate) : json(nullptr);
  j["search_bound"] = v.search_bound.get_str();
  return j;
}

json to_json(const DensityReport& r) {
  json j = field_json(r.field);
  json pts = json::array();
  for (const auto& p : r.points)
    pts.push_back({{"R", p.R}, {"num", p.num.get_str()}, {"den", p.den.get_str()}, {"delta", p.delta}});
  j["points"] = std::move(pts);
  j["slope"] = optional_double(r.slope);
  j["target_exponent"] = r.target_exponent;
  return j;
}

json to_json(const CountReport& r) {
  return {{"k", r.sides.size()},     {"sides", rationals_json(r.sides)}, {"count", r.count.get_str()},
          {"main_term", r.main_term}, {"error", r.error},                 {"f_k", r.f_k},
          {"eccentricity", r.eccentricity}};
}

json to_json(const QBoxReport& r) {
  return {{"R", r.R},
          {"outer", rationals_json(r.outer)},
          {"inner", rationals_json(r.inner)},
          {"count", r.count.get_str()},
          {"checked", r.checked},
          {"violations", r.violations},
          {"sampled", r.sampled},
          {"main_term", r.main_term},
          {"ratio", r.ratio}};
}

json to_json(const BoxcountReport& r) {
  json j = field_json(r.field);
  j["R"] = r.R;
  j["count"] = r.count.get_str();
  j["main_term"] = r.main_term;
  j["ratio"] = r.ratio;
  j["interval_count"] = r.interval_count.get_str();
  j["qbox"] = r.qbox ? to_json(*r.qbox) : json(nullptr);
  return j;
}

json to_json(const TowerReport& r) {
  return {{"n", r.n},
          {"shape", r.shape_ok},
          {"eisenstein_at_2", r.eisenstein_ok},
          {"composition", r.composition_ok},
          {"exact_cases", r.exact_cases},
          {"numeric_cases", r.numeric_cases},
          {"chebyshev", r.chebyshev_ok},
          {"ok", r.ok()}};
}

json to_json(const DegreeCheck& r) {
  return {{"n", r.n},           {"j", r.j},           {"m", r.m},     {"coprime", r.coprime},
          {"degree", r.degree}, {"expected", r.expected}, {"ok", r.ok()}};
}

json to_json(const IdentityReport& r) {
  json ids = json::array();
  for (const auto& i : r.identities)
    ids.push_back({{"identity", i.identity},
                   {"n", i.n},
                   {"method", i.method},
                   {"holds", i.holds},
                   {"residual_bound", i.residual},
                   {"precision", i.precision}});
  json table = json::array();
  for (const auto& t : r.table) table.push_back({{"n", t.n}, {"name", t.name}, {"value", t.value}, {"ok", t.ok}});
  return {{"N", r.N}, {"identities", ids}, {"table", table}, {"max_residual", r.max_residual}, {"ok", r.ok()}};
}

json to_json(const AlgdegReport& r) {
  json j;
  j["n"] = r.n;
  auto list = [](const auto& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
  };
  j["towers"] = list(r.towers);
  j["a_degrees"] = list(r.a_degrees);
  j["c_degrees"] = list(r.c_degrees);
  j["d_degrees"] = list(r.d_degrees);
  j["identities"] = to_json(r.identities);
  j["ok"] = r.ok();
  return j;
}

std::string to_csv(const DensityReport& r) {
  std::ostringstream out;
  out << "R,num,den,delta\n";
  for (const auto& p : r.points) out << p.R << ',' << p.num << ',' << p.den << ',' << format_double(p.delta) << '\n';
  return out.str();
}

std::string to_csv(const CountReport& r) {
  std::ostringstream out;
  out << 'k';
  for (std::size_t i = 1; i <= r.sides.size(); ++i) out << ",side" << i;
  out << ",count,main_term,error,f_k,eccentricity\n" << r.sides.size();
  for (const auto& s : r.sides) out << ',' << s.to_string();
  out << ',' << r.count << ',' << format_double(r.main_term) << ',' << format_double(r.error) << ','
      << format_double(r.f_k) << ',' << format_double(r.eccentricity) << '\n';
  return out.str();
}

std::string to_csv(const BoxcountReport& r) {
  std::ostringstream out;
  out << "field,d,R,count,mainterm,ratio\n"
      << r.field.name() << ',' << r.field.d() << ',' << r.R << ',' << r.count << ','
      << format_double(r.main_term) << ',' << format_double(r.ratio) << '\n';
  return out.str();
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  const auto tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) fail(ErrorCode::BadParameters, "cannot write " + tmp.string());
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) fail(ErrorCode::BadParameters, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    fail(ErrorCode::BadParameters, "cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace trisect
