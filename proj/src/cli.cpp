#include "trisect/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trisect/algdeg.hpp"
#include "trisect/config.hpp"
#include "trisect/coprime_count.hpp"
#include "trisect/error.hpp"
#include "trisect/nsect.hpp"
#include "trisect/report_io.hpp"
#include "trisect/trisect_core.hpp"
#include "trisect/verify_suite.hpp"

namespace trisect {

using nlohmann::json;

namespace {

FieldDescriptor field_of(const RunConfig& c) {
  if (c.field == "q") {
    if (c.d != 0) fail(ErrorCode::BadParameters, "--d only applies to --field quad");
    return FieldDescriptor::rationals();
  }
  if (c.field == "quad") {
    if (c.d == 0) fail(ErrorCode::BadParameters, "--field quad needs --d");
    return FieldDescriptor::quadratic(c.d);
  }
  fail(ErrorCode::BadParameters, "unknown field '" + c.field + "' (q or quad)");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::int64_t single_R(const RunConfig& c) {
  if (c.R.size() != 1) fail(ErrorCode::BadParameters, c.verb + " takes a single --R");
  return c.R.front();
}

BigInt parse_big(const std::string& text, const std::string& flag) {
  BigInt v;
  if (text.empty() || v.set_str(text, 10) != 0) fail(ErrorCode::BadParameters, flag + " must be an integer");
  return v;
}

void require_json(const RunConfig& c) {
  if (c.format != "json") fail(ErrorCode::BadParameters, c.verb + " only writes json");
}

RunResult run_verb(const RunConfig& c) {
  if (c.shards < 1) fail(ErrorCode::BadParameters, "--shards must be >= 1");
  if (c.format != "json" && c.format != "csv") fail(ErrorCode::BadParameters, "--format is json or csv");
  for (std::size_t i = 1; i < c.R.size(); ++i)
    if (c.R[i] <= c.R[i - 1]) fail(ErrorCode::BadParameters, "--R must be strictly increasing");
  const std::uint64_t cap = c.cap == 0 ? default_cap() : c.cap;
  const std::uint64_t degree_cap = c.degree_cap == 0 ? kDefaultDegreeCap : c.degree_cap;
  RunResult res;

  if (c.verb == "decide") {
    require_json(c);
    if (c.a.empty()) fail(ErrorCode::BadParameters, "decide needs --a");
    const FieldDescriptor f = field_of(c);
    res.output = dump(to_json(decide_trisection(f, f.parse_element(c.a))));
  } else if (c.verb == "density") {
    if (c.R.empty()) fail(ErrorCode::BadParameters, "density needs --R");
    const DensityReport r = density_experiment(field_of(c), c.R, c.shards, cap);
    res.output = c.format == "csv" ? to_csv(r) : dump(to_json(r));
  } else if (c.verb == "lehmer") {
    if (c.sides.empty()) fail(ErrorCode::BadParameters, "lehmer needs --sides");
    const CountReport r = lehmer_report(Box::parse(c.sides), c.shards);
    res.output = c.format == "csv" ? to_csv(r) : dump(to_json(r));
  } else if (c.verb == "boxcount") {
    const BoxcountReport r = boxcount_report(field_of(c), single_R(c), cap, c.seed, c.shards);
    res.output = c.format == "csv" ? to_csv(r) : dump(to_json(r));
    if (r.qbox && r.qbox->violations > 0) res.exit_code = kExitFalsified;
  } else if (c.verb == "nsect") {
    require_json(c);
    json j;
    if (c.n != 0) {
      const NsectReduction red = nsect_reduce(c.n);
      j["reduction"] = {{"n", red.n}, {"power_of_two", red.power_of_two}, {"p", red.p}, {"rationale", red.rationale}};
    }
    if (c.p != 0) {
      const StructureReport s = verify_structure(psection_poly(c.p));
      j["structure"] = {{"p", s.p},
                        {"leading", s.leading.get_str()},
                        {"x_coefficient", s.x_coeff.get_str()},
                        {"degree", s.degree_ok},
                        {"binomial_sum", s.binomial_sum_ok},
                        {"divisibility", s.divisibility_ok},
                        {"ok", s.ok()}};
      if (!s.ok()) res.exit_code = kExitFalsified;
      if (!c.c.empty() || !c.den.empty())
        j["certificate"] = to_json(nonsectability_cert(c.p, parse_big(c.c, "--c"), parse_big(c.den, "--den")));
    }
    if (j.is_null()) fail(ErrorCode::BadParameters, "nsect needs --n or --p");
    res.output = dump(j);
  } else if (c.verb == "algdeg") {
    require_json(c);
    if (c.n == 0) fail(ErrorCode::BadParameters, "algdeg needs --n");
    const AlgdegReport r = algdeg_report(c.n, degree_cap);
    res.output = dump(to_json(r));
    if (!r.ok()) res.exit_code = kExitFalsified;
  } else if (c.verb == "witness") {
    require_json(c);
    if (c.m == 0 || c.q == 0) fail(ErrorCode::BadParameters, "witness needs --m and --q");
    res.output = dump(to_json(nonconstructible_witness(c.m, c.q)));
  } else if (c.verb == "verify") {
    require_json(c);
    const SuiteReport r = verify_suite(VerifyConfig{c.seed, c.shards, c.full});
    res.output = dump(to_json(r));
    if (r.falsifications() > 0) res.exit_code = kExitFalsified;
  } else {
    fail(ErrorCode::BadParameters, "unknown verb '" + c.verb + "'");
  }
  return res;
}

}  // namespace

RunResult execute(const RunConfig& config) {
  try {
    return run_verb(config);
  } catch (const Error& e) {
    RunResult r;
    r.exit_code = e.code() == ErrorCode::CapExceeded ? kExitCap : kExitBadArgs;
    r.error = e.what();
    return r;
  }
}

int run(const RunConfig& config) {
  RunResult r = execute(config);
  if (!r.error.empty()) {
    std::cerr << "error: " << r.error << "\n";
    return r.exit_code;
  }
  if (config.out.empty()) {
    std::cout << r.output;
  } else {
    try {
      write_atomic(config.out, r.output);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitBadArgs;
    }
  }
  return r.exit_code;
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Trisection numbers, height counts and degree certificates"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", c.out, "Write the artifact here (atomically) instead of stdout");
    sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--shards", c.shards, "Worker shards")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "Seed for sampled checks");
    sub->add_option("--cap", c.cap, "Enumeration cap (default from TRISECT_CAP or 1e8)")->check(CLI::PositiveNumber);
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", c.field, "q or quad")->check(CLI::IsMember({"q", "quad"}));
    sub->add_option("--d", c.d, "Squarefree radicand for --field quad");
  };
  auto add_R = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--R", c.R, "Height bound(s), comma separated")->delimiter(',');
    if (required) o->required();
  };

  auto* decide = app.add_subcommand("decide", "Is a a trisection number of the field?");
  add_common(decide);
  add_field(decide);
  decide->add_option("--a", c.a, "Element, e.g. 3/2 or (1+sqrt(5))/2")->required();

  auto* density = app.add_subcommand("density", "Density of trisection numbers in height balls");
  add_common(density);
  add_field(density);
  add_R(density, true);

  auto* lehmer = app.add_subcommand("lehmer", "Coprime tuples in a box");
  add_common(lehmer);
  lehmer->add_option("--sides", c.sides, "Comma separated sides, e.g. 5.9,3.2")->required();

  auto* boxcount = app.add_subcommand("boxcount", "Height ball counts and the Q(R) box");
  add_common(boxcount);
  add_field(boxcount);
  add_R(boxcount, true);

  auto* nsect = app.add_subcommand("nsect", "p-section structure, reduction and certificates");
  add_common(nsect);
  nsect->add_option("--n", c.n, "Reduce n-section to an odd prime");
  nsect->add_option("--p", c.p, "Odd prime");
  nsect->add_option("--c", c.c, "Cosine numerator");
  nsect->add_option("--den", c.den, "Cosine denominator");

  auto* algdeg = app.add_subcommand("algdeg", "Tower, degree and identity reports up to n");
  add_common(algdeg);
  algdeg->add_option("--n", c.n, "Largest index")->required()->check(CLI::PositiveNumber);
  algdeg->add_option("--degree-cap", c.degree_cap, "Largest polynomial degree")->check(CLI::PositiveNumber);

  auto* witness = app.add_subcommand("witness", "Non-constructible trisection number f(q^(1/m))");
  add_common(witness);
  witness->add_option("--m", c.m, "Odd root index prime to 3")->required();
  witness->add_option("--q", c.q, "Prime radicand")->required();

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  add_common(verify);
  verify->add_flag("--full", c.full, "Full-scale ranges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadArgs;
  }
  c.verb = app.get_subcommands().front()->get_name();
  return run(c);
}

}  // namespace trisect
