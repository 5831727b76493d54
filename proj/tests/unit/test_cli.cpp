#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "trisect/cli.hpp"
#include "trisect/report_io.hpp"

using namespace trisect;
using nlohmann::json;

namespace {

RunConfig verb(std::string v) {
  RunConfig c;
  c.verb = std::move(v);
  return c;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("decide") {
    RunConfig c = verb("decide");
    c.a = "3/2";
    RunResult r = execute(c);
    REQUIRE(r.exit_code == kExitOk);
    const json j = json::parse(r.output);
    CHECK(j["member"] == false);
    CHECK(j["certificate"]["kind"] == "eisenstein-3rs");

    c.a = "-11/8";
    const json m = json::parse(execute(c).output);
    CHECK(m["member"] == true);

    c.a = "5/2";
    CHECK(execute(c).exit_code == kExitBadArgs);
    c.a = "1/0";
    CHECK(execute(c).exit_code == kExitBadArgs);
    c.a = "1";
    c.field = "quad";
    CHECK(execute(c).exit_code == kExitBadArgs);
    c.d = 5;
    c.a = "(1+sqrt(5))/2";
    CHECK(execute(c).exit_code == kExitOk);
  }

  TEST_CASE("density output") {
    RunConfig c = verb("density");
    c.R = {10, 30, 60};
    const RunResult r = execute(c);
    REQUIRE(r.exit_code == kExitOk);
    CHECK(json::parse(r.output).contains("points"));
    c.format = "csv";
    const std::string csv = execute(c).output;
    CHECK(csv.rfind("R,num,den,delta\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  }

  TEST_CASE("lehmer and boxcount csv") {
    RunConfig c = verb("lehmer");
    c.sides = "4,4";
    c.format = "csv";
    const std::string l = execute(c).output;
    CHECK(l.rfind("k,side1,side2,count,main_term,error,f_k,eccentricity\n", 0) == 0);
    CHECK(l.find("\n2,4,4,11,") != std::string::npos);

    RunConfig b = verb("boxcount");
    b.R = {100};
    b.format = "csv";
    const std::string s = execute(b).output;
    CHECK(s.rfind("field,d,R,count,mainterm,ratio\n", 0) == 0);
    CHECK(s.find("Q,0,100,12175,") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    RunConfig c = verb("density");
    c.R = {100, 50};
    CHECK(execute(c).exit_code == kExitBadArgs);
    c.R = {10000};
    c.cap = 1000;
    const RunResult capped = execute(c);
    CHECK(capped.exit_code == kExitCap);
    CHECK_FALSE(capped.error.empty());

    RunConfig w = verb("witness");
    w.m = 3;
    w.q = 2;
    CHECK(execute(w).exit_code == kExitBadArgs);
    w.m = 5;
    CHECK(execute(w).exit_code == kExitOk);

    CHECK(execute(verb("frobnicate")).exit_code == kExitBadArgs);
    RunConfig s = verb("density");
    s.R = {10};
    s.shards = 0;
    CHECK(execute(s).exit_code == kExitBadArgs);
    RunConfig f = verb("algdeg");
    f.n = 3;
    f.format = "csv";
    CHECK(execute(f).exit_code == kExitBadArgs);
  }

  TEST_CASE("nsect and algdeg") {
    RunConfig c = verb("nsect");
    c.n = 12;
    c.p = 3;
    c.c = "3";
    c.den = "4";
    const RunResult r = execute(c);
    REQUIRE(r.exit_code == kExitOk);
    const json j = json::parse(r.output);
    CHECK(j["reduction"]["p"] == 3);
    CHECK(j["structure"]["ok"] == true);
    CHECK(j["certificate"]["kind"] == "psection-eisenstein");

    RunConfig a = verb("algdeg");
    a.n = 4;
    CHECK(execute(a).exit_code == kExitOk);
    a.degree_cap = 4;
    CHECK(execute(a).exit_code == kExitCap);
  }

  TEST_CASE("shard count does not change artifacts") {
    for (const std::string fmt : {"json", "csv"}) {
      RunConfig d = verb("density");
      d.field = "quad";
      d.d = 3;
      d.R = {4, 8, 12};
      d.format = fmt;
      RunConfig l = verb("lehmer");
      l.sides = "30.5,20,12";
      l.format = fmt;
      const std::string d1 = execute(d).output, l1 = execute(l).output;
      for (unsigned s : {2u, 4u, 8u}) {
        d.shards = l.shards = s;
        CHECK(execute(d).output == d1);
        CHECK(execute(l).output == l1);
      }
    }
  }

  TEST_CASE("atomic output file") {
    const auto dir = std::filesystem::temp_directory_path() / "trisect_cli_test";
    std::filesystem::create_directories(dir);
    RunConfig c = verb("lehmer");
    c.sides = "5,5";
    c.out = (dir / "out.json").string();
    CHECK(run(c) == kExitOk);
    std::ifstream in(c.out);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == execute(c).output);
    std::filesystem::remove_all(dir);
  }
}
