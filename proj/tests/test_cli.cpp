#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "freelat/cli.hpp"
#include "freelat/finmodel.hpp"
#include "json.hpp"

using namespace freelat;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kP = "x1 /\\ (x2 \\/ x3)";
const char* kQ = "y1 /\\ (y1 \\/ y2) /\\ (y1 \\/ y3)";

}  // namespace

TEST_CASE("decide") {
  CHECK(run({"decide", "--leq", "x /\\ y", "x \\/ y"}).code == 0);
  CHECK(run({"decide", "--leq", "x", "y"}).code == 1);
  CHECK(run({"decide", "--eq", "x /\\ (x \\/ y)", "x"}).code == 0);
  CHECK(run({"decide", "--leq", "x /\\", "y"}).code == 2);
  CHECK(run({"decide"}).code == 2);
  CHECK(run({"--sig", "f/1", "decide", "--leq", "f(x /\\ y)", "f(x)"}).code == 0);
  CHECK(run({"decide", "--leq", "f(x)", "f(x)"}).code == 2);

  auto traced = run({"decide", "--trace", "--leq", "x /\\ y", "x \\/ z"});
  CHECK(traced.code == 0);
  CHECK(traced.out.find("whitman") != std::string::npos);

  auto j = json::parse(run({"--json", "decide", "--trace", "--leq", "x", "x \\/ y"}).out);
  CHECK(j["holds"] == true);
  CHECK(j["relation"] == "leq");
  CHECK(j.contains("trace"));
}

TEST_CASE("ancestor") {
  auto r = run({"--json", "ancestor", "--p", kP, "--q", kQ, "--u", "x1=x,x2=x,x3=y", "--v", "y1=x,y2=y,y3=y"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  for (const char* key : {"z_vars", "s0", "s1", "sigma", "tau", "gamma", "report"}) CHECK(j.contains(key));
  CHECK(j["z_vars"] == json({"z_1_1", "z_2_1", "z_3_2", "z_3_3"}));
  CHECK(j["gamma"]["z_3_3"] == "y");
  CHECK(j["verified"] == true);
  for (const auto& c : j["report"]) CHECK(c["holds"] == true);
  CHECK(j["s0"] ==
        "(z_1_1 /\\ z_2_1 /\\ (z_3_2 \\/ (z_1_1 /\\ z_2_1)) /\\ (z_3_3 \\/ (z_1_1 /\\ z_2_1))) \\/ "
        "(z_1_1 /\\ (z_2_1 \\/ (z_3_2 /\\ z_3_3)))");

  CHECK(run({"ancestor", "--p", "x1", "--q", "y1", "--u", "x1=a", "--v", "y1=b"}).code == 4);
  CHECK(run({"ancestor", "--p", "x1", "--q", "y1 \\/ y2", "--u", "x1=a,x2=b", "--v", "y1=a,y2=b"}).code == 3);
  auto inv = run({"--json", "ancestor", "--p", "x1", "--q", "y1 \\/ y2", "--u", "x1=a,x2=b", "--v", "y1=a,y2=b"});
  CHECK(json::parse(inv.out)["error"] == "InvalidEquation");
  CHECK(run({"ancestor", "--p", "x1"}).code == 2);

  auto sym = run({"--sig", "p/3,q/3", "ancestor", "--construct-only", "--naming", "sequential", "--p", "p(x1,x2,x3)",
                  "--q", "q(y1,y2,y3)", "--u", "x1=x,x2=x,x3=y", "--v", "y1=x,y2=y,y3=y"});
  CHECK(sym.code == 0);
  CHECK(sym.out.find("p(z1, z2, z3 /\\ z4) \\/ q(z1 /\\ z2, z3, z4)") != std::string::npos);
}

TEST_CASE("refute") {
  auto r = run({"--json", "refute", "--leq", "x /\\ (y \\/ z)", "(x /\\ y) \\/ (x /\\ z)", "--max-size", "5"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["witness"]["lattice"]["size"] == 5);
  CHECK(j["witness"]["lattice"]["leq_matrix"].size() == 5);
  CHECK(j["witness"]["assignment"].size() == 3);

  CHECK(run({"refute", "--leq", "x /\\ y", "x", "--max-size", "4"}).code == 1);
  CHECK(run({"refute", "--leq", "x", "y", "--max-size", "9"}).code == 2);
  CHECK(run({"--seed", "5", "--sig", "f/1", "refute", "--leq", "f(x)", "x", "--max-size", "3"}).code == 0);

  auto path = std::filesystem::temp_directory_path() / "freelat_test_lattice.json";
  {
    std::ofstream f(path);
    f << lattice_to_json(named_lattice("N5")).dump();
  }
  CHECK(run({"refute", "--eq", "x /\\ (y \\/ z)", "(x /\\ y) \\/ (x /\\ z)", "--lattice", path.string()}).code == 0);
  {
    std::ofstream f(path);
    f << lattice_to_json(named_lattice("chain_4")).dump();
  }
  CHECK(run({"refute", "--eq", "x /\\ (y \\/ z)", "(x /\\ y) \\/ (x /\\ z)", "--lattice", path.string()}).code == 1);
  {
    std::ofstream f(path);
    f << "{not json";
  }
  CHECK(run({"refute", "--leq", "x", "y", "--lattice", path.string()}).code == 2);
  std::filesystem::remove(path);
  CHECK(run({"refute", "--leq", "x", "y", "--lattice", path.string()}).code == 2);
}

TEST_CASE("casebook") {
  CHECK(run({"casebook"}).code == 0);
  auto one = run({"--json", "casebook", "--entry", "example_pxxy"});
  CHECK(one.code == 0);
  CHECK(json::parse(one.out)["verdict"] == "pass");
  CHECK(run({"casebook", "--entry", "missing"}).code == 2);
  auto list = run({"casebook", "--list"});
  CHECK(list.out.find("meet_nonuniqueness") != std::string::npos);
}

TEST_CASE("version and help") {
  auto v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find(kVersion) != std::string::npos);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"bogus"}).code == 2);
}
