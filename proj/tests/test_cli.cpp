#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "seqmetric/cli.hpp"

using namespace seqmetric;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("table ld") {
  const auto r = run({"table", "--fn", "ld", "--n", "6", "--m", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "x,ld@6,ld@6/2/AM,ld@6/2/GM,ld@6/2/HM\n"
        "1,0.0000,0.2500,0.0000,0.0000\n"
        "2,0.5000,0.4167,0.4082,0.4000\n"
        "3,0.3333,0.6667,0.5774,0.5000\n"
        "4,1.0000,0.6000,0.4472,0.3333\n"
        "5,0.2000,0.5167,0.4082,0.3226\n"
        "6,0.8333,0.4167,0.0000,0.0000\n");
}

TEST_CASE("table phi with two windows") {
  const auto r = run({"table", "--fn", "phi", "--n", "8", "--m", "3", "--m", "5"});
  CHECK(r.code == kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0] == "x,phi@8,phi@8/3/AM,phi@8/3/GM,phi@8/3/HM,phi@8/5/AM,phi@8/5/GM,phi@8/5/HM");
  CHECK(rows[5].rfind("5,4.0000,4.0000,", 0) == 0);
}

TEST_CASE("table htheta row 13") {
  const auto r = run({"table", "--fn", "htheta", "--n", "17", "--m", "5"});
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 18);
  CHECK(rows[13] == "13,0.0884,0.0849,0.0846,0.0842");
}

TEST_CASE("table options") {
  const auto one_kind = run({"table", "--fn", "ld", "--n", "6", "--m", "2", "--kind", "HM",
                             "--precision", "2"});
  CHECK(lines(one_kind.out)[2] == "2,0.50,0.40");
  const auto json = run({"table", "--fn", "ld", "--n", "6", "--m", "2", "--format", "json"});
  CHECK(json.code == kExitOk);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["columns"].size() == 5);
  CHECK(j["rows"].size() == 6);
  CHECK(j["rows"][1][2].get<double>() == 0.4167);
}

TEST_CASE("table errors exit 2") {
  CHECK(run({"table", "--fn", "sigma", "--n", "6", "--m", "2"}).code == kExitUsage);
  CHECK(run({"table", "--fn", "sigma", "--n", "6", "--m", "2"}).err.find("sigma") !=
        std::string::npos);
  CHECK(run({"table", "--fn", "ld", "--n", "1", "--m", "2"}).code == kExitUsage);
  CHECK(run({"table", "--fn", "ld", "--n", "6", "--m", "0"}).code == kExitUsage);
  CHECK(run({"table", "--fn", "ld", "--n", "6", "--m", "2", "--precision", "16"}).code ==
        kExitUsage);
  CHECK(run({"table", "--fn", "ld", "--n", "6", "--m", "2", "--format", "xml"}).code ==
        kExitUsage);
  CHECK(run({"table", "--fn", "ld", "--n", "6", "--m", "2", "--kind", "QM"}).code == kExitUsage);
  CHECK(run({"table", "--fn", "ld", "--n", "6"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("preorder") != std::string::npos);
}

TEST_CASE("preorder") {
  CHECK(run({"preorder", "--fn", "ld", "--n", "6", "--m", "2", "--label", "g+", "6", "2"}).out ==
        "false\n");
  CHECK(run({"preorder", "--fn", "ld", "--n", "6", "--m", "2", "--label", "f+", "6", "2"}).out ==
        "true\n");
  CHECK(run({"preorder", "--fn", "tau", "--n", "13", "--m", "2", "--label", "h+", "8", "11"}).out ==
        "false\n");
  for (const char* label : {"f+", "f*", "fH", "g+", "g*", "gH", "h+", "h*", "hH"}) {
    const auto r = run({"preorder", "--fn", "omega", "--n", "9", "--m", "4", "--label", label, "3", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "true\n");
  }
  CHECK(run({"preorder", "--fn", "ld", "--n", "6", "--m", "2", "--label", "q+", "1", "2"}).code ==
        kExitUsage);
  CHECK(run({"preorder", "--fn", "ld", "--n", "6", "--m", "2", "--label", "f+", "1"}).code ==
        kExitUsage);
  CHECK(run({"preorder", "--fn", "ld", "--n", "6", "--m", "2", "--m", "3", "--label", "f+", "1",
             "2"}).code == kExitUsage);
}

TEST_CASE("classes") {
  CHECK(run({"classes", "--fn", "ld", "--n", "6", "--m", "2"}).out ==
        R"({"blocks":[["f+","g*","h*"],["f*"],["fH"],["g+","hH"],["gH","h+"]],"count":5})"
        "\n");
  const auto logtau = nlohmann::json::parse(run({"classes", "--fn", "logtau", "--n", "13", "--m", "2"}).out);
  CHECK(logtau["count"] == 3);
  const auto omega = nlohmann::json::parse(run({"classes", "--fn", "omega", "--n", "9", "--m", "4"}).out);
  CHECK(omega["count"] == 1);
  const auto tau = run({"classes", "--fn", "tau", "--n", "13", "--m", "2"});
  CHECK(tau.code == kExitUsage);
  CHECK(tau.err.find("class A") != std::string::npos);
}

TEST_CASE("extrema") {
  const auto r = run({"extrema", "--fn", "htheta", "--n", "17", "--m", "5"});
  CHECK(r.code == kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) CHECK(row.find("argmin={13}") != std::string::npos);
  CHECK(rows[0] == "AM m=5 max=0.5068 argmax={1} min=0.0849 argmin={13}");
  const auto phi = run({"extrema", "--fn", "phi", "--n", "8", "--m", "3", "--kind", "AM"});
  CHECK(phi.out == "AM m=3 max=4.0000 argmax={5,6} min=1.3333 argmin={1}\n");
}

TEST_CASE("dual") {
  const auto r = run({"dual", "--fn", "phi", "--n", "8", "--m", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "max 5 -> min 8\nmax 6 -> min 1\nmin 1 -> max 4\nverdict true\n");
  CHECK(run({"dual", "--fn", "phi", "--n", "8", "--m", "8"}).code == kExitUsage);
}

TEST_CASE("verify") {
  const auto tables = run({"verify", "tables"});
  CHECK(tables.code == kExitOk);
  CHECK(tables.out.rfind("PASS tables:", 0) == 0);
  const auto means = run({"verify", "means", "--seed", "3"});
  CHECK(means.code == kExitOk);
  CHECK(means.out.find("1000 trials per kind") != std::string::npos);
  const auto missing = run({"verify", "tables", "--golden-dir", "/nonexistent"});
  CHECK(missing.code == kExitVerifyFailed);
  CHECK(missing.out.find("first failure") != std::string::npos);
  CHECK(run({"verify", "bogus"}).code == kExitUsage);
}

TEST_CASE("output is byte-deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "groups", "--seed", "5"},
        std::vector<std::string>{"table", "--fn", "phi", "--n", "8", "--m", "3", "--format", "json"},
        std::vector<std::string>{"classes", "--fn", "ld", "--n", "12", "--m", "3"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
