#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "seqmetric/errors.hpp"
#include "seqmetric/golden.hpp"
#include "seqmetric/verify.hpp"

using namespace seqmetric;

TEST_CASE("column headers") {
  const auto base = parse_column("ld@6");
  CHECK(base.function == "ld");
  CHECK(base.modulus == 6);
  CHECK_FALSE(base.window);
  const auto ma = parse_column("exp(ld)@6/2/AM");
  CHECK(ma.function == "exp(ld)");
  CHECK(*ma.window == 2);
  CHECK(*ma.kind == MeanKind::AM);
  CHECK_FALSE(ma.is_relation());
  const auto rel = parse_column("recip(tau)@13/2/AM/T");
  CHECK(rel.is_relation());
  CHECK(rel.str() == "recip(tau)@13/2/AM/T");
  CHECK_THROWS_AS(parse_column("ld"), ConfigError);
  CHECK_THROWS_AS(parse_column("ld@6/2"), ConfigError);
  CHECK_THROWS_AS(parse_column("ld@six"), ConfigError);
  CHECK_THROWS_AS(parse_column("ld@6/2/XM"), ConfigError);
}

TEST_CASE("column evaluation") {
  CHECK(evaluate_column(parse_column("ld@6/2/AM"), 2) == doctest::Approx(5.0 / 12.0));
  CHECK(evaluate_relation(parse_column("ld@6/2/AM/G"), 6, 2));
  CHECK_THROWS_AS(evaluate_column(parse_column("ld@6/2/AM/G"), 1), ConfigError);
  CHECK_THROWS_AS(evaluate_relation(parse_column("ld@6/2/AM"), 1, 2), ConfigError);
}

TEST_CASE("csv round trip") {
  const auto t = parse_csv("x,a\r\n1,0.5\r\n\r\n2,0.25\n");
  CHECK(t.header == std::vector<std::string>{"x", "a"});
  CHECK(t.rows.size() == 2);
  CHECK(write_csv(t) == "x,a\n1,0.5\n2,0.25\n");
  CHECK_THROWS_AS(parse_csv("x,a\n1\n"), ConfigError);
  CHECK_THROWS_AS(read_csv("/nonexistent/file.csv"), ConfigError);
}

TEST_CASE("value table layout") {
  const auto t = value_table("ld", 6, {2}, {MeanKind::AM, MeanKind::GM}, 4);
  CHECK(t.header == std::vector<std::string>{"x", "ld@6", "ld@6/2/AM", "ld@6/2/GM"});
  REQUIRE(t.rows.size() == 6);
  CHECK(t.rows[1] == std::vector<std::string>{"2", "0.5000", "0.4167", "0.4082"});
}

TEST_CASE("every golden table reproduces") {
  for (const char* file : kGoldenFiles) {
    const auto cmp = compare_golden(read_csv(default_golden_dir() / file), file);
    CHECK_MESSAGE(cmp.ok(), file << ": " << (cmp.mismatches.empty() ? "" : cmp.mismatches.front()));
    CHECK(cmp.max_abs_error <= 5e-5);
  }
}

TEST_CASE("a corrupted golden value is caught") {
  auto table = read_csv(default_golden_dir() / "ld_n6_m2.csv");
  table.rows[3][2] = "0.6001";
  const auto cmp = compare_golden(table, "corrupt");
  CHECK_FALSE(cmp.ok());
  CHECK(cmp.mismatches.size() == 1);

  auto rel = read_csv(default_golden_dir() / "ld_relations_n6_m2.csv");
  rel.rows[0][2] = "false";
  CHECK_FALSE(compare_golden(rel, "corrupt").ok());
  rel.rows[0][2] = "maybe";
  CHECK_FALSE(compare_golden(rel, "corrupt").ok());
}

TEST_CASE("class views used by the axiom suite") {
  CHECK(as_class(lookup("tau"), ClassTag::G, 13)->base().name() == "shiftdown(tau)");
  CHECK(as_class(lookup("tau"), ClassTag::T, 13)->base().name() == "recip(tau)");
  CHECK(as_class(lookup("Omega"), ClassTag::Q, 13)->base().name() == "shiftup(Omega)");
  CHECK(as_class(lookup("Omega"), ClassTag::T, 13)->base().name() == "negexp(Omega)");
  CHECK(as_class(lookup("recip"), ClassTag::G, 13)->base().name() == "oneminus(recip)");
  CHECK(as_class(lookup("recip"), ClassTag::Q, 13)->base().name() == "recip(recip)");
  CHECK(as_class(lookup("ld"), ClassTag::G, 6)->base().name() == "ld");
  CHECK(as_class(lookup("theta"), ClassTag::Q, 6)->base().name() == "shiftup(theta)");
  ArithmeticFunction shifted("succ", [](std::int64_t x) { return static_cast<double>(x + 1); },
                             false, false);
  for (auto tag : {ClassTag::G, ClassTag::Q, ClassTag::T}) {
    CHECK_FALSE(as_class(shifted, tag, 6).has_value());
  }
}

TEST_CASE("harmonic reversal reciprocals") {
  const IntervalFunction counter{0, {0.0, 0.0, 4.0, 1.0, 4.0}};
  const auto r = harmonic_reversal_reciprocals(counter, 1.0);
  // 1/r(2) .. 1/r(5)
  REQUIRE(r.size() == 4);
  CHECK(r[0] == 1.0);
  CHECK(r[1] == doctest::Approx(-0.5));
  CHECK(r[2] == doctest::Approx(2.5));
  CHECK(r[3] == doctest::Approx(-2.0));
  CHECK_THROWS_AS(harmonic_reversal_reciprocals(counter, 0.0), DomainError);
}

TEST_CASE("suites pass") {
  VerifyOptions options;
  for (const auto& name : suite_names()) {
    const auto results = run_suite(name, options);
    REQUIRE(results.size() == 1);
    CHECK_MESSAGE(results.front().passed(), name << ": " << results.front().first_failure);
    CHECK(results.front().checks > 0);
  }
  CHECK(run_suite("all", options).size() == suite_names().size());
  CHECK_THROWS_AS(run_suite("nope", options), ConfigError);
}

TEST_CASE("suites are deterministic in the seed") {
  const auto a = run_suite("means", VerifyOptions{7});
  const auto b = run_suite("means", VerifyOptions{7});
  CHECK(a.front().checks == b.front().checks);
  CHECK(a.front().summary == b.front().summary);
  CHECK(run_suite("groups", VerifyOptions{123}).front().passed());
  CHECK(run_suite("reverse_gm", VerifyOptions{99}).front().passed());
}

TEST_CASE("tables suite fails on a missing directory") {
  VerifyOptions options;
  options.golden_dir = "/nonexistent";
  const auto r = run_suite("tables", options).front();
  CHECK_FALSE(r.passed());
  CHECK(r.failures == std::size(kGoldenFiles));
}
