#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "seqmetric/errors.hpp"
#include "seqmetric/metrics.hpp"

using namespace seqmetric;

using Tuple = std::vector<std::int64_t>;

TEST_CASE("dist_z") {
  const auto Omega = extend(lookup("Omega"), 13);
  CHECK(dist_z(ClassTag::G, Omega, 5, 5) == 0);
  CHECK(dist_z(ClassTag::G, Omega, 1, 4) == 2);
  CHECK(dist_z(ClassTag::G, Omega, 4, 20) == 3);  // 20 is 7 mod 13
  CHECK(dist_z(ClassTag::T, extend(lookup("recip"), 13), 1, 2) == 0.5);
  CHECK(dist_z(ClassTag::Q, extend(lookup("tau"), 13), 2, 4) == 3);
  // same residue, different integers: distance uses the values
  CHECK(dist_z(ClassTag::G, Omega, 4, 17) == 4);
}

TEST_CASE("dist_z rejects a mismatched tag") {
  CHECK_THROWS_AS(dist_z(ClassTag::Q, extend(lookup("Omega"), 13), 1, 2), DomainError);
  CHECK_THROWS_AS(dist_z(ClassTag::T, extend(lookup("tau"), 13), 1, 2), DomainError);
}

TEST_CASE("dist_tuple") {
  const auto ld = extend(lookup("ld"), 6);
  CHECK(dist_tuple(ClassTag::G, ld, MeanKind::AM, Tuple{2, 3}, Tuple{6, 1}) ==
        doctest::Approx(0.8333).epsilon(1e-4));
  for (auto kind : kAllMeanKinds) {
    CHECK(dist_tuple(ClassTag::G, ld, kind, Tuple{2, 5, 3}, Tuple{2, 5, 3}) == 0);
  }
  CHECK(dist_tuple(ClassTag::G, ld, MeanKind::GM, Tuple{2, 3}, Tuple{2, 4}) == 0);
  CHECK(dist_tuple(ClassTag::G, ld, MeanKind::HM, Tuple{2, 3}, Tuple{2, 4}) == 0);
  CHECK_THROWS_AS(dist_tuple(ClassTag::G, ld, MeanKind::AM, Tuple{1, 2}, Tuple{1}), DomainError);
  CHECK_THROWS_AS(dist_tuple(ClassTag::G, ld, MeanKind::AM, Tuple{}, Tuple{}), DomainError);
}

TEST_CASE("dist_centred and dist_sci") {
  const auto ld = extend(lookup("ld"), 6);
  const double d = dist_centred(ClassTag::G, ld, MeanKind::AM, consecutive(2, 2), consecutive(5, 2));
  CHECK(d == doctest::Approx(0.9334).epsilon(1e-4));
  const auto spec = make_metric_spec(ClassTag::G, ld, 2, MeanKind::AM);
  CHECK(dist_sci(spec, 2, 5) == d);
  CHECK(dist_sci(spec, 3, 3) == 0);
  const auto eld = make_metric_spec(ClassTag::Q, extend(lookup("exp(ld)"), 6), 2, MeanKind::AM);
  CHECK(dist_sci(eld, 1, 2) == doctest::Approx(1.3244 + 1.5222 - 2).epsilon(1e-4));
  CHECK(dist_centred(ClassTag::G, ld, MeanKind::AM, Tuple{2, 3}, Tuple{2, 3}) == 0);
  // permuted tuples are different points
  CHECK(dist_centred(ClassTag::G, ld, MeanKind::AM, Tuple{2, 3}, Tuple{3, 2}) > 0);
}

TEST_CASE("centre decomposition") {
  const auto ld = extend(lookup("ld"), 6);
  const Tuple ones(3, 1);
  for (auto kind : kAllMeanKinds) {
    for (std::int64_t x = 2; x <= 6; ++x) {
      const auto xs = consecutive(x, 3);
      CHECK(dist_centred(ClassTag::G, ld, kind, ones, xs) == doctest::Approx(centred_value(ld, kind, xs)));
    }
  }
}

TEST_CASE("T-class centred distances lie in [0, 2]") {
  const auto h = extend(lookup("htheta"), 17);
  for (auto kind : kAllMeanKinds) {
    const auto spec = make_metric_spec(ClassTag::T, h, 5, kind);
    for (std::int64_t x = 1; x <= 17; ++x) {
      for (std::int64_t y = 1; y <= 17; ++y) {
        const double d = dist_sci(spec, x, y);
        CHECK(d >= 0);
        CHECK(d <= 2);
      }
    }
  }
}

TEST_CASE("make_metric_spec validation") {
  CHECK_THROWS_AS(make_metric_spec(ClassTag::G, extend(lookup("ld"), 6), 0, MeanKind::AM),
                  DomainError);
  CHECK_THROWS_AS(make_metric_spec(ClassTag::Q, extend(lookup("ld"), 6), 2, MeanKind::AM),
                  DomainError);
}

TEST_CASE("consecutive windows") {
  CHECK(consecutive(5, 3) == Tuple{5, 6, 7});
  CHECK(consecutive(-1, 2) == Tuple{-1, 0});
  CHECK_THROWS_AS(consecutive(1, 0), DomainError);
}

TEST_CASE("compressed relation") {
  const auto Omega = extend(lookup("Omega"), 13);
  const auto gm = compressed_relation_check(Omega, MeanKind::GM, Tuple{2, 3}, Tuple{4, 5});
  CHECK(gm.holds);
  CHECK(gm.tuple >= gm.centred);
  const auto am = compressed_relation_check(Omega, MeanKind::AM, Tuple{2, 3}, Tuple{4, 5});
  CHECK(am.holds);
  CHECK(am.tuple == doctest::Approx(am.centred));
  const auto same = compressed_relation_check(Omega, MeanKind::HM, Tuple{2, 3}, Tuple{2, 3});
  CHECK(same.tuple == 0);
  CHECK(same.centred == 0);
  CHECK(same.holds);
  CHECK_THROWS_AS(compressed_relation_check(Omega, MeanKind::AM, Tuple{2, 3}, Tuple{2, 5}),
                  PreconditionError);
}

TEST_CASE("axiom checker accepts genuine pseudometrics") {
  const auto Omega = extend(lookup("Omega"), 13);
  std::vector<std::int64_t> points;
  for (std::int64_t x = 1; x <= 100; ++x) points.push_back(x);
  const auto report = check_axioms_exhaustive(
      [&](std::int64_t a, std::int64_t b) { return dist_z(ClassTag::G, Omega, a, b); }, points);
  CHECK(report.ok());
  CHECK(report.triples_checked == 100 * 100 * 100);
  const auto sampled = check_axioms(
      [&](std::int64_t a, std::int64_t b) { return dist_z(ClassTag::G, Omega, a, b); }, points,
      5000, 1);
  CHECK(sampled.ok());
  CHECK(sampled.triples_checked == 5000);
}

TEST_CASE("axiom checker reports a broken distance") {
  const auto Omega = extend(lookup("Omega"), 13);
  std::vector<std::int64_t> points = {1, 2, 4, 8};
  const auto report = check_axioms_exhaustive(
      [&](std::int64_t a, std::int64_t b) { return Omega(a) - Omega(b); }, points);
  CHECK_FALSE(report.ok());
  CHECK(report.count(AxiomViolation::Kind::Symmetry) > 0);
  CHECK(std::is_sorted(report.violations.begin(), report.violations.end()));
  CHECK(describe(report.violations.front()).find("symmetry") != std::string::npos);
}

TEST_CASE("axiom checker is deterministic") {
  std::vector<int> points = {0, 1, 2, 3, 4, 5};
  auto bad = [](int a, int b) { return a == b ? 0.0 : (a + b == 5 ? 10.0 : 1.0); };
  const auto r1 = check_axioms(bad, points, 300, 42);
  const auto r2 = check_axioms(bad, points, 300, 42);
  CHECK_FALSE(r1.ok());
  REQUIRE(r1.violations.size() == r2.violations.size());
  for (std::size_t i = 0; i < r1.violations.size(); ++i) {
    CHECK(r1.violations[i].a == r2.violations[i].a);
    CHECK(r1.violations[i].c == r2.violations[i].c);
  }
}

TEST_CASE("AM tuple distances satisfy the axioms on random tuples") {
  const auto Omega = extend(lookup("Omega"), 13);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> coord(1, 13);
  std::vector<Tuple> tuples(40, Tuple(3));
  for (auto& t : tuples) {
    for (auto& c : t) c = coord(rng);
  }
  const auto report = check_axioms_exhaustive(
      [&](const Tuple& a, const Tuple& b) { return dist_tuple(ClassTag::G, Omega, MeanKind::AM, a, b); },
      tuples);
  CHECK(report.ok());
}

TEST_CASE("GM and HM tuple distances can break the triangle inequality") {
  // A shared coordinate zeroes both legs, the direct distance is positive.
  const auto Omega = extend(lookup("Omega"), 13);
  const Tuple a = {2, 2}, b = {2, 3}, c = {3, 3};
  for (auto kind : {MeanKind::GM, MeanKind::HM}) {
    CHECK(dist_tuple(ClassTag::G, Omega, kind, a, b) == 0);
    CHECK(dist_tuple(ClassTag::G, Omega, kind, b, c) == 0);
    CHECK(dist_tuple(ClassTag::G, Omega, kind, a, c) == 2);
    const auto report = check_axioms_exhaustive(
        [&](const Tuple& x, const Tuple& y) { return dist_tuple(ClassTag::G, Omega, kind, x, y); },
        std::vector<Tuple>{a, b, c});
    CHECK(report.count(AxiomViolation::Kind::Triangle) > 0);
  }

  // Even on consecutive windows, where every coordinate differs.
  const auto Omega8 = extend(lookup("Omega"), 8);
  const auto w7 = consecutive(7, 2), w8 = consecutive(8, 2), w1 = consecutive(1, 2);
  const double direct = dist_tuple(ClassTag::G, Omega8, MeanKind::HM, w7, w8);
  const double detour = dist_tuple(ClassTag::G, Omega8, MeanKind::HM, w7, w1) +
                        dist_tuple(ClassTag::G, Omega8, MeanKind::HM, w1, w8);
  CHECK(direct == doctest::Approx(24.0 / 7.0));
  CHECK(detour == doctest::Approx(3.1));
  CHECK(direct > detour);
}
