#pragma once

// Centred pseudometrics on Z, tuple pseudometrics on Z^m built from the
// Pythagorean means of coordinate distances, centred pseudometrics on Z^m
// and on windows of consecutive integers, and a black-box axiom checker.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "seqmetric/means.hpp"

namespace seqmetric {

/// One pseudometric on windows of m consecutive integers and its preorder.
struct MetricSpec {
  ClassTag class_tag;
  ModExtended ext;
  int window;
  MeanKind kind;
};

/// Validates that the extension satisfies the class tag and window >= 1.
MetricSpec make_metric_spec(ClassTag tag, ModExtended ext, int window, MeanKind kind);

/// Centred distance on Z:
///   G  f(x) + f(y)       Q  g(x) + g(y) - 2       T  2 - h(x) - h(y)
/// and 0 for x == y. T0 behaves as T, G1 as G. Throws DomainError when the
/// extension does not satisfy the tag.
double dist_z(ClassTag tag, const ModExtended& ext, std::int64_t x, std::int64_t y);

/// Mean of the coordinate distances dist_z(x_i, y_i).
double dist_tuple(ClassTag tag, const ModExtended& ext, MeanKind kind,
                  std::span<const std::int64_t> xs, std::span<const std::int64_t> ys);

/// Kind-mean of the extension values at the coordinates of xs.
double centred_value(const ModExtended& ext, MeanKind kind, std::span<const std::int64_t> xs);

/// Centred distance on Z^m; the centre is the all-ones tuple.
double dist_centred(ClassTag tag, const ModExtended& ext, MeanKind kind,
                    std::span<const std::int64_t> xs, std::span<const std::int64_t> ys);

/// Consecutive windows (x, ..., x+m-1).
std::vector<std::int64_t> consecutive(std::int64_t x, int m);

/// dist_centred on the windows starting at x and y.
double dist_sci(const MetricSpec& spec, std::int64_t x, std::int64_t y);

struct CompressedVerdict {
  double tuple = 0.0;
  double centred = 0.0;
  /// AM: equal to 1e-12 relative; GM, HM: tuple >= centred.
  bool holds = false;
};

/// Compares the tuple and centred pseudometrics of a G-class extension.
/// Coordinates must be either all equal or all different (PreconditionError
/// otherwise).
CompressedVerdict compressed_relation_check(const ModExtended& ext, MeanKind kind,
                                            std::span<const std::int64_t> xs,
                                            std::span<const std::int64_t> ys);

/// a <= b allowing max(1e-12, 1e-9 * scale) of floating slack.
inline bool leq_with_slack(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return a <= b + std::max(1e-12, 1e-9 * scale);
}

struct AxiomViolation {
  enum class Kind { Identity, Symmetry, Triangle };
  Kind kind;
  std::size_t a, b, c;  // indices into the sample
  double lhs, rhs;

  friend bool operator<(const AxiomViolation& l, const AxiomViolation& r) {
    return std::tie(l.kind, l.a, l.b, l.c) < std::tie(r.kind, r.a, r.b, r.c);
  }
};

std::string describe(const AxiomViolation& v);

struct AxiomReport {
  std::size_t triples_checked = 0;
  std::vector<AxiomViolation> violations;  // sorted

  bool ok() const { return violations.empty(); }
  std::size_t count(AxiomViolation::Kind kind) const {
    return static_cast<std::size_t>(std::count_if(
        violations.begin(), violations.end(), [&](const auto& v) { return v.kind == kind; }));
  }
};

namespace detail {

template <typename Distance>
void check_triple(const Distance& d, std::size_t a, std::size_t b, std::size_t c,
                  AxiomReport& report) {
  const double ab = d(a, b);
  const double bc = d(b, c);
  const double ac = d(a, c);
  if (!leq_with_slack(ac, ab + bc)) {
    report.violations.push_back({AxiomViolation::Kind::Triangle, a, b, c, ac, ab + bc});
  }
  ++report.triples_checked;
}

template <typename Distance>
void check_pairs(const Distance& d, std::size_t size, AxiomReport& report) {
  for (std::size_t a = 0; a < size; ++a) {
    const double self = d(a, a);
    if (std::abs(self) > 1e-12) {
      report.violations.push_back({AxiomViolation::Kind::Identity, a, a, a, self, 0.0});
    }
    for (std::size_t b = a + 1; b < size; ++b) {
      const double ab = d(a, b);
      const double ba = d(b, a);
      if (std::abs(ab - ba) > std::max(1e-12, 1e-9 * std::max(std::abs(ab), std::abs(ba)))) {
        report.violations.push_back({AxiomViolation::Kind::Symmetry, a, b, b, ab, ba});
      }
    }
  }
}

}  // namespace detail

/// Identity and symmetry on every pair, triangle inequality on every ordered
/// triple of the sample. Distances are evaluated once into a matrix.
template <typename Point, typename Distance>
AxiomReport check_axioms_exhaustive(const Distance& distance, const std::vector<Point>& sample) {
  const std::size_t size = sample.size();
  std::vector<double> matrix(size * size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) matrix[a * size + b] = distance(sample[a], sample[b]);
  }
  const auto d = [&](std::size_t a, std::size_t b) { return matrix[a * size + b]; };
  AxiomReport report;
  detail::check_pairs(d, size, report);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      for (std::size_t c = 0; c < size; ++c) detail::check_triple(d, a, b, c, report);
    }
  }
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

/// Identity and symmetry on every pair, triangle inequality on `trials`
/// random triples drawn with the given seed.
template <typename Point, typename Distance>
AxiomReport check_axioms(const Distance& distance, const std::vector<Point>& sample,
                         std::size_t trials, std::uint64_t seed = 0) {
  AxiomReport report;
  if (sample.empty()) return report;
  const auto d = [&](std::size_t a, std::size_t b) { return distance(sample[a], sample[b]); };
  detail::check_pairs(d, sample.size(), report);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, sample.size() - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = pick(rng);
    const auto b = pick(rng);
    const auto c = pick(rng);
    detail::check_triple(d, a, b, c, report);
  }
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

}  // namespace seqmetric
