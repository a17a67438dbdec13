#include "seqmetric/metrics.hpp"

#include <sstream>

#include "seqmetric/errors.hpp"

namespace seqmetric {

namespace {

enum class Shape { Generating, Lower, Upper };

Shape shape_of(ClassTag tag) {
  switch (tag) {
    case ClassTag::G:
    case ClassTag::G1: return Shape::Generating;
    case ClassTag::Q: return Shape::Lower;
    case ClassTag::T:
    case ClassTag::T0: return Shape::Upper;
  }
  return Shape::Generating;
}

void require_tag(ClassTag tag, const ModExtended& ext) {
  if (!ext.has_tag(tag)) {
    throw DomainError(ext.label() + " does not satisfy class " + std::string(to_string(tag)));
  }
}

void require_same_length(std::span<const std::int64_t> xs, std::span<const std::int64_t> ys) {
  if (xs.size() != ys.size()) {
    throw DomainError("tuple lengths differ: " + std::to_string(xs.size()) + " vs " +
                      std::to_string(ys.size()));
  }
  if (xs.empty()) throw DomainError("tuples must have length >= 1");
}

double centred_sum(Shape shape, double fx, double fy) {
  switch (shape) {
    case Shape::Generating: return fx + fy;
    case Shape::Lower: return fx + fy - 2.0;
    case Shape::Upper: return 2.0 - fx - fy;
  }
  return 0.0;
}

}  // namespace

MetricSpec make_metric_spec(ClassTag tag, ModExtended ext, int window, MeanKind kind) {
  require_tag(tag, ext);
  if (window < 1) throw DomainError("window must be >= 1");
  return MetricSpec{tag, std::move(ext), window, kind};
}

double dist_z(ClassTag tag, const ModExtended& ext, std::int64_t x, std::int64_t y) {
  require_tag(tag, ext);
  if (x == y) return 0.0;
  return centred_sum(shape_of(tag), ext(x), ext(y));
}

double dist_tuple(ClassTag tag, const ModExtended& ext, MeanKind kind,
                  std::span<const std::int64_t> xs, std::span<const std::int64_t> ys) {
  require_same_length(xs, ys);
  std::vector<double> distances;
  distances.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) distances.push_back(dist_z(tag, ext, xs[i], ys[i]));
  return mean(kind, distances);
}

double centred_value(const ModExtended& ext, MeanKind kind, std::span<const std::int64_t> xs) {
  std::vector<double> values;
  values.reserve(xs.size());
  for (auto x : xs) values.push_back(ext(x));
  return mean(kind, values);
}

double dist_centred(ClassTag tag, const ModExtended& ext, MeanKind kind,
                    std::span<const std::int64_t> xs, std::span<const std::int64_t> ys) {
  require_same_length(xs, ys);
  require_tag(tag, ext);
  if (std::equal(xs.begin(), xs.end(), ys.begin())) return 0.0;
  return centred_sum(shape_of(tag), centred_value(ext, kind, xs), centred_value(ext, kind, ys));
}

std::vector<std::int64_t> consecutive(std::int64_t x, int m) {
  if (m < 1) throw DomainError("window must be >= 1");
  std::vector<std::int64_t> w(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) w[static_cast<std::size_t>(i)] = x + i;
  return w;
}

double dist_sci(const MetricSpec& spec, std::int64_t x, std::int64_t y) {
  if (x == y) return 0.0;
  require_tag(spec.class_tag, spec.ext);
  // Distinct windows; their centred values are the moving averages.
  return centred_sum(shape_of(spec.class_tag),
                     moving_average(spec.ext, spec.window, spec.kind, x),
                     moving_average(spec.ext, spec.window, spec.kind, y));
}

CompressedVerdict compressed_relation_check(const ModExtended& ext, MeanKind kind,
                                            std::span<const std::int64_t> xs,
                                            std::span<const std::int64_t> ys) {
  require_same_length(xs, ys);
  std::size_t equal = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) equal += xs[i] == ys[i] ? 1 : 0;
  if (equal != 0 && equal != xs.size()) {
    throw PreconditionError("coordinates must be all equal or all different");
  }
  CompressedVerdict v;
  v.tuple = dist_tuple(ClassTag::G, ext, kind, xs, ys);
  v.centred = dist_centred(ClassTag::G, ext, kind, xs, ys);
  if (kind == MeanKind::AM) {
    v.holds = std::abs(v.tuple - v.centred) <=
              1e-12 * std::max({1.0, std::abs(v.tuple), std::abs(v.centred)});
  } else {
    v.holds = leq_with_slack(v.centred, v.tuple);
  }
  return v;
}

std::string describe(const AxiomViolation& v) {
  std::ostringstream out;
  out.precision(17);
  switch (v.kind) {
    case AxiomViolation::Kind::Identity:
      out << "identity: d(#" << v.a << ", #" << v.a << ") = " << v.lhs;
      break;
    case AxiomViolation::Kind::Symmetry:
      out << "symmetry: d(#" << v.a << ", #" << v.b << ") = " << v.lhs << " but d(#" << v.b
          << ", #" << v.a << ") = " << v.rhs;
      break;
    case AxiomViolation::Kind::Triangle:
      out << "triangle: d(#" << v.a << ", #" << v.c << ") = " << v.lhs << " > " << v.rhs
          << " via #" << v.b;
      break;
  }
  return out.str();
}

}  // namespace seqmetric
