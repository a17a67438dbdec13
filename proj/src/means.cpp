#include "seqmetric/means.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "seqmetric/errors.hpp"

namespace seqmetric {

std::string_view to_string(MeanKind kind) {
  switch (kind) {
    case MeanKind::AM: return "AM";
    case MeanKind::GM: return "GM";
    case MeanKind::HM: return "HM";
  }
  return "AM";
}

char symbol(MeanKind kind) {
  switch (kind) {
    case MeanKind::AM: return '+';
    case MeanKind::GM: return '*';
    case MeanKind::HM: return 'H';
  }
  return '+';
}

MeanKind parse_mean_kind(std::string_view text) {
  std::string upper(text);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "AM" || upper == "+") return MeanKind::AM;
  if (upper == "GM" || upper == "*") return MeanKind::GM;
  if (upper == "HM" || upper == "H") return MeanKind::HM;
  throw ConfigError("unknown mean kind '" + std::string(text) + "'");
}

namespace {

void validate(std::span<const double> values) {
  if (values.empty()) throw DomainError("mean of an empty list");
  for (double v : values) {
    if (!(v >= 0.0)) throw DomainError("mean of a negative or NaN value");
  }
}

bool has_zero(std::span<const double> values) {
  return std::find(values.begin(), values.end(), 0.0) != values.end();
}

double mean_of_logs(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += std::log(v);
  return sum / static_cast<double>(values.size());
}

}  // namespace

double mean(MeanKind kind, std::span<const double> values) {
  validate(values);
  const auto m = static_cast<double>(values.size());
  switch (kind) {
    case MeanKind::AM: {
      double sum = 0.0;
      for (double v : values) sum += v;
      return sum / m;
    }
    case MeanKind::GM: {
      if (has_zero(values)) return 0.0;
      if (values.size() < 4) {
        double product = 1.0;
        for (double v : values) product *= v;
        return std::pow(product, 1.0 / m);
      }
      return std::exp(mean_of_logs(values));
    }
    case MeanKind::HM: {
      if (has_zero(values)) return 0.0;
      double sum = 0.0;
      for (double v : values) sum += 1.0 / v;
      return m / sum;
    }
  }
  return 0.0;
}

double mean_key(MeanKind kind, std::span<const double> values) {
  if (kind != MeanKind::GM) return mean(kind, values);
  validate(values);
  if (has_zero(values)) return -std::numeric_limits<double>::infinity();
  return mean_of_logs(values);
}

std::vector<double> window(const ModExtended& ext, int m, std::int64_t x) {
  if (m < 1) throw DomainError("window length must be >= 1, got " + std::to_string(m));
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) values.push_back(ext(x + i));
  return values;
}

double moving_average(const ModExtended& ext, int m, MeanKind kind, std::int64_t x) {
  return mean(kind, window(ext, m, x));
}

double compare_key(const ModExtended& ext, int m, MeanKind kind, std::int64_t x) {
  return mean_key(kind, window(ext, m, x));
}

MAProfile::MAProfile(std::int64_t modulus, int window, MeanKind kind,
                     std::vector<double> values)
    : modulus_(modulus), window_(window), kind_(kind), values_(std::move(values)) {
  if (static_cast<std::int64_t>(values_.size()) != modulus_) {
    throw DomainError("profile must hold one value per residue");
  }
}

double MAProfile::at(std::int64_t x) const {
  const auto r = ((x % modulus_) + modulus_ - 1) % modulus_;
  return values_[static_cast<std::size_t>(r)];
}

MAProfile profile(const ModExtended& ext, int m, MeanKind kind) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(ext.modulus()));
  for (std::int64_t x = 1; x <= ext.modulus(); ++x) {
    values.push_back(moving_average(ext, m, kind, x));
  }
  return MAProfile(ext.modulus(), m, kind, std::move(values));
}

std::string format_fixed(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  double rounded = std::floor(value * scale + 0.5) / scale;
  if (rounded == 0.0) rounded = 0.0;  // no "-0.0000"
  std::ostringstream out;
  out << std::fixed << std::setprecision(decimals) << rounded;
  return out.str();
}

std::string to_csv(const MAProfile& p, int decimals) {
  std::ostringstream out;
  out << "x,value\n";
  for (std::int64_t x = 1; x <= p.modulus(); ++x) {
    out << x << ',' << format_fixed(p.at(x), decimals) << '\n';
  }
  return out.str();
}

nlohmann::ordered_json to_json(const MAProfile& p) {
  nlohmann::ordered_json j;
  j["modulus"] = p.modulus();
  j["window"] = p.window();
  j["kind"] = std::string(to_string(p.kind()));
  j["values"] = std::vector<double>(p.values().begin(), p.values().end());
  return j;
}

double IntervalFunction::at(std::int64_t x) const {
  if (!contains(x)) {
    throw DomainError("x=" + std::to_string(x) + " outside [" + std::to_string(lo) +
                      ", " + std::to_string(hi()) + "]");
  }
  return values[static_cast<std::size_t>(x - lo)];
}

IntervalFunction moving_average(const IntervalFunction& f, int m, MeanKind kind) {
  if (m < 1) throw DomainError("window length must be >= 1");
  IntervalFunction out{f.lo, {}};
  if (static_cast<std::int64_t>(f.values.size()) < m) return out;
  for (std::size_t i = 0; i + static_cast<std::size_t>(m) <= f.values.size(); ++i) {
    out.values.push_back(mean(kind, std::span(f.values).subspan(i, m)));
  }
  return out;
}

IntervalFunction reverse_geometric(const IntervalFunction& target, int m,
                                   std::optional<std::vector<double>> seeds_y,
                                   std::optional<std::vector<double>> seeds_z) {
  if (m < 1) throw DomainError("reverse_geometric: m must be >= 1");
  const std::int64_t band_lo = 2 - m;
  if (target.lo > band_lo || target.hi() < 1) {
    throw DomainError("reverse_geometric: target must cover [" + std::to_string(band_lo) +
                      ", 1]");
  }
  for (std::int64_t x = target.lo; x <= target.hi(); ++x) {
    const double v = target.at(x);
    const bool in_band = x >= band_lo && x <= 1;
    if (in_band && v != 0.0) {
      throw DomainError("reverse_geometric: target must vanish at x=" + std::to_string(x));
    }
    if (!in_band && !(v > 0.0 && std::isfinite(v))) {
      throw DomainError("reverse_geometric: target must be positive at x=" +
                        std::to_string(x));
    }
  }
  if (m == 1) return target;

  const auto seeds = static_cast<std::size_t>(m - 1);
  auto y = seeds_y.value_or(std::vector<double>(seeds, 1.0));
  auto z = seeds_z.value_or(std::vector<double>(seeds, 1.0));
  for (const auto* s : {&y, &z}) {
    if (s->size() != seeds) throw DomainError("reverse_geometric: expected m-1 seeds");
    for (double v : *s) {
      if (!(v > 0.0)) throw DomainError("reverse_geometric: seeds must be positive");
    }
  }

  const auto f = [&](std::int64_t x) { return target.at(x); };
  const double mm = m;
  IntervalFunction r{target.lo, std::vector<double>(target.values.size() + seeds, 0.0)};
  auto set = [&](std::int64_t x, double v) { r.values[static_cast<std::size_t>(x - r.lo)] = v; };
  const auto hi = r.hi();

  // Forward: r(1) = 0, r(2..m) = y, r(m+1) = f(2)^m / prod(y),
  // r(m+i) = (f(i+1)/f(i))^m r(i) for i > 1.
  set(1, 0.0);
  for (std::int64_t i = 2; i <= std::min<std::int64_t>(m, hi); ++i) {
    set(i, y[static_cast<std::size_t>(i - 2)]);
  }
  if (m + 1 <= hi) {
    double product = 1.0;
    for (double v : y) product *= v;
    set(m + 1, std::pow(f(2), mm) / product);
  }
  for (std::int64_t i = 2; m + i <= hi; ++i) {
    set(m + i, std::pow(f(i + 1) / f(i), mm) * r.at(i));
  }

  // Backward: r(-m+2..0) = z, r(-m+1) = f(-m+1)^m / prod(z),
  // r(-m+i) = (f(-m+i)/f(-m+i+1))^m r(i) for i < 1.
  for (std::int64_t i = band_lo; i <= 0; ++i) {
    set(i, z[static_cast<std::size_t>(i - band_lo)]);
  }
  if (1 - m >= r.lo) {
    double product = 1.0;
    for (double v : z) product *= v;
    set(1 - m, std::pow(f(1 - m), mm) / product);
  }
  for (std::int64_t i = 0; -m + i >= r.lo; --i) {
    set(-m + i, std::pow(f(-m + i) / f(-m + i + 1), mm) * r.at(i));
  }
  return r;
}

}  // namespace seqmetric
