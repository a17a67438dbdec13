#pragma once

// Pythagorean means, moving averages over forward windows (x, ..., x+m-1)
// of extended functions, and the constructive inverse of the moving
// geometric average.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "seqmetric/extension.hpp"

namespace seqmetric {

enum class MeanKind { AM, GM, HM };

inline constexpr MeanKind kAllMeanKinds[] = {MeanKind::AM, MeanKind::GM, MeanKind::HM};

/// "AM", "GM", "HM"
std::string_view to_string(MeanKind kind);
/// '+', '*', 'H' as used in preorder labels.
char symbol(MeanKind kind);
/// Accepts AM/GM/HM (any case) and the symbols +, *, H.
MeanKind parse_mean_kind(std::string_view text);

/// AM = sum/m; GM = product^(1/m), 0 if any value is 0; HM = m / sum(1/v),
/// 0 if any value is 0. Throws DomainError on empty input or a negative value.
///
/// GM uses the literal product for fewer than 4 values and exp(mean(log))
/// otherwise.
double mean(MeanKind kind, std::span<const double> values);

/// Monotone proxy of mean(): AM and HM return the mean itself, GM the mean of
/// logs (or -infinity when a value is 0).
double mean_key(MeanKind kind, std::span<const double> values);

/// Window values ext(x), ..., ext(x+m-1). Throws DomainError for m < 1.
std::vector<double> window(const ModExtended& ext, int m, std::int64_t x);

double moving_average(const ModExtended& ext, int m, MeanKind kind, std::int64_t x);

double compare_key(const ModExtended& ext, int m, MeanKind kind, std::int64_t x);

/// Moving averages at x = 1..n of an n-periodic extension.
class MAProfile {
 public:
  MAProfile(std::int64_t modulus, int window, MeanKind kind, std::vector<double> values);

  std::int64_t modulus() const { return modulus_; }
  int window() const { return window_; }
  MeanKind kind() const { return kind_; }
  std::span<const double> values() const { return values_; }

  /// Periodic access for any integer x.
  double at(std::int64_t x) const;

 private:
  std::int64_t modulus_;
  int window_;
  MeanKind kind_;
  std::vector<double> values_;
};

MAProfile profile(const ModExtended& ext, int m, MeanKind kind);

/// Half-up rounding to `decimals` places, formatted with exactly that many
/// decimals ("0.4167").
std::string format_fixed(double value, int decimals);

/// "x,value" header plus one row per residue, rounded for display.
std::string to_csv(const MAProfile& p, int decimals = 4);

/// {"modulus":..,"window":..,"kind":..,"values":[..]} at full precision.
nlohmann::ordered_json to_json(const MAProfile& p);

/// Real values on the integer interval [lo, lo + size - 1].
struct IntervalFunction {
  std::int64_t lo = 0;
  std::vector<double> values;

  std::int64_t hi() const { return lo + static_cast<std::int64_t>(values.size()) - 1; }
  bool contains(std::int64_t x) const { return x >= lo && x <= hi(); }
  /// Throws DomainError outside [lo, hi].
  double at(std::int64_t x) const;
};

/// Moving averages of an interval function over [lo, hi - m + 1].
IntervalFunction moving_average(const IntervalFunction& f, int m, MeanKind kind);

/// Builds r with r(1) = 0 whose moving geometric average of order m equals
/// `target` on its whole interval. The target must vanish exactly on
/// -m+2..1, be positive elsewhere, and cover at least [-m+2, 1].
///
/// seeds_y are r(2..m), seeds_z are r(-m+2..0), each m-1 positive values in
/// ascending index order; omitted seeds default to 1. The result covers
/// [target.lo, target.hi + m - 1].
IntervalFunction reverse_geometric(const IntervalFunction& target, int m,
                                   std::optional<std::vector<double>> seeds_y = std::nullopt,
                                   std::optional<std::vector<double>> seeds_z = std::nullopt);

}  // namespace seqmetric
