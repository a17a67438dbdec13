#pragma once

// Preorders on windows of consecutive integers induced by moving averages,
// the nine preorders of a function triple and their equivalence classes,
// and extrema of moving-average profiles.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "seqmetric/metrics.hpp"

namespace seqmetric {

/// Keys a and b tie iff |a - b| <= 1e-9 * max(1, |a|, |b|). Two -infinity
/// keys tie.
bool keys_tie(double a, double b);

enum class Orientation { Ascending, Descending };

/// T-class preorders compare with >=, G and Q with <=.
Orientation orientation(ClassTag tag);

struct PreorderSpec {
  MetricSpec metric;

  Orientation orientation() const { return seqmetric::orientation(metric.class_tag); }
};

/// <x> precedes-or-equals <y>.
bool compare(const PreorderSpec& spec, std::int64_t x, std::int64_t y);

/// R[x][y] over x, y in 1..n.
class PreorderMatrix {
 public:
  PreorderMatrix(std::int64_t modulus, std::vector<char> cells);

  std::int64_t modulus() const { return modulus_; }
  /// 1-based indices in 1..n.
  bool operator()(std::int64_t x, std::int64_t y) const {
    return cells_[static_cast<std::size_t>((x - 1) * modulus_ + (y - 1))] != 0;
  }

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_total() const;

  /// Header "x\y,1,..,n", then one 0/1 row per x.
  std::string to_csv() const;

  friend bool operator==(const PreorderMatrix&, const PreorderMatrix&) = default;

 private:
  std::int64_t modulus_;
  std::vector<char> cells_;
};

/// Keys are computed once per residue; the matrix is the complete preorder
/// up to periodicity.
PreorderMatrix matrix(const PreorderSpec& spec);

enum class TripleMember { F, G, H };

/// One of the nine (function, mean) preorders of a triple: f+, f*, fH, ...
struct PreorderLabel {
  TripleMember member;
  MeanKind kind;

  std::string str() const;
  ClassTag class_tag() const;
  friend bool operator==(const PreorderLabel&, const PreorderLabel&) = default;
};

/// Throws ConfigError for anything outside {f,g,h} x {+,*,H}.
PreorderLabel parse_label(std::string_view text);

/// f+, f*, fH, g+, g*, gH, h+, h*, hH.
const std::vector<PreorderLabel>& all_labels();

const ArithmeticFunction& member(const FunctionTriple& triple, TripleMember which);

PreorderSpec label_spec(const FunctionTriple& triple, PreorderLabel label, std::int64_t n, int m);

struct PreorderPartition {
  std::vector<std::vector<PreorderLabel>> blocks;

  std::size_t size() const { return blocks.size(); }
  /// {"blocks": [["f+","g*","h*"], ...]}
  nlohmann::ordered_json to_json() const;
  bool same_block(PreorderLabel a, PreorderLabel b) const;
};

/// The three groups that coincide for every triple:
/// {f+, g*, h*}, {g+, hH}, {h+, gH}.
const std::vector<std::vector<PreorderLabel>>& guaranteed_groups();

/// Labels share a block iff their matrices over Z_n are identical. Throws
/// InternalConsistencyError if a guaranteed group is split.
PreorderPartition partition(const FunctionTriple& triple, std::int64_t n, int m);

/// If label1 and label2 disagree at (x, y) under modulus n, the same
/// disagreement must appear under modulus k. x, y in 1..n-m+1 and k >= n,
/// DomainError otherwise.
bool persistence_check(const FunctionTriple& triple, std::int64_t n, int m, std::int64_t k,
                       std::int64_t x, std::int64_t y, PreorderLabel label1,
                       PreorderLabel label2);

struct ExtremaReport {
  MeanKind kind;
  int window;
  std::vector<std::int64_t> argmax;
  std::vector<std::int64_t> argmin;
  double max;
  double min;
};

/// Scans the profile over Z_n; values tying with the extreme (keys_tie) are
/// all listed.
ExtremaReport extrema(const ModExtended& ext, int m, MeanKind kind);

struct DualityReport {
  bool holds = false;
  /// (x0, x0 + m) for every maximum x0 of the m-profile, and
  /// (x1, x1 + m) for every minimum x1, wrapped into 1..n.
  std::vector<std::pair<std::int64_t, std::int64_t>> max_to_min;
  std::vector<std::pair<std::int64_t, std::int64_t>> min_to_max;
};

/// Arithmetic moving averages of orders m and n - m: maxima of the first map
/// to minima of the second when shifted by m, and vice versa. Requires
/// 1 <= m < n (DomainError otherwise).
DualityReport duality_check(const ModExtended& ext, int m);

}  // namespace seqmetric
