#include "seqmetric/preorders.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "seqmetric/errors.hpp"

namespace seqmetric {

bool keys_tie(double a, double b) {
  if (a == b) return true;  // covers two -infinity keys
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

Orientation orientation(ClassTag tag) {
  return tag == ClassTag::T || tag == ClassTag::T0 ? Orientation::Descending
                                                   : Orientation::Ascending;
}

namespace {

bool precedes(Orientation o, double kx, double ky) {
  if (keys_tie(kx, ky)) return true;
  return o == Orientation::Ascending ? kx < ky : kx > ky;
}

}  // namespace

bool compare(const PreorderSpec& spec, std::int64_t x, std::int64_t y) {
  const auto& ms = spec.metric;
  return precedes(spec.orientation(), compare_key(ms.ext, ms.window, ms.kind, x),
                  compare_key(ms.ext, ms.window, ms.kind, y));
}

PreorderMatrix::PreorderMatrix(std::int64_t modulus, std::vector<char> cells)
    : modulus_(modulus), cells_(std::move(cells)) {
  if (static_cast<std::int64_t>(cells_.size()) != modulus_ * modulus_) {
    throw DomainError("preorder matrix must be n x n");
  }
}

bool PreorderMatrix::is_reflexive() const {
  for (std::int64_t x = 1; x <= modulus_; ++x) {
    if (!(*this)(x, x)) return false;
  }
  return true;
}

bool PreorderMatrix::is_transitive() const {
  for (std::int64_t x = 1; x <= modulus_; ++x) {
    for (std::int64_t y = 1; y <= modulus_; ++y) {
      if (!(*this)(x, y)) continue;
      for (std::int64_t z = 1; z <= modulus_; ++z) {
        if ((*this)(y, z) && !(*this)(x, z)) return false;
      }
    }
  }
  return true;
}

bool PreorderMatrix::is_total() const {
  for (std::int64_t x = 1; x <= modulus_; ++x) {
    for (std::int64_t y = 1; y <= modulus_; ++y) {
      if (!(*this)(x, y) && !(*this)(y, x)) return false;
    }
  }
  return true;
}

std::string PreorderMatrix::to_csv() const {
  std::ostringstream out;
  out << "x\\y";
  for (std::int64_t y = 1; y <= modulus_; ++y) out << ',' << y;
  out << '\n';
  for (std::int64_t x = 1; x <= modulus_; ++x) {
    out << x;
    for (std::int64_t y = 1; y <= modulus_; ++y) out << ',' << ((*this)(x, y) ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

PreorderMatrix matrix(const PreorderSpec& spec) {
  const auto& ms = spec.metric;
  const auto n = ms.ext.modulus();
  std::vector<double> keys;
  keys.reserve(static_cast<std::size_t>(n));
  for (std::int64_t x = 1; x <= n; ++x) keys.push_back(compare_key(ms.ext, ms.window, ms.kind, x));
  std::vector<char> cells(static_cast<std::size_t>(n * n));
  for (std::size_t x = 0; x < keys.size(); ++x) {
    for (std::size_t y = 0; y < keys.size(); ++y) {
      cells[x * keys.size() + y] = precedes(spec.orientation(), keys[x], keys[y]) ? 1 : 0;
    }
  }
  return PreorderMatrix(n, std::move(cells));
}

std::string PreorderLabel::str() const {
  const char name = member == TripleMember::F ? 'f' : member == TripleMember::G ? 'g' : 'h';
  return {name, symbol(kind)};
}

ClassTag PreorderLabel::class_tag() const {
  switch (member) {
    case TripleMember::F: return ClassTag::G;
    case TripleMember::G: return ClassTag::Q;
    case TripleMember::H: return ClassTag::T;
  }
  return ClassTag::G;
}

PreorderLabel parse_label(std::string_view text) {
  const std::string_view members = "fgh";
  const std::string_view kinds = "+*H";
  if (text.size() == 2 && members.find(text[0]) != std::string_view::npos &&
      kinds.find(text[1]) != std::string_view::npos) {
    return {static_cast<TripleMember>(members.find(text[0])),
            kAllMeanKinds[kinds.find(text[1])]};
  }
  throw ConfigError("bad preorder label '" + std::string(text) +
                    "' (expected one of f+ f* fH g+ g* gH h+ h* hH)");
}

const std::vector<PreorderLabel>& all_labels() {
  static const std::vector<PreorderLabel> labels = [] {
    std::vector<PreorderLabel> out;
    for (auto who : {TripleMember::F, TripleMember::G, TripleMember::H}) {
      for (auto kind : kAllMeanKinds) out.push_back({who, kind});
    }
    return out;
  }();
  return labels;
}

const ArithmeticFunction& member(const FunctionTriple& triple, TripleMember which) {
  switch (which) {
    case TripleMember::F: return triple.f;
    case TripleMember::G: return triple.g;
    case TripleMember::H: return triple.h;
  }
  return triple.f;
}

PreorderSpec label_spec(const FunctionTriple& triple, PreorderLabel label, std::int64_t n,
                        int m) {
  return PreorderSpec{
      make_metric_spec(label.class_tag(), extend(member(triple, label.member), n), m, label.kind)};
}

nlohmann::ordered_json PreorderPartition::to_json() const {
  nlohmann::ordered_json blocks_json = nlohmann::ordered_json::array();
  for (const auto& block : blocks) {
    auto names = nlohmann::ordered_json::array();
    for (const auto& label : block) names.push_back(label.str());
    blocks_json.push_back(names);
  }
  nlohmann::ordered_json j;
  j["blocks"] = blocks_json;
  return j;
}

bool PreorderPartition::same_block(PreorderLabel a, PreorderLabel b) const {
  for (const auto& block : blocks) {
    const bool has_a = std::find(block.begin(), block.end(), a) != block.end();
    const bool has_b = std::find(block.begin(), block.end(), b) != block.end();
    if (has_a || has_b) return has_a && has_b;
  }
  return false;
}

const std::vector<std::vector<PreorderLabel>>& guaranteed_groups() {
  static const std::vector<std::vector<PreorderLabel>> groups = {
      {parse_label("f+"), parse_label("g*"), parse_label("h*")},
      {parse_label("g+"), parse_label("hH")},
      {parse_label("h+"), parse_label("gH")},
  };
  return groups;
}

PreorderPartition partition(const FunctionTriple& triple, std::int64_t n, int m) {
  const auto& labels = all_labels();
  std::vector<PreorderMatrix> matrices;
  matrices.reserve(labels.size());
  for (const auto& label : labels) matrices.push_back(matrix(label_spec(triple, label, n, m)));

  PreorderPartition result;
  std::vector<std::size_t> representative;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(representative.begin(), representative.end(),
                           [&](std::size_t r) { return matrices[r] == matrices[i]; });
    if (it == representative.end()) {
      representative.push_back(i);
      result.blocks.push_back({labels[i]});
    } else {
      result.blocks[static_cast<std::size_t>(it - representative.begin())].push_back(labels[i]);
    }
  }

  for (const auto& group : guaranteed_groups()) {
    for (const auto& label : group) {
      if (!result.same_block(group.front(), label)) {
        throw InternalConsistencyError("preorders " + group.front().str() + " and " +
                                       label.str() + " differ for " + triple.f.name() +
                                       " with n=" + std::to_string(n) +
                                       ", m=" + std::to_string(m));
      }
    }
  }
  return result;
}

bool persistence_check(const FunctionTriple& triple, std::int64_t n, int m, std::int64_t k,
                       std::int64_t x, std::int64_t y, PreorderLabel label1,
                       PreorderLabel label2) {
  if (m < 1 || m > n) throw DomainError("persistence_check: need 1 <= m <= n");
  if (k < n) throw DomainError("persistence_check: k must be >= n");
  const auto last = n - m + 1;
  if (x < 1 || x > last || y < 1 || y > last) {
    throw DomainError("persistence_check: positions must lie in 1.." + std::to_string(last));
  }
  const auto first1 = compare(label_spec(triple, label1, n, m), x, y);
  const auto first2 = compare(label_spec(triple, label2, n, m), x, y);
  if (first1 == first2) return true;
  const auto later1 = compare(label_spec(triple, label1, k, m), x, y);
  const auto later2 = compare(label_spec(triple, label2, k, m), x, y);
  return later1 == first1 && later2 == first2;
}

ExtremaReport extrema(const ModExtended& ext, int m, MeanKind kind) {
  const auto p = profile(ext, m, kind);
  const auto values = p.values();
  const double hi = *std::max_element(values.begin(), values.end());
  const double lo = *std::min_element(values.begin(), values.end());
  ExtremaReport report{kind, m, {}, {}, hi, lo};
  for (std::int64_t x = 1; x <= p.modulus(); ++x) {
    if (keys_tie(p.at(x), hi)) report.argmax.push_back(x);
    if (keys_tie(p.at(x), lo)) report.argmin.push_back(x);
  }
  return report;
}

DualityReport duality_check(const ModExtended& ext, int m) {
  const auto n = ext.modulus();
  if (m < 1 || m >= n) {
    throw DomainError("duality_check: need 1 <= m < n, got m=" + std::to_string(m) +
                      ", n=" + std::to_string(n));
  }
  const auto short_window = extrema(ext, m, MeanKind::AM);
  const auto long_window = extrema(ext, static_cast<int>(n - m), MeanKind::AM);
  auto contains = [](const std::vector<std::int64_t>& v, std::int64_t x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };

  DualityReport report;
  report.holds = true;
  for (auto x0 : short_window.argmax) {
    const auto image = ext.residue(x0 + m);
    report.max_to_min.emplace_back(x0, image);
    report.holds = report.holds && contains(long_window.argmin, image);
  }
  for (auto x1 : short_window.argmin) {
    const auto image = ext.residue(x1 + m);
    report.min_to_max.emplace_back(x1, image);
    report.holds = report.holds && contains(long_window.argmax, image);
  }
  return report;
}

}  // namespace seqmetric
