#pragma once

// Tables of function values, moving averages and preorder relations, in the
// CSV layout shared by the CLI output and the golden fixtures.
//
// Column headers name what they hold:
//   x, y              row positions
//   fn@n              extended base value
//   fn@n/m/KIND       moving average of order m
//   fn@n/m/KIND/TAG   preorder relation <x> <= <y> (true/false)

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqmetric/means.hpp"
#include "seqmetric/metrics.hpp"

namespace seqmetric {

struct ColumnSpec {
  std::string function;
  std::int64_t modulus = 0;
  std::optional<int> window;
  std::optional<MeanKind> kind;
  std::optional<ClassTag> tag;

  bool is_relation() const { return tag.has_value(); }
  std::string str() const;
};

/// Throws ConfigError on malformed headers.
ColumnSpec parse_column(std::string_view header);

/// Value of a base or moving-average column at x.
double evaluate_column(const ColumnSpec& column, std::int64_t x);

/// Relation column at (x, y).
bool evaluate_relation(const ColumnSpec& column, std::int64_t x, std::int64_t y);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Comma separated, header row first, LF line endings; tolerates CRLF.
CsvTable parse_csv(std::string_view text);
CsvTable read_csv(const std::filesystem::path& path);
std::string write_csv(const CsvTable& table);

/// x, base value, then one column per (window, kind), rounded half-up.
CsvTable value_table(std::string_view function, std::int64_t n, const std::vector<int>& windows,
                     const std::vector<MeanKind>& kinds, int decimals);

struct TableComparison {
  std::string name;
  std::size_t cells = 0;
  double max_abs_error = 0.0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty() && cells > 0; }
};

/// Recomputes every value column of a golden table and compares within
/// `tolerance` absolute. Relation columns are compared as exact booleans.
TableComparison compare_golden(const CsvTable& golden, std::string name,
                               double tolerance = 5e-5);

inline constexpr const char* kGoldenFiles[] = {
    "ld_n6_m2.csv",          "ld_relations_n6_m2.csv", "tau_relations_n13_m2.csv",
    "phi_n8_m3_m5.csv",      "htheta_n17_m5.csv",
};

std::filesystem::path default_golden_dir();

}  // namespace seqmetric
