#include "seqmetric/golden.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "seqmetric/errors.hpp"
#include "seqmetric/preorders.hpp"

namespace seqmetric {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::int64_t parse_int(std::string_view text, std::string_view context) {
  try {
    std::size_t used = 0;
    const std::string s(text);
    const auto value = std::stoll(s, &used);
    if (used == s.size()) return value;
  } catch (const std::exception&) {
  }
  throw ConfigError("expected an integer in '" + std::string(context) + "'");
}

}  // namespace

std::string ColumnSpec::str() const {
  std::string s = function + "@" + std::to_string(modulus);
  if (window) s += "/" + std::to_string(*window);
  if (kind) s += "/" + std::string(to_string(*kind));
  if (tag) s += "/" + std::string(to_string(*tag));
  return s;
}

ColumnSpec parse_column(std::string_view header) {
  // Function expressions never contain '@'; everything after it is numeric.
  const auto at = header.rfind('@');
  if (at == std::string_view::npos) {
    throw ConfigError("column '" + std::string(header) + "' lacks @modulus");
  }
  ColumnSpec column;
  column.function = std::string(header.substr(0, at));
  const auto parts = split(header.substr(at + 1), '/');
  if (parts.size() != 1 && parts.size() != 3 && parts.size() != 4) {
    throw ConfigError("malformed column '" + std::string(header) + "'");
  }
  column.modulus = parse_int(parts[0], header);
  if (parts.size() >= 3) {
    column.window = static_cast<int>(parse_int(parts[1], header));
    column.kind = parse_mean_kind(parts[2]);
  }
  if (parts.size() == 4) column.tag = parse_class_tag(parts[3]);
  return column;
}

double evaluate_column(const ColumnSpec& column, std::int64_t x) {
  if (column.is_relation()) throw ConfigError("column " + column.str() + " is a relation");
  const auto ext = extend(lookup(column.function), column.modulus);
  if (!column.window) return ext(x);
  return moving_average(ext, *column.window, *column.kind, x);
}

bool evaluate_relation(const ColumnSpec& column, std::int64_t x, std::int64_t y) {
  if (!column.is_relation()) throw ConfigError("column " + column.str() + " is not a relation");
  const auto ext = extend(lookup(column.function), column.modulus);
  const PreorderSpec spec{make_metric_spec(*column.tag, ext, *column.window, *column.kind)};
  return compare(spec, x, y);
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  bool first = true;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    std::vector<std::string> cells;
    for (auto cell : split(line, ',')) cells.emplace_back(cell);
    if (first) {
      table.header = std::move(cells);
      first = false;
    } else {
      if (cells.size() != table.header.size()) {
        throw ConfigError("CSV row width does not match header");
      }
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str());
}

std::string write_csv(const CsvTable& table) {
  std::ostringstream out;
  auto row = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  };
  row(table.header);
  for (const auto& r : table.rows) row(r);
  return out.str();
}

CsvTable value_table(std::string_view function, std::int64_t n, const std::vector<int>& windows,
                     const std::vector<MeanKind>& kinds, int decimals) {
  const auto ext = extend(lookup(function), n);
  CsvTable table;
  table.header = {"x", ext.label()};
  std::vector<MAProfile> profiles;
  for (int m : windows) {
    for (auto kind : kinds) {
      profiles.push_back(profile(ext, m, kind));
      table.header.push_back(ColumnSpec{ext.base().name(), n, m, kind, std::nullopt}.str());
    }
  }
  for (std::int64_t x = 1; x <= n; ++x) {
    std::vector<std::string> cells = {std::to_string(x), format_fixed(ext(x), decimals)};
    for (const auto& p : profiles) cells.push_back(format_fixed(p.at(x), decimals));
    table.rows.push_back(std::move(cells));
  }
  return table;
}

TableComparison compare_golden(const CsvTable& golden, std::string name, double tolerance) {
  TableComparison result;
  result.name = std::move(name);
  if (golden.header.empty() || golden.header[0] != "x") {
    result.mismatches.push_back("golden table must start with an x column");
    return result;
  }
  const bool relation = golden.header.size() > 1 && golden.header[1] == "y";
  const std::size_t first_data = relation ? 2 : 1;

  for (std::size_t c = first_data; c < golden.header.size(); ++c) {
    const auto column = parse_column(golden.header[c]);
    for (const auto& row : golden.rows) {
      const auto x = parse_int(row[0], row[0]);
      ++result.cells;
      if (relation) {
        const auto y = parse_int(row[1], row[1]);
        const bool expected = row[c] == "true";
        if (row[c] != "true" && row[c] != "false") {
          result.mismatches.push_back("bad boolean '" + row[c] + "'");
          continue;
        }
        const bool actual = evaluate_relation(column, x, y);
        if (actual != expected) {
          result.mismatches.push_back(column.str() + " at (" + row[0] + "," + row[1] +
                                      "): expected " + row[c]);
        }
      } else {
        const double expected = std::stod(row[c]);
        const double actual = evaluate_column(column, x);
        const double error = std::abs(actual - expected);
        result.max_abs_error = std::max(result.max_abs_error, error);
        if (!(error <= tolerance)) {
          result.mismatches.push_back(column.str() + " at x=" + row[0] + ": expected " +
                                      row[c] + ", got " + format_fixed(actual, 6));
        }
      }
    }
  }
  return result;
}

std::filesystem::path default_golden_dir() { return SEQMETRIC_GOLDEN_DIR; }

}  // namespace seqmetric
