#include "seqmetric/cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "seqmetric/errors.hpp"
#include "seqmetric/golden.hpp"
#include "seqmetric/verify.hpp"

namespace seqmetric {

namespace {

struct RunConfig {
  std::string function;
  std::int64_t modulus = 0;
  std::vector<int> windows;
  std::vector<std::string> kinds;
  std::string format = "csv";
  int precision = 4;
};

void add_function_options(CLI::App& cmd, RunConfig& config) {
  cmd.add_option("--fn", config.function, "registry name, e.g. ld, tau, exp(ld)")->required();
  cmd.add_option("--n", config.modulus, "modulus")->required()->check(CLI::Range(2, 10'000'000));
}

void add_window_option(CLI::App& cmd, RunConfig& config, bool repeatable) {
  auto* opt = cmd.add_option("--m", config.windows, "window length")
                  ->required()
                  ->check(CLI::PositiveNumber);
  if (!repeatable) opt->expected(1);
}

std::vector<MeanKind> requested_kinds(const RunConfig& config) {
  if (config.kinds.empty()) return {std::begin(kAllMeanKinds), std::end(kAllMeanKinds)};
  std::vector<MeanKind> kinds;
  for (const auto& k : config.kinds) kinds.push_back(parse_mean_kind(k));
  return kinds;
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

int cmd_table(const RunConfig& config, std::ostream& out) {
  const auto table =
      value_table(config.function, config.modulus, config.windows, requested_kinds(config),
                  config.precision);
  if (config.format == "csv") {
    out << write_csv(table);
    return kExitOk;
  }
  nlohmann::ordered_json j;
  j["columns"] = table.header;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    auto values = nlohmann::ordered_json::array();
    values.push_back(std::stoll(row[0]));
    for (std::size_t i = 1; i < row.size(); ++i) values.push_back(std::stod(row[i]));
    rows.push_back(values);
  }
  j["rows"] = rows;
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_preorder(const RunConfig& config, const std::string& label, std::int64_t x,
                 std::int64_t y, std::ostream& out) {
  const auto parsed = parse_label(label);
  const auto triple = triple_from(lookup(config.function));
  const auto spec = label_spec(triple, parsed, config.modulus, config.windows.front());
  out << (compare(spec, x, y) ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_classes(const RunConfig& config, std::ostream& out) {
  const auto f = lookup(config.function);
  if (!f.belongs_to(Admissible::A)) {
    throw ConfigError("classes needs an additive function (class A); " + f.name() + " is " +
                      std::string(to_string(f.admissible_class())));
  }
  const auto result = partition(build_triple(f), config.modulus, config.windows.front());
  auto j = result.to_json();
  j["count"] = result.size();
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_extrema(const RunConfig& config, std::ostream& out) {
  const auto ext = extend(lookup(config.function), config.modulus);
  for (auto kind : requested_kinds(config)) {
    const auto report = extrema(ext, config.windows.front(), kind);
    out << to_string(kind) << " m=" << report.window
        << " max=" << format_fixed(report.max, config.precision) << " argmax=" << join(report.argmax)
        << " min=" << format_fixed(report.min, config.precision) << " argmin=" << join(report.argmin)
        << '\n';
  }
  return kExitOk;
}

int cmd_dual(const RunConfig& config, std::ostream& out) {
  const auto ext = extend(lookup(config.function), config.modulus);
  const int m = config.windows.front();
  if (m >= config.modulus) {
    throw ConfigError("dual needs m < n (got m=" + std::to_string(m) +
                      ", n=" + std::to_string(config.modulus) + ")");
  }
  const auto report = duality_check(ext, m);
  for (const auto& [from, to] : report.max_to_min) {
    out << "max " << from << " -> min " << to << '\n';
  }
  for (const auto& [from, to] : report.min_to_max) {
    out << "min " << from << " -> max " << to << '\n';
  }
  out << "verdict " << (report.holds ? "true" : "false") << '\n';
  return report.holds ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const std::string& suite, const VerifyOptions& options, std::ostream& out) {
  bool all_passed = true;
  for (const auto& result : run_suite(suite, options)) {
    all_passed = all_passed && result.passed();
    out << (result.passed() ? "PASS " : "FAIL ") << result.name << ": " << result.checks
        << " checks, " << result.failures << " failures";
    if (!result.summary.empty()) out << " (" << result.summary << ")";
    out << '\n';
    if (!result.passed() && !result.first_failure.empty()) {
      out << "  first failure: " << result.first_failure << '\n';
    }
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudometrics and preorders induced by arithmetic functions extended mod n",
               "seqmetric"};
  app.require_subcommand(1);

  RunConfig config;
  std::string label;
  std::vector<std::int64_t> positions;
  std::string suite;
  VerifyOptions options;
  std::string golden_dir;

  auto* table = app.add_subcommand("table", "values and moving averages over one period");
  add_function_options(*table, config);
  add_window_option(*table, config, true);
  table->add_option("--kind", config.kinds, "AM, GM or HM (repeatable; default all)");
  table->add_option("--format", config.format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--precision", config.precision)->check(CLI::Range(1, 15));

  auto* preorder = app.add_subcommand("preorder", "is <x> before <y> under a triple preorder");
  add_function_options(*preorder, config);
  add_window_option(*preorder, config, false);
  preorder->add_option("--label", label, "f+ f* fH g+ g* gH h+ h* hH")->required();
  preorder->add_option("positions", positions, "x y")->required()->expected(2);

  auto* classes = app.add_subcommand("classes", "partition of the nine triple preorders");
  add_function_options(*classes, config);
  add_window_option(*classes, config, false);

  auto* extrema_cmd = app.add_subcommand("extrema", "extreme positions of the moving averages");
  add_function_options(*extrema_cmd, config);
  add_window_option(*extrema_cmd, config, false);
  extrema_cmd->add_option("--kind", config.kinds, "AM, GM or HM (repeatable; default all)");
  extrema_cmd->add_option("--precision", config.precision)->check(CLI::Range(1, 15));

  auto* dual = app.add_subcommand("dual", "extrema duality of AM windows m and n-m");
  add_function_options(*dual, config);
  add_window_option(*dual, config, false);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--seed", options.seed, "RNG seed");
  verify->add_option("--golden-dir", golden_dir, "directory of golden CSV tables");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table) return cmd_table(config, out);
    if (*preorder) return cmd_preorder(config, label, positions[0], positions[1], out);
    if (*classes) return cmd_classes(config, out);
    if (*extrema_cmd) return cmd_extrema(config, out);
    if (*dual) return cmd_dual(config, out);
    if (*verify) {
      if (!golden_dir.empty()) options.golden_dir = golden_dir;
      return cmd_verify(suite, options, out);
    }
  } catch (const InternalConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace seqmetric
