#include "seqmetric/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "seqmetric/errors.hpp"

namespace seqmetric {

void SuiteResult::record(bool ok, const std::string& witness) {
  ++checks;
  if (ok) return;
  if (failures == 0) first_failure = witness;
  ++failures;
}

namespace {

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string kind_str(MeanKind kind) { return std::string(to_string(kind)); }

std::string describe_config(const std::string& what, const ModExtended& ext, int m,
                            MeanKind kind) {
  std::ostringstream out;
  out << what << " " << ext.label() << " m=" << m << " " << to_string(kind);
  return out.str();
}

}  // namespace

std::optional<ModExtended> as_class(const ArithmeticFunction& f, ClassTag tag, std::int64_t n) {
  const auto base = extend(f, n);
  if (base.has_tag(tag)) return base;
  auto via = [&](TransformKind kind) -> std::optional<ModExtended> {
    try {
      auto ext = extend(transform(f, kind, n), n);
      if (ext.has_tag(tag)) return ext;
    } catch (const DomainError&) {
    }
    return std::nullopt;
  };
  switch (tag) {
    case ClassTag::G:
    case ClassTag::G1:
      if (base.has_tag(ClassTag::Q)) return via(TransformKind::ShiftDown);
      if (base.has_tag(ClassTag::T)) return via(TransformKind::OneMinus);
      break;
    case ClassTag::Q:
      if (base.has_tag(ClassTag::G)) return via(TransformKind::ShiftUp);
      if (base.has_tag(ClassTag::T0)) return via(TransformKind::Reciprocal);
      break;
    case ClassTag::T:
    case ClassTag::T0:
      if (base.has_tag(ClassTag::G)) return via(TransformKind::NegExp);
      if (base.has_tag(ClassTag::Q)) return via(TransformKind::Reciprocal);
      break;
  }
  return std::nullopt;
}

SuiteResult verify_axioms(const std::vector<std::string>& functions,
                          const std::vector<std::int64_t>& moduli, const std::vector<int>& windows,
                          std::uint64_t seed) {
  SuiteResult result{"axioms"};
  std::size_t triples = 0;
  std::size_t tuple_mean_failures = 0;
  std::mt19937_64 rng(seed);
  auto note = [&](const AxiomReport& report, const std::string& what) {
    triples += report.triples_checked;
    result.record(report.ok(), report.ok() ? "" : what + ": " + describe(report.violations.front()));
  };

  for (const auto& name : functions) {
    const auto f = lookup(name);
    for (auto n : moduli) {
      std::vector<std::int64_t> points(static_cast<std::size_t>(n));
      for (std::int64_t x = 1; x <= n; ++x) points[static_cast<std::size_t>(x - 1)] = x;
      for (auto tag : {ClassTag::G, ClassTag::Q, ClassTag::T}) {
        const auto ext = as_class(f, tag, n);
        if (!ext) {
          result.record(false, name + " has no " + std::string(to_string(tag)) + " form");
          continue;
        }
        const auto tag_name = std::string(to_string(tag));
        note(check_axioms_exhaustive(
                 [&](std::int64_t x, std::int64_t y) { return dist_z(tag, *ext, x, y); }, points),
             "dist_z " + ext->label() + " " + tag_name);

        for (int m : windows) {
          std::vector<std::vector<std::int64_t>> windows_as_tuples;
          for (auto x : points) windows_as_tuples.push_back(consecutive(x, m));
          std::uniform_int_distribution<std::int64_t> coord(1, n);
          std::vector<std::vector<std::int64_t>> random_tuples(static_cast<std::size_t>(n));
          for (auto& t : random_tuples) {
            t.resize(static_cast<std::size_t>(m));
            for (auto& c : t) c = coord(rng);
          }
          for (auto kind : kAllMeanKinds) {
            const auto spec = make_metric_spec(tag, *ext, m, kind);
            note(check_axioms_exhaustive(
                     [&](std::int64_t x, std::int64_t y) { return dist_sci(spec, x, y); }, points),
                 describe_config("dist_sci", *ext, m, kind) + " " + tag_name);
            auto tuple_distance = [&](const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b) {
              return dist_tuple(tag, *ext, kind, a, b);
            };
            const auto on_windows = check_axioms_exhaustive(tuple_distance, windows_as_tuples);
            const auto on_random = check_axioms_exhaustive(tuple_distance, random_tuples);
            if (kind == MeanKind::AM) {
              note(on_windows, describe_config("dist_tuple(windows)", *ext, m, kind) + " " + tag_name);
              note(on_random, describe_config("dist_tuple(random)", *ext, m, kind) + " " + tag_name);
            } else {
              // Coordinatewise GM/HM combinations are not pseudometrics in
              // general (a shared coordinate zeroes the distance), so their
              // violations are counted, not asserted.
              triples += on_windows.triples_checked + on_random.triples_checked;
              if (!on_windows.ok() || !on_random.ok()) ++tuple_mean_failures;
            }
          }
        }
      }
    }
  }
  result.summary = std::to_string(triples) + " triples; " + std::to_string(tuple_mean_failures) +
                   " GM/HM tuple configurations break the triangle inequality";
  return result;
}

SuiteResult verify_means(std::uint64_t seed, std::size_t trials, int max_window) {
  SuiteResult result{"means"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(1, max_window);
  std::uniform_real_distribution<double> value(0.0, 10.0);
  std::bernoulli_distribution zero(0.1);

  for (auto kind : kAllMeanKinds) {
    for (std::size_t t = 0; t < trials; ++t) {
      const auto m = static_cast<std::size_t>(length(rng));
      std::vector<double> a(m), b(m), sum(m);
      for (std::size_t i = 0; i < m; ++i) {
        a[i] = value(rng);
        b[i] = value(rng);
        // HM superadditivity is stated for strictly positive inputs.
        if (kind != MeanKind::HM && zero(rng)) a[i] = 0.0;
        if (kind != MeanKind::HM && zero(rng)) b[i] = 0.0;
        sum[i] = a[i] + b[i];
      }
      const double lhs = mean(kind, sum);
      const double rhs = mean(kind, a) + mean(kind, b);
      std::ostringstream witness;
      witness.precision(17);
      witness << kind_str(kind) << " trial " << t << ": mean(a+b)=" << lhs
              << " vs mean(a)+mean(b)=" << rhs;
      if (kind == MeanKind::AM) {
        result.record(rel_close(lhs, rhs, 1e-12), witness.str());
      } else {
        result.record(leq_with_slack(rhs, lhs), witness.str());
      }
    }
  }

  // min <= HM <= GM <= AM <= max on positive inputs.
  std::uniform_real_distribution<double> positive(1e-3, 10.0);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto m = static_cast<std::size_t>(length(rng));
    std::vector<double> v(m);
    for (auto& x : v) x = positive(rng);
    const double lo = *std::min_element(v.begin(), v.end());
    const double hi = *std::max_element(v.begin(), v.end());
    const double hm = mean(MeanKind::HM, v);
    const double gm = mean(MeanKind::GM, v);
    const double am = mean(MeanKind::AM, v);
    const bool ok = leq_with_slack(lo, hm) && leq_with_slack(hm, gm) && leq_with_slack(gm, am) &&
                    leq_with_slack(am, hi);
    result.record(ok, "mean chain violated in trial " + std::to_string(t));
  }
  result.summary = std::to_string(trials) + " trials per kind";
  return result;
}

SuiteResult verify_groups(std::uint64_t seed, std::size_t configs, std::int64_t max_n,
                          int max_m) {
  SuiteResult result{"groups"};
  const std::vector<std::string> bases = {"Omega", "omega", "ld"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_base(0, bases.size() - 1);
  std::uniform_int_distribution<std::int64_t> pick_n(2, max_n);
  std::uniform_int_distribution<int> pick_m(1, max_m);

  for (std::size_t c = 0; c < configs; ++c) {
    const auto& name = bases[pick_base(rng)];
    const auto n = pick_n(rng);
    const auto m = pick_m(rng);
    const auto triple = build_triple(lookup(name));
    for (const auto& group : guaranteed_groups()) {
      const auto reference = matrix(label_spec(triple, group.front(), n, m));
      for (std::size_t i = 1; i < group.size(); ++i) {
        const auto other = matrix(label_spec(triple, group[i], n, m));
        result.record(other == reference, name + " n=" + std::to_string(n) +
                                              " m=" + std::to_string(m) + ": " +
                                              group.front().str() + " != " + group[i].str());
      }
    }
  }
  result.summary = std::to_string(configs) + " configurations";
  return result;
}

SuiteResult verify_tables(const std::filesystem::path& golden_dir) {
  SuiteResult result{"tables"};
  std::size_t cells = 0;
  for (const char* file : kGoldenFiles) {
    try {
      const auto comparison = compare_golden(read_csv(golden_dir / file), file);
      cells += comparison.cells;
      result.record(comparison.ok(), comparison.mismatches.empty()
                                         ? std::string(file) + ": empty"
                                         : std::string(file) + ": " + comparison.mismatches.front());
    } catch (const std::exception& e) {
      result.record(false, std::string(file) + ": " + e.what());
    }
  }
  result.summary = std::to_string(std::size(kGoldenFiles)) + " golden tables, " +
                   std::to_string(cells) + " cells at 4 decimals";
  return result;
}

SuiteResult verify_duality(std::int64_t max_n) {
  SuiteResult result{"duality"};
  for (const auto& name : builtin_names()) {
    const auto f = lookup(name);
    for (std::int64_t n = 2; n <= max_n; ++n) {
      const auto ext = extend(f, n);
      double total = 0.0;
      for (double v : ext.period()) total += v;
      for (int m = 1; m < n; ++m) {
        const auto config = ext.label() + " m=" + std::to_string(m);
        result.record(duality_check(ext, m).holds, "duality " + config);
        const auto short_profile = profile(ext, m, MeanKind::AM);
        const auto long_profile = profile(ext, static_cast<int>(n - m), MeanKind::AM);
        bool identity = true;
        for (std::int64_t x = 1; x <= n; ++x) {
          const double lhs = static_cast<double>(n - m) * long_profile.at(x + m);
          const double rhs = total - m * short_profile.at(x);
          identity = identity && std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(total));
        }
        result.record(identity, "sum identity " + config);
      }
    }
  }
  result.summary = "built-ins, n <= " + std::to_string(max_n);
  return result;
}

std::vector<double> harmonic_reversal_reciprocals(const IntervalFunction& target, double seed) {
  if (!(seed > 0.0)) throw DomainError("harmonic reversal seed must be positive");
  std::vector<double> reciprocals = {1.0 / seed};
  for (std::int64_t x = 2; x <= target.hi(); ++x) {
    reciprocals.push_back(2.0 / target.at(x) - reciprocals.back());
  }
  return reciprocals;
}

SuiteResult verify_reverse_gm(std::uint64_t seed, std::size_t targets) {
  SuiteResult result{"reverse_gm"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_m(2, 5);
  std::uniform_real_distribution<double> value(0.1, 10.0);
  std::uniform_real_distribution<double> seed_value(0.5, 2.0);

  for (std::size_t t = 0; t < targets; ++t) {
    const int m = pick_m(rng);
    IntervalFunction target{2 - 2 * m, {}};
    for (std::int64_t x = target.lo; x < target.lo + 3 * m; ++x) {
      target.values.push_back(x >= 2 - m && x <= 1 ? 0.0 : value(rng));
    }
    std::vector<double> ys(static_cast<std::size_t>(m - 1)), zs(ys.size());
    for (auto& v : ys) v = seed_value(rng);
    for (auto& v : zs) v = seed_value(rng);
    const auto r = reverse_geometric(target, m, ys, zs);
    const auto rebuilt = moving_average(r, m, MeanKind::GM);
    bool ok = rebuilt.lo == target.lo && rebuilt.values.size() == target.values.size() &&
              r.at(1) == 0.0;
    for (std::size_t i = 0; ok && i < target.values.size(); ++i) {
      ok = rel_close(rebuilt.values[i], target.values[i], 1e-9);
    }
    result.record(ok, "target " + std::to_string(t) + " (m=" + std::to_string(m) + ")");
  }

  // f(2)=4, f(3)=1, f(4)=4 with m=2: a geometric inverse exists, a harmonic
  // one needs 1/r(5) = -1 - 1/r(2) < 0 whatever r(2) > 0 is chosen.
  const IntervalFunction counter{0, {0.0, 0.0, 4.0, 1.0, 4.0}};
  const auto r = reverse_geometric(counter, 2);
  const auto rebuilt = moving_average(r, 2, MeanKind::GM);
  bool round_trip = rebuilt.values.size() == counter.values.size();
  for (std::size_t i = 0; round_trip && i < counter.values.size(); ++i) {
    round_trip = rel_close(rebuilt.values[i], counter.values[i], 1e-9);
  }
  result.record(round_trip, "geometric inverse of the harmonic counterexample");
  for (double r2 : {0.01, 0.5, 1.0, 2.0, 100.0}) {
    const auto recips = harmonic_reversal_reciprocals(counter, r2);
    const double last = recips.back();  // 1/r(5)
    result.record(rel_close(last, -1.0 - 1.0 / r2, 1e-12) && last < 0.0,
                  "harmonic reversal with r(2)=" + std::to_string(r2));
  }
  result.summary = std::to_string(targets) + " random targets + harmonic counterexample";
  return result;
}

SuiteResult verify_compressed(std::int64_t max_n, int max_m) {
  SuiteResult result{"compressed"};
  const std::vector<std::string> functions = {"Omega", "omega", "ld", "logtau", "log", "theta"};
  for (const auto& name : functions) {
    const auto f = lookup(name);
    for (std::int64_t n = 2; n <= max_n; ++n) {
      const auto ext = extend(f, n);
      for (int m = 1; m <= max_m; ++m) {
        const std::vector<std::int64_t> centre(static_cast<std::size_t>(m), 1);
        for (auto kind : kAllMeanKinds) {
          const auto config = describe_config("compressed", ext, m, kind);
          std::vector<double> tuple_to_centre, centred;
          for (std::int64_t x = 1; x <= n; ++x) {
            const auto xs = consecutive(x, m);
            tuple_to_centre.push_back(dist_tuple(ClassTag::G, ext, kind, xs, centre));
            centred.push_back(centred_value(ext, kind, xs));
            for (std::int64_t y = 1; y <= n; ++y) {
              const auto v = compressed_relation_check(ext, kind, xs, consecutive(y, m));
              result.record(v.holds, config + " x=" + std::to_string(x) + " y=" + std::to_string(y));
            }
          }
          bool agree = true;
          for (std::size_t x = 0; x < centred.size(); ++x) {
            for (std::size_t y = 0; y < centred.size(); ++y) {
              const bool by_tuple = keys_tie(tuple_to_centre[x], tuple_to_centre[y]) ||
                                    tuple_to_centre[x] < tuple_to_centre[y];
              const bool by_value = keys_tie(centred[x], centred[y]) || centred[x] < centred[y];
              agree = agree && by_tuple == by_value;
            }
          }
          result.record(agree, config + ": induced orders differ");
        }
      }
    }
  }
  result.summary = "n <= " + std::to_string(max_n) + ", m <= " + std::to_string(max_m);
  return result;
}

SuiteResult verify_persistence(const std::string& function, std::int64_t n, int m,
                               std::int64_t max_k) {
  SuiteResult result{"persistence"};
  const auto triple = triple_from(lookup(function));
  const auto last = n - m + 1;
  std::size_t disagreements = 0;
  for (const auto& l1 : all_labels()) {
    for (const auto& l2 : all_labels()) {
      for (std::int64_t x = 1; x <= last; ++x) {
        for (std::int64_t y = 1; y <= last; ++y) {
          if (compare(label_spec(triple, l1, n, m), x, y) !=
              compare(label_spec(triple, l2, n, m), x, y)) {
            ++disagreements;
          }
          for (std::int64_t k = n; k <= max_k; ++k) {
            result.record(persistence_check(triple, n, m, k, x, y, l1, l2),
                          l1.str() + "/" + l2.str() + " at (" + std::to_string(x) + "," +
                              std::to_string(y) + ") k=" + std::to_string(k));
          }
        }
      }
    }
  }
  result.summary = function + " n=" + std::to_string(n) + " m=" + std::to_string(m) + ", " +
                   std::to_string(disagreements) + " disagreements followed to k=" +
                   std::to_string(max_k);
  return result;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"axioms",     "means",      "groups",
                                                 "tables",     "duality",    "reverse_gm",
                                                 "compressed", "persistence"};
  return names;
}

std::vector<SuiteResult> run_suite(const std::string& name, const VerifyOptions& options) {
  if (name == "all") {
    std::vector<SuiteResult> all;
    for (const auto& suite : suite_names()) all.push_back(run_suite(suite, options).front());
    return all;
  }
  if (name == "axioms") {
    return {verify_axioms(builtin_names(), {6, 8, 13, 17}, {1, 2, 3, 5}, options.seed)};
  }
  if (name == "means") return {verify_means(options.seed)};
  if (name == "groups") return {verify_groups(options.seed)};
  if (name == "tables") return {verify_tables(options.golden_dir)};
  if (name == "duality") return {verify_duality()};
  if (name == "reverse_gm") return {verify_reverse_gm(options.seed)};
  if (name == "compressed") return {verify_compressed()};
  if (name == "persistence") return {verify_persistence("ld", 6, 2, 12)};
  throw ConfigError("unknown suite '" + name + "'");
}

}  // namespace seqmetric
