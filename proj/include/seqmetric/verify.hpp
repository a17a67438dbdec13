#pragma once

// Seeded verification suites that exercise the invariants of every module.
// Each suite counts individual checks and keeps the first failure witness.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "seqmetric/golden.hpp"
#include "seqmetric/preorders.hpp"

namespace seqmetric {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure = {};
  std::string summary = {};

  bool passed() const { return failures == 0 && checks > 0; }
  void record(bool ok, const std::string& witness);
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::filesystem::path golden_dir = default_golden_dir();
};

/// Re-expresses a base function in the requested range class via the
/// standard transforms (e.g. g - 1 for a Q function asked as G, 1/g for a Q
/// function asked as T). nullopt when no transform applies.
std::optional<ModExtended> as_class(const ArithmeticFunction& f, ClassTag tag, std::int64_t n);

/// Identity, symmetry and triangle inequality of dist_z, dist_sci and the AM
/// dist_tuple on exhaustive triples over Z_n. GM/HM tuple distances are run
/// too, but their triangle failures are only counted in the summary.
SuiteResult verify_axioms(const std::vector<std::string>& functions,
                          const std::vector<std::int64_t>& moduli, const std::vector<int>& windows,
                          std::uint64_t seed);

/// Additivity of AM, superadditivity of GM and HM, and the mean chain
/// min <= HM <= GM <= AM <= max, on `trials` random inputs per kind.
SuiteResult verify_means(std::uint64_t seed, std::size_t trials = 1000, int max_window = 8);

/// Cell identity of the matrices inside each guaranteed group on random
/// (base, n, m) configurations.
SuiteResult verify_groups(std::uint64_t seed, std::size_t configs = 50, std::int64_t max_n = 30,
                          int max_m = 6);

SuiteResult verify_tables(const std::filesystem::path& golden_dir);

/// Extrema duality of arithmetic moving averages of orders m and n-m, and the
/// underlying identity (n-m) MA_{n-m}(x+m) = n * mean - m MA_m(x).
SuiteResult verify_duality(std::int64_t max_n = 30);

/// Round trip of reverse_geometric on random valid targets, plus the
/// harmonic counterexample f(2)=4, f(3)=1, f(4)=4.
SuiteResult verify_reverse_gm(std::uint64_t seed, std::size_t targets = 20);

/// Tuple versus centred pseudometrics of G-class functions on all window
/// pairs, and agreement of the induced orders.
SuiteResult verify_compressed(std::int64_t max_n = 12, int max_m = 4);

/// Disagreements between preorders at positions <= n-m+1 persist for every
/// larger modulus.
SuiteResult verify_persistence(const std::string& function, std::int64_t n, int m,
                               std::int64_t max_k);

/// Harmonic-reversal reciprocals 1/r(2), ..., 1/r(hi+1) for m = 2 seeded with
/// r(2) = seed, following 1/r(x+1) = 2/f(x) - 1/r(x). Negative entries mean
/// no nonnegative inverse exists for that seed.
std::vector<double> harmonic_reversal_reciprocals(const IntervalFunction& target, double seed);

const std::vector<std::string>& suite_names();

/// Runs one named suite with its default configuration; "all" runs every
/// suite. Throws ConfigError for unknown names.
std::vector<SuiteResult> run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace seqmetric
