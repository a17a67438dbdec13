#pragma once

// Base arithmetic functions on the positive integers, their classification
// into admissible sets, and the transforms that build function triples.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seqmetric {

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime powers ordered by ascending prime. Empty for 1.
using Factorization = std::vector<PrimePower>;

inline constexpr std::int64_t kMaxFactorizable = 1'000'000'000;
inline constexpr std::int64_t kMaxTheta = 10'000'000;
inline constexpr std::int64_t kDefaultProbeRange = 1000;

/// Trial division against a sieved table of primes up to sqrt(10^9).
/// Throws DomainError outside 1..kMaxFactorizable.
Factorization factorize(std::int64_t x);

/// Ascending primes p <= limit (limit <= kMaxTheta).
std::span<const std::int64_t> primes_up_to(std::int64_t limit);

/// Admissible sets: A additive >= 0; M multiplicative >= 1;
/// I multiplicative in [0,1]; I0 multiplicative in (0,1].
/// I0 is reported in preference to I when the function is strictly positive.
enum class Admissible { A, M, I, I0, Generic };

std::string_view to_string(Admissible cls);

/// Range classes of a function on a centred carrier.
///   G   f(1) = 0, f >= 0          (generating)
///   Q   g(1) = 1, g >= 1          (lower supplement)
///   T   h(1) = 1, 0 <= h <= 1     (upper supplement)
///   T0  T and h > 0
///   G1  G and f <= 1
enum class ClassTag { G, Q, T, T0, G1 };

std::string_view to_string(ClassTag tag);
ClassTag parse_class_tag(std::string_view text);

/// Tests the range condition of `tag` on values[0] = f(1), values[1] = f(2), ...
bool satisfies(std::span<const double> values, ClassTag tag);

/// A named function N -> R>=0. Immutable; copies share the evaluator.
class ArithmeticFunction {
 public:
  using Evaluator = std::function<double(std::int64_t)>;

  ArithmeticFunction(std::string name, Evaluator eval, bool additive,
                     bool multiplicative,
                     Admissible cls = Admissible::Generic);

  const std::string& name() const { return name_; }
  bool is_additive() const { return additive_; }
  bool is_multiplicative() const { return multiplicative_; }
  Admissible admissible_class() const { return class_; }

  /// True when the class is `cls` or a subset of it (I0 belongs to I).
  bool belongs_to(Admissible cls) const;

  /// Throws DomainError for x < 1.
  double operator()(std::int64_t x) const;

  ArithmeticFunction with_class(Admissible cls) const;

 private:
  std::string name_;
  std::shared_ptr<const Evaluator> eval_;
  bool additive_;
  bool multiplicative_;
  Admissible class_;
};

double eval_base(const ArithmeticFunction& f, std::int64_t x);

/// Assigns the admissible class by probing 1..probe_range. Degrades to
/// Generic on any violation; never throws for probe_range >= 2.
ArithmeticFunction classify(const ArithmeticFunction& f,
                            std::int64_t probe_range = kDefaultProbeRange);

enum class TransformKind {
  ShiftUp,     // f + 1
  ShiftDown,   // g - 1
  OneMinus,    // 1 - f
  Exp,         // e^f
  NegExp,      // e^-f
  Digamma,     // e^(g-1)
  Reciprocal,  // 1/g
  Log,         // log g, g >= 1
  NegLog,      // -log h, 0 < h <= 1
};

std::string_view to_string(TransformKind kind);
TransformKind parse_transform_kind(std::string_view text);

/// Builds the transformed function and reclassifies it. Compatibility of the
/// input range is probed on 1..probe_range; an incompatible input throws
/// DomainError.
ArithmeticFunction transform(const ArithmeticFunction& f, TransformKind kind,
                             std::int64_t probe_range = kDefaultProbeRange);

struct FunctionTriple {
  ArithmeticFunction f;  // class A
  ArithmeticFunction g;  // class M
  ArithmeticFunction h;  // class I0
};

/// (f, e^f, e^-f) for f in A; DomainError otherwise.
FunctionTriple build_triple(const ArithmeticFunction& f);

/// Triple through any admissible member: A as build_triple, M as
/// (log g, g, 1/g), I0 as (-log h, 1/h, h).
FunctionTriple triple_from(const ArithmeticFunction& f);

/// Built-ins: Omega, omega, tau (alias nd), ld, phi, theta, recip, log,
/// htheta = 1/(1+theta), logtau = log(tau), one, zero. Compositions are
/// written kind(inner), e.g. "exp(ld)", "negexp(ld)", "recip(tau)".
/// Throws ConfigError for unknown names.
ArithmeticFunction lookup(std::string_view name);

std::vector<std::string> builtin_names();

}  // namespace seqmetric
