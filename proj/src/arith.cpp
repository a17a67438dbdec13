#include "seqmetric/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "seqmetric/errors.hpp"

namespace seqmetric {

namespace {

std::vector<std::int64_t> sieve(std::int64_t limit) {
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::int64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return primes;
}

// 2^16 > sqrt(10^9), enough for trial division over the whole factorizable range.
constexpr std::int64_t kSmallSieveLimit = 1 << 16;

const std::vector<std::int64_t>& small_primes() {
  static const std::vector<std::int64_t> table = sieve(kSmallSieveLimit);
  return table;
}

const std::vector<std::int64_t>& large_primes() {
  static const std::vector<std::int64_t> table = sieve(kMaxTheta);
  return table;
}

void require_positive(std::int64_t x) {
  if (x < 1) {
    throw DomainError("arithmetic functions are defined for x >= 1, got " +
                      std::to_string(x));
  }
}

}  // namespace

Factorization factorize(std::int64_t x) {
  if (x < 1 || x > kMaxFactorizable) {
    throw DomainError("factorize: x must lie in 1..10^9, got " +
                      std::to_string(x));
  }
  Factorization result;
  for (std::int64_t p : small_primes()) {
    if (p * p > x) break;
    if (x % p != 0) continue;
    int exponent = 0;
    while (x % p == 0) {
      x /= p;
      ++exponent;
    }
    result.push_back({p, exponent});
  }
  if (x > 1) result.push_back({x, 1});
  return result;
}

std::span<const std::int64_t> primes_up_to(std::int64_t limit) {
  if (limit > kMaxTheta) {
    throw DomainError("prime table limited to 10^7, requested " +
                      std::to_string(limit));
  }
  const auto& table = limit <= kSmallSieveLimit ? small_primes() : large_primes();
  auto end = std::upper_bound(table.begin(), table.end(), limit);
  return {table.data(), static_cast<std::size_t>(end - table.begin())};
}

std::string_view to_string(Admissible cls) {
  switch (cls) {
    case Admissible::A: return "A";
    case Admissible::M: return "M";
    case Admissible::I: return "I";
    case Admissible::I0: return "I0";
    case Admissible::Generic: return "generic";
  }
  return "generic";
}

std::string_view to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::G: return "G";
    case ClassTag::Q: return "Q";
    case ClassTag::T: return "T";
    case ClassTag::T0: return "T0";
    case ClassTag::G1: return "G1";
  }
  return "G";
}

ClassTag parse_class_tag(std::string_view text) {
  if (text == "G") return ClassTag::G;
  if (text == "Q") return ClassTag::Q;
  if (text == "T") return ClassTag::T;
  if (text == "T0") return ClassTag::T0;
  if (text == "G1") return ClassTag::G1;
  throw ConfigError("unknown class tag '" + std::string(text) + "'");
}

bool satisfies(std::span<const double> values, ClassTag tag) {
  if (values.empty()) return false;
  const double centre = values.front();
  auto all = [&](auto pred) { return std::all_of(values.begin(), values.end(), pred); };
  switch (tag) {
    case ClassTag::G:
      return centre == 0.0 && all([](double v) { return v >= 0.0; });
    case ClassTag::G1:
      return centre == 0.0 && all([](double v) { return v >= 0.0 && v <= 1.0; });
    case ClassTag::Q:
      return centre == 1.0 && all([](double v) { return v >= 1.0; });
    case ClassTag::T:
      return centre == 1.0 && all([](double v) { return v >= 0.0 && v <= 1.0; });
    case ClassTag::T0:
      return centre == 1.0 && all([](double v) { return v > 0.0 && v <= 1.0; });
  }
  return false;
}

ArithmeticFunction::ArithmeticFunction(std::string name, Evaluator eval,
                                       bool additive, bool multiplicative,
                                       Admissible cls)
    : name_(std::move(name)),
      eval_(std::make_shared<const Evaluator>(std::move(eval))),
      additive_(additive),
      multiplicative_(multiplicative),
      class_(cls) {}

bool ArithmeticFunction::belongs_to(Admissible cls) const {
  if (class_ == cls) return true;
  return cls == Admissible::I && class_ == Admissible::I0;
}

double ArithmeticFunction::operator()(std::int64_t x) const {
  require_positive(x);
  return (*eval_)(x);
}

ArithmeticFunction ArithmeticFunction::with_class(Admissible cls) const {
  ArithmeticFunction copy = *this;
  copy.class_ = cls;
  return copy;
}

double eval_base(const ArithmeticFunction& f, std::int64_t x) { return f(x); }

namespace {

std::vector<double> probe(const ArithmeticFunction& f, std::int64_t range) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(range));
  for (std::int64_t x = 1; x <= range; ++x) values.push_back(f(x));
  return values;
}

Admissible classify_values(const std::vector<double>& values, bool additive,
                           bool multiplicative) {
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) return Admissible::Generic;
  }
  if (additive && satisfies(values, ClassTag::G)) return Admissible::A;
  if (multiplicative) {
    if (satisfies(values, ClassTag::Q)) return Admissible::M;
    if (satisfies(values, ClassTag::T0)) return Admissible::I0;
    if (satisfies(values, ClassTag::T)) return Admissible::I;
  }
  return Admissible::Generic;
}

}  // namespace

ArithmeticFunction classify(const ArithmeticFunction& f, std::int64_t probe_range) {
  if (probe_range < 2) throw DomainError("classify: probe_range must be >= 2");
  const auto values = probe(f, probe_range);
  return f.with_class(classify_values(values, f.is_additive(), f.is_multiplicative()));
}

std::string_view to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::ShiftUp: return "shiftup";
    case TransformKind::ShiftDown: return "shiftdown";
    case TransformKind::OneMinus: return "oneminus";
    case TransformKind::Exp: return "exp";
    case TransformKind::NegExp: return "negexp";
    case TransformKind::Digamma: return "digamma";
    case TransformKind::Reciprocal: return "recip";
    case TransformKind::Log: return "log";
    case TransformKind::NegLog: return "neglog";
  }
  return "exp";
}

TransformKind parse_transform_kind(std::string_view text) {
  static const std::map<std::string_view, TransformKind> kinds = {
      {"shiftup", TransformKind::ShiftUp},   {"shiftdown", TransformKind::ShiftDown},
      {"oneminus", TransformKind::OneMinus}, {"exp", TransformKind::Exp},
      {"negexp", TransformKind::NegExp},     {"digamma", TransformKind::Digamma},
      {"recip", TransformKind::Reciprocal},  {"log", TransformKind::Log},
      {"neglog", TransformKind::NegLog},
  };
  auto it = kinds.find(text);
  if (it == kinds.end()) {
    throw ConfigError("unknown transform '" + std::string(text) + "'");
  }
  return it->second;
}

ArithmeticFunction transform(const ArithmeticFunction& f, TransformKind kind,
                             std::int64_t probe_range) {
  if (probe_range < 2) throw DomainError("transform: probe_range must be >= 2");
  const auto values = probe(f, probe_range);
  auto require = [&](bool ok, std::string_view what) {
    if (!ok) {
      throw DomainError("transform " + std::string(to_string(kind)) + " of " +
                        f.name() + ": input must be " + std::string(what));
    }
  };
  auto positive = std::all_of(values.begin(), values.end(),
                              [](double v) { return v > 0.0; });

  const std::string name = std::string(to_string(kind)) + "(" + f.name() + ")";
  ArithmeticFunction::Evaluator eval;
  bool additive = false;
  bool multiplicative = false;

  switch (kind) {
    case TransformKind::ShiftUp:
      eval = [f](std::int64_t x) { return f(x) + 1.0; };
      break;
    case TransformKind::ShiftDown:
      require(satisfies(values, ClassTag::Q), "Q-class (g(1)=1, g>=1)");
      eval = [f](std::int64_t x) { return f(x) - 1.0; };
      break;
    case TransformKind::OneMinus:
      require(std::all_of(values.begin(), values.end(),
                          [](double v) { return v >= 0.0 && v <= 1.0; }),
              "bounded by 1");
      eval = [f](std::int64_t x) { return 1.0 - f(x); };
      break;
    case TransformKind::Exp:
      require(f.admissible_class() == Admissible::A || satisfies(values, ClassTag::G),
              "class A or G");
      eval = [f](std::int64_t x) { return std::exp(f(x)); };
      multiplicative = f.is_additive();
      break;
    case TransformKind::NegExp:
      require(f.admissible_class() == Admissible::A || satisfies(values, ClassTag::G),
              "class A or G");
      eval = [f](std::int64_t x) { return std::exp(-f(x)); };
      multiplicative = f.is_additive();
      break;
    case TransformKind::Digamma:
      require(satisfies(values, ClassTag::Q), "Q-class (g(1)=1, g>=1)");
      eval = [f](std::int64_t x) { return std::exp(f(x) - 1.0); };
      break;
    case TransformKind::Reciprocal:
      require(positive, "strictly positive");
      eval = [f, name](std::int64_t x) {
        const double v = f(x);
        if (v == 0.0) {
          throw DomainError(name + ": zero value at x=" + std::to_string(x));
        }
        return 1.0 / v;
      };
      multiplicative = f.is_multiplicative();
      break;
    case TransformKind::Log:
      require(satisfies(values, ClassTag::Q), "Q-class (g(1)=1, g>=1)");
      eval = [f](std::int64_t x) { return std::log(f(x)); };
      additive = f.is_multiplicative();
      break;
    case TransformKind::NegLog:
      require(satisfies(values, ClassTag::T0), "T0-class (h(1)=1, 0<h<=1)");
      eval = [f](std::int64_t x) { return -std::log(f(x)); };
      additive = f.is_multiplicative();
      break;
  }
  return classify(ArithmeticFunction(name, std::move(eval), additive, multiplicative),
                  probe_range);
}

FunctionTriple build_triple(const ArithmeticFunction& f) {
  if (f.admissible_class() != Admissible::A) {
    throw DomainError("build_triple: " + f.name() + " is not in A (class " +
                      std::string(to_string(f.admissible_class())) + ")");
  }
  return {f, transform(f, TransformKind::Exp), transform(f, TransformKind::NegExp)};
}

FunctionTriple triple_from(const ArithmeticFunction& f) {
  switch (f.admissible_class()) {
    case Admissible::A:
      return build_triple(f);
    case Admissible::M:
      return {transform(f, TransformKind::Log), f,
              transform(f, TransformKind::Reciprocal)};
    case Admissible::I0:
      return {transform(f, TransformKind::NegLog),
              transform(f, TransformKind::Reciprocal), f};
    default:
      throw DomainError("no function triple through " + f.name() + " (class " +
                        std::string(to_string(f.admissible_class())) + ")");
  }
}

namespace {

double omega_total(std::int64_t x) {
  int count = 0;
  for (const auto& pp : factorize(x)) count += pp.exponent;
  return count;
}

double omega_distinct(std::int64_t x) {
  return static_cast<double>(factorize(x).size());
}

double divisor_count(std::int64_t x) {
  double count = 1;
  for (const auto& pp : factorize(x)) count *= pp.exponent + 1;
  return count;
}

double log_derivative(std::int64_t x) {
  double sum = 0.0;
  for (const auto& pp : factorize(x)) {
    sum += static_cast<double>(pp.exponent) / static_cast<double>(pp.prime);
  }
  return sum;
}

double totient(std::int64_t x) {
  std::int64_t result = 1;
  for (const auto& pp : factorize(x)) {
    std::int64_t power = 1;
    for (int i = 1; i < pp.exponent; ++i) power *= pp.prime;
    result *= power * (pp.prime - 1);
  }
  return static_cast<double>(result);
}

double chebyshev_theta(std::int64_t x) {
  if (x > kMaxTheta) {
    throw DomainError("theta is tabulated up to 10^7, got " + std::to_string(x));
  }
  double sum = 0.0;
  for (std::int64_t p : primes_up_to(x)) sum += std::log(static_cast<double>(p));
  return sum;
}

const std::map<std::string, ArithmeticFunction, std::less<>>& builtins() {
  static const auto table = [] {
    std::map<std::string, ArithmeticFunction, std::less<>> m;
    auto add = [&m](ArithmeticFunction f) {
      auto classified = classify(f);
      m.emplace(classified.name(), classified);
    };
    add({"Omega", omega_total, true, false});
    add({"omega", omega_distinct, true, false});
    add({"tau", divisor_count, false, true});
    add({"ld", log_derivative, true, false});
    add({"phi", totient, false, true});
    add({"theta", chebyshev_theta, false, false});
    add({"recip", [](std::int64_t x) { return 1.0 / static_cast<double>(x); },
         false, true});
    add({"log", [](std::int64_t x) { return std::log(static_cast<double>(x)); },
         true, false});
    add({"htheta", [](std::int64_t x) { return 1.0 / (1.0 + chebyshev_theta(x)); },
         false, false});
    add({"logtau", [](std::int64_t x) { return std::log(divisor_count(x)); }, true,
         false});
    add({"one", [](std::int64_t) { return 1.0; }, false, true});
    add({"zero", [](std::int64_t) { return 0.0; }, true, false});
    return m;
  }();
  return table;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

ArithmeticFunction lookup(std::string_view name) {
  name = trim(name);
  if (name == "nd") name = "tau";
  const auto& table = builtins();
  if (auto it = table.find(name); it != table.end()) return it->second;

  const auto open = name.find('(');
  if (open == std::string_view::npos || name.back() != ')' || open == 0) {
    throw ConfigError("unknown function '" + std::string(name) + "'");
  }
  const auto kind = parse_transform_kind(trim(name.substr(0, open)));
  const auto inner = name.substr(open + 1, name.size() - open - 2);
  try {
    return transform(lookup(inner), kind);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("cannot build '") + std::string(name) + "': " + e.what());
  }
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (const auto& [name, f] : builtins()) names.push_back(name);
  return names;
}

}  // namespace seqmetric
