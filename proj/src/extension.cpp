#include "seqmetric/extension.hpp"

#include <cmath>
#include <map>
#include <numeric>

#include "seqmetric/errors.hpp"

namespace seqmetric {

ModExtended::ModExtended(ArithmeticFunction base, std::int64_t modulus)
    : base_(std::move(base)), modulus_(modulus) {
  if (modulus < 2 || modulus > kMaxModulus) {
    throw DomainError("modulus must lie in 2..10^7, got " + std::to_string(modulus));
  }
  values_.reserve(static_cast<std::size_t>(modulus));
  for (std::int64_t x = 1; x <= modulus; ++x) values_.push_back(base_(x));
}

std::int64_t ModExtended::residue(std::int64_t x) const {
  // x % n lies in (-n, n), so the shifted value is nonnegative.
  return ((x % modulus_) + modulus_ - 1) % modulus_ + 1;
}

bool ModExtended::has_tag(ClassTag tag) const { return satisfies(values_, tag); }

std::string ModExtended::label() const {
  return base_.name() + "@" + std::to_string(modulus_);
}

ModExtended extend(const ArithmeticFunction& f, std::int64_t n) {
  return ModExtended(f, n);
}

double eval_extended(const ModExtended& ext, std::int64_t x) { return ext(x); }

ModExtended parse_extended(std::string_view text) {
  const auto at = text.rfind('@');
  if (at == std::string_view::npos) {
    throw ConfigError("expected function@modulus, got '" + std::string(text) + "'");
  }
  std::int64_t n = 0;
  try {
    std::size_t used = 0;
    const std::string digits(text.substr(at + 1));
    n = std::stoll(digits, &used);
    if (used != digits.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ConfigError("bad modulus in '" + std::string(text) + "'");
  }
  try {
    return extend(lookup(text.substr(0, at)), n);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

bool is_gcd_even(const ModExtended& ext) {
  const auto n = ext.modulus();
  std::map<std::int64_t, double> by_gcd;
  for (std::int64_t x = 1; x <= n; ++x) {
    const double value = ext(x);
    auto [it, inserted] = by_gcd.emplace(std::gcd(x, n), value);
    if (!inserted && it->second != value) return false;
  }
  return true;
}

bool check_restricted_morphism(const ModExtended& ext, std::int64_t x, std::int64_t y) {
  const auto rx = ext.residue(x);
  const auto ry = ext.residue(y);
  if (std::gcd(rx, ry) != 1) {
    throw PreconditionError("residues " + std::to_string(rx) + " and " +
                            std::to_string(ry) + " are not coprime");
  }
  if (rx * ry > ext.modulus()) {
    throw PreconditionError("residue product " + std::to_string(rx * ry) +
                            " exceeds modulus " + std::to_string(ext.modulus()));
  }
  const auto& base = ext.base();
  // The product x*y is congruent to rx*ry, which lies in 1..n.
  const double joint = ext(rx * ry);
  auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
  };
  if (base.is_additive()) return close(joint, ext(x) + ext(y));
  if (base.is_multiplicative()) return close(joint, ext(x) * ext(y));
  throw PreconditionError(base.name() + " is neither additive nor multiplicative");
}

}  // namespace seqmetric
