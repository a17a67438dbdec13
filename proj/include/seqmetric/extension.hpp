#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqmetric/arith.hpp"

namespace seqmetric {

inline constexpr std::int64_t kMaxModulus = 10'000'000;

/// The n-periodic lift x -> f(1 + ((x-1) mod n)) of a base function to all of Z.
/// The n base values f(1..n) are evaluated once at construction, so every
/// evaluation of a residue class returns the identical double.
class ModExtended {
 public:
  /// Throws DomainError unless 2 <= modulus <= kMaxModulus.
  ModExtended(ArithmeticFunction base, std::int64_t modulus);

  const ArithmeticFunction& base() const { return base_; }
  std::int64_t modulus() const { return modulus_; }

  /// 1 + ((x-1) mod n), always in 1..n.
  std::int64_t residue(std::int64_t x) const;

  double operator()(std::int64_t x) const {
    return values_[static_cast<std::size_t>(residue(x) - 1)];
  }

  /// f(1), ..., f(n).
  std::span<const double> period() const { return values_; }

  /// Range class of the extension, decided exactly on the period.
  bool has_tag(ClassTag tag) const;

  /// "name@n"
  std::string label() const;

 private:
  ArithmeticFunction base_;
  std::int64_t modulus_;
  std::vector<double> values_;
};

ModExtended extend(const ArithmeticFunction& f, std::int64_t n);

double eval_extended(const ModExtended& ext, std::int64_t x);

/// Parses "ld@6" into lookup("ld") extended modulo 6.
ModExtended parse_extended(std::string_view text);

/// True iff the base agrees on all residues sharing the same gcd with n.
bool is_gcd_even(const ModExtended& ext);

/// Restricted additivity / multiplicativity for coprime residues whose
/// product stays inside 1..n. Throws PreconditionError when the residues
/// are not coprime, their product exceeds n, or the base carries neither
/// morphism flag.
bool check_restricted_morphism(const ModExtended& ext, std::int64_t x, std::int64_t y);

}  // namespace seqmetric
