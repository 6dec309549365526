#pragma once

#include <map>

#include "flagvar/rational.hpp"
#include "flagvar/roots.hpp"

namespace flagvar {

/// An effective Q-divisor class sum a_alpha D_alpha over the B-stable prime
/// divisors D_alpha, alpha in S\I. Nodes are 0-based; absent nodes carry 0.
class QDivisor {
 public:
  QDivisor() = default;

  /// Throws DomainError when a key is outside `support` or a coefficient
  /// is negative.
  QDivisor(const NodeSet& support, std::map<int, Rational> coefficients);

  const NodeSet& support() const { return support_; }
  const std::map<int, Rational>& coefficients() const { return coefficients_; }
  Rational coefficient(int node) const;
  Rational max_coefficient() const;
  bool is_zero() const;

  /// c * D. Throws DomainError unless c > 0.
  QDivisor scaled(const Rational& c) const;
  /// D + E on the same support.
  QDivisor plus(const QDivisor& other) const;

 private:
  NodeSet support_;
  std::map<int, Rational> coefficients_;
};

}  // namespace flagvar
