#include "flagvar/divisor.hpp"

#include <algorithm>

#include "flagvar/error.hpp"

namespace flagvar {

QDivisor::QDivisor(const NodeSet& support, std::map<int, Rational> coefficients)
    : support_(support), coefficients_(std::move(coefficients)) {
  for (auto& [node, a] : coefficients_) {
    if (!support_.contains(node)) {
      throw DomainError("divisor coefficient a" + std::to_string(node + 1) +
                        " refers to a node outside S\\I");
    }
    if (a < 0) {
      throw DomainError("divisor coefficient a" + std::to_string(node + 1) + " = " + to_string(a) +
                        " is negative; the divisor must be effective");
    }
    a.canonicalize();
  }
}

Rational QDivisor::coefficient(int node) const {
  auto it = coefficients_.find(node);
  return it == coefficients_.end() ? Rational(0) : it->second;
}

Rational QDivisor::max_coefficient() const {
  Rational best = 0;
  for (const auto& [node, a] : coefficients_) best = std::max(best, a);
  return best;
}

bool QDivisor::is_zero() const { return max_coefficient() == 0; }

QDivisor QDivisor::scaled(const Rational& c) const {
  if (c <= 0) throw DomainError("scaling factor " + to_string(c) + " must be positive");
  std::map<int, Rational> out;
  for (const auto& [node, a] : coefficients_) out.emplace(node, a * c);
  return QDivisor(support_, std::move(out));
}

QDivisor QDivisor::plus(const QDivisor& other) const {
  if (!(support_ == other.support_)) throw DomainError("adding divisors on different varieties");
  std::map<int, Rational> out = coefficients_;
  for (const auto& [node, a] : other.coefficients_) out[node] += a;
  return QDivisor(support_, std::move(out));
}

}  // namespace flagvar
