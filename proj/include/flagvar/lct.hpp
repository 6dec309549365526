#pragma once

#include <string>
#include <variant>

#include "flagvar/divisor.hpp"
#include "flagvar/flag.hpp"
#include "flagvar/rational.hpp"

namespace flagvar {

struct Infinite {
  bool operator==(const Infinite&) const = default;
};

/// A log canonical threshold: a positive rational or +infinity (divisor with
/// empty support).
class ThresholdValue {
 public:
  ThresholdValue() : value_(Infinite{}) {}
  ThresholdValue(Infinite inf) : value_(inf) {}
  ThresholdValue(Rational q) : value_(std::move(q)) {}

  bool is_infinite() const { return std::holds_alternative<Infinite>(value_); }
  /// Throws std::logic_error on the infinite value.
  const Rational& finite() const;

  bool exceeds(const Rational& q) const { return is_infinite() || finite() > q; }
  bool at_least(const Rational& q) const { return is_infinite() || finite() >= q; }

  /// "inf" or "p/q".
  std::string str() const;
  /// Inverse of str(). Throws ParseError.
  static ThresholdValue parse(std::string_view text);

  bool operator==(const ThresholdValue& other) const { return value_ == other.value_; }

 private:
  std::variant<Infinite, Rational> value_;
};

enum class Exactness { exact, lower_bound };

std::string to_string(Exactness e);
/// Throws ParseError.
Exactness parse_exactness(std::string_view text);

struct ThresholdResult {
  ThresholdValue value;
  Exactness exactness = Exactness::exact;
  /// For exact results: value > 1. For lower bounds: klt is guaranteed.
  bool klt = true;
  /// For exact results: value >= 1. For lower bounds: lc is guaranteed.
  bool lc = true;
  /// Set when the value extends a statement only established for G/B
  /// (global threshold of G/P with I nonempty).
  bool derived_extension = false;

  bool operator==(const ThresholdResult&) const = default;
};

/// 1 / max a_alpha for the B-stable divisor sum a_alpha D_alpha; exact.
ThresholdResult lct_b_stable(const FlagVariety& x, const QDivisor& d);

/// The same number as a lower bound for any effective divisor in the class
/// sum a_alpha D_alpha.
ThresholdResult lct_lower_bound_general(const FlagVariety& x, const QDivisor& d);

/// c * D. Throws DomainError unless c > 0.
QDivisor scale(const QDivisor& d, const Rational& c);

/// lct of the anticanonical class: 1 / max c_alpha. Infinite on a point.
ThresholdResult global_lct(const FlagVariety& x);

/// lct(X_alpha, k H_alpha) = 1/k for a maximal-parabolic fibre. Throws
/// DomainError when k < 1 or the descriptor is not a valid fibre.
Rational hwang_fiber_threshold(const FiberType& fiber, const mpz_class& k);

/// lct(X_beta, a H_beta) for rational a >= 0, through the integral formula
/// and lct(rD) = lct(D)/r. Infinite for a = 0.
ThresholdValue fiber_threshold(const FiberType& fiber, const Rational& a);

/// min over beta in S\I of fiber_threshold(X_beta, restriction of D to
/// X_beta). Independent route to lct_b_stable's value.
ThresholdValue fiberwise_threshold(const FlagVariety& x, const QDivisor& d);

}  // namespace flagvar
