#include "flagvar/lct.hpp"

#include <algorithm>
#include <stdexcept>

#include "flagvar/error.hpp"

namespace flagvar {

const Rational& ThresholdValue::finite() const {
  if (is_infinite()) throw std::logic_error("threshold is infinite");
  return std::get<Rational>(value_);
}

std::string ThresholdValue::str() const { return is_infinite() ? "inf" : to_string(finite()); }

ThresholdValue ThresholdValue::parse(std::string_view text) {
  if (text == "inf") return Infinite{};
  Rational q = parse_rational(text);
  if (q <= 0) throw ParseError("threshold must be positive or 'inf'", 0);
  return q;
}

std::string to_string(Exactness e) { return e == Exactness::exact ? "exact" : "lower_bound"; }

Exactness parse_exactness(std::string_view text) {
  if (text == "exact") return Exactness::exact;
  if (text == "lower_bound") return Exactness::lower_bound;
  throw ParseError("unknown exactness '" + std::string(text) + "'", 0);
}

namespace {

ThresholdResult from_max_coefficient(const Rational& max_coefficient, Exactness exactness) {
  ThresholdResult r;
  r.exactness = exactness;
  r.value = max_coefficient == 0 ? ThresholdValue(Infinite{}) : ThresholdValue(Rational(1 / max_coefficient));
  r.klt = r.value.exceeds(1);
  r.lc = r.value.at_least(1);
  return r;
}

void require_on(const FlagVariety& x, const QDivisor& d) {
  if (!(d.support() == x.omitted())) throw DomainError("divisor does not live on " + x.describe());
}

}  // namespace

ThresholdResult lct_b_stable(const FlagVariety& x, const QDivisor& d) {
  require_on(x, d);
  return from_max_coefficient(d.max_coefficient(), Exactness::exact);
}

ThresholdResult lct_lower_bound_general(const FlagVariety& x, const QDivisor& d) {
  require_on(x, d);
  return from_max_coefficient(d.max_coefficient(), Exactness::lower_bound);
}

QDivisor scale(const QDivisor& d, const Rational& c) { return d.scaled(c); }

ThresholdResult global_lct(const FlagVariety& x) {
  int top = 0;
  for (const auto& [alpha, c] : anticanonical_coefficients(x)) top = std::max(top, c);
  ThresholdResult r = from_max_coefficient(Rational(top), Exactness::exact);
  r.derived_extension = !x.levi().empty();
  return r;
}

Rational hwang_fiber_threshold(const FiberType& fiber, const mpz_class& k) {
  if (k < 1) throw DomainError("fibre threshold needs k >= 1, got " + k.get_str());
  if (!is_valid_cartan_type(fiber.type.family, fiber.type.rank) || fiber.marked_node < 0 ||
      fiber.marked_node >= fiber.type.rank) {
    throw DomainError("invalid fibre descriptor " + fiber.type.label());
  }
  return Rational(mpz_class(1), k);
}

ThresholdValue fiber_threshold(const FiberType& fiber, const Rational& a) {
  if (a < 0) throw DomainError("restricted class " + to_string(a) + " is not effective");
  if (a == 0) return Infinite{};
  // a = p/q: lct(a H) = q * lct(p H)
  return Rational(Rational(a.get_den()) * hwang_fiber_threshold(fiber, a.get_num()));
}

ThresholdValue fiberwise_threshold(const FlagVariety& x, const QDivisor& d) {
  require_on(x, d);
  ThresholdValue best = Infinite{};
  for (int beta : x.omitted().nodes()) {
    const ThresholdValue t = fiber_threshold(fibration(x, beta).fiber, restrict_divisor_to_fiber(x, d, beta));
    if (t.is_infinite()) continue;
    if (best.is_infinite() || t.finite() < best.finite()) best = t;
  }
  return best;
}

}  // namespace flagvar
