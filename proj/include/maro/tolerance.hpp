#ifndef MARO_TOLERANCE_HPP
#define MARO_TOLERANCE_HPP

#include <cmath>
#include <compare>
#include <limits>
#include <string>

namespace maro {

/// Extended real: a finite double, +inf or -inf.
///
/// Infinities are stored as IEEE infinities, so the natural ordering
/// -inf < finite < +inf falls out of double comparison. NaN is never stored.
class XReal {
 public:
  constexpr XReal() = default;
  constexpr XReal(double v) : value_(v) {}  // NOLINT: implicit from finite values

  static constexpr XReal pos_inf() { return XReal(std::numeric_limits<double>::infinity()); }
  static constexpr XReal neg_inf() { return XReal(-std::numeric_limits<double>::infinity()); }

  constexpr double value() const { return value_; }
  bool is_finite() const { return std::isfinite(value_); }
  bool is_pos_inf() const { return std::isinf(value_) && value_ > 0; }
  bool is_neg_inf() const { return std::isinf(value_) && value_ < 0; }

  friend constexpr bool operator==(XReal a, XReal b) { return a.value_ == b.value_; }
  friend constexpr auto operator<=>(XReal a, XReal b) { return a.value_ <=> b.value_; }

  /// "+inf", "-inf" or the shortest round-trip decimal of the finite value.
  std::string to_string() const;

 private:
  double value_ = 0.0;
};

/// Absolute comparison tolerance applied to every floating-point decision.
///
/// a <= b  iff a - b <= tau
/// a <  b  iff b - a >  tau
/// a == b  iff |a - b| <= tau
///
/// Infinite operands are compared exactly (tau only applies between finite
/// values), so +inf <= +inf holds and +inf < +inf does not.
struct Tolerance {
  double tau = 1e-9;

  bool leq(double a, double b) const {
    if (std::isinf(a) || std::isinf(b)) return a <= b;
    return a - b <= tau;
  }
  bool lt(double a, double b) const {
    if (std::isinf(a) || std::isinf(b)) return a < b;
    return b - a > tau;
  }
  bool eq(double a, double b) const {
    if (std::isinf(a) || std::isinf(b)) return a == b;
    return std::fabs(a - b) <= tau;
  }

  bool leq(XReal a, XReal b) const { return leq(a.value(), b.value()); }
  bool lt(XReal a, XReal b) const { return lt(a.value(), b.value()); }
  bool eq(XReal a, XReal b) const { return eq(a.value(), b.value()); }
};

}  // namespace maro

#endif  // MARO_TOLERANCE_HPP
