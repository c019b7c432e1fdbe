#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace overlapkit {

/// A value in [0, +inf]. Infinity is a first-class element; NaN and negative
/// values are rejected at construction, so arithmetic below never produces
/// inf - inf or NaN.
class ExtReal {
 public:
  constexpr ExtReal() noexcept : v_(0.0) {}

  // Implicit by design: plain non-negative doubles flow into the extended
  // domain freely. Throws std::invalid_argument on NaN or negatives.
  ExtReal(double v) : v_(v) {
    if (std::isnan(v) || v < 0.0) {
      throw std::invalid_argument("ExtReal: value must be in [0, +inf]");
    }
  }

  static ExtReal infinity() noexcept {
    ExtReal r;
    r.v_ = std::numeric_limits<double>::infinity();
    return r;
  }

  /// Clamp tiny negative rounding noise (>= -slack) to 0 instead of throwing.
  static ExtReal from_rounded(double v, double slack = 1e-14) {
    if (v < 0.0 && v >= -slack) v = 0.0;
    return ExtReal(v);
  }

  double value() const noexcept { return v_; }
  bool is_infinite() const noexcept { return std::isinf(v_); }
  bool is_finite() const noexcept { return !std::isinf(v_); }

  friend bool operator==(ExtReal a, ExtReal b) noexcept { return a.v_ == b.v_; }
  friend bool operator!=(ExtReal a, ExtReal b) noexcept { return a.v_ != b.v_; }
  friend bool operator<(ExtReal a, ExtReal b) noexcept { return a.v_ < b.v_; }
  friend bool operator<=(ExtReal a, ExtReal b) noexcept { return a.v_ <= b.v_; }
  friend bool operator>(ExtReal a, ExtReal b) noexcept { return a.v_ > b.v_; }
  friend bool operator>=(ExtReal a, ExtReal b) noexcept { return a.v_ >= b.v_; }

  // x + inf == inf, inf + inf == inf; exact for finite operands up to the
  // usual rounding. Non-negativity of both sides rules out NaN.
  friend ExtReal operator+(ExtReal a, ExtReal b) noexcept {
    ExtReal r;
    r.v_ = a.v_ + b.v_;
    return r;
  }

 private:
  double v_;
};

/// Extended addition on [0, +inf] with infinity absorbing.
inline ExtReal ext_add(ExtReal a, ExtReal b) noexcept { return a + b; }

/// Distance that treats two infinite values as equal (gap 0) and an
/// infinite/finite mix as infinitely far apart.
inline double ext_gap(ExtReal a, ExtReal b) noexcept {
  if (a.is_infinite() && b.is_infinite()) return 0.0;
  if (a.is_infinite() || b.is_infinite()) {
    return std::numeric_limits<double>::infinity();
  }
  return std::fabs(a.value() - b.value());
}

/// Closed interval [lo, hi] inside [0, +inf].
struct Interval {
  ExtReal lo;
  ExtReal hi;

  bool contains(ExtReal x) const noexcept { return lo <= x && x <= hi; }

  static Interval unit() { return {ExtReal(0.0), ExtReal(1.0)}; }
  static Interval nonneg() { return {ExtReal(0.0), ExtReal::infinity()}; }
};

}  // namespace overlapkit
