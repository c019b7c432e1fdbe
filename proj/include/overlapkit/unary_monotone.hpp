#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "overlapkit/errors.hpp"
#include "overlapkit/ext_real.hpp"

namespace overlapkit {

namespace tolerance {
// Shared numeric policy. These are pinned here once and referenced everywhere;
// tests assert against the same constants.
inline constexpr double mono = 1e-9;      // monotonicity slack
inline constexpr double plateau = 1e-9;   // plateau detection / equality of generator values
inline constexpr double pinv = 1e-12;     // bisection bracket width target
inline constexpr double equality = 1e-7;  // default equality tolerance in axiom checks
inline constexpr double boundary_one = 1e-12;  // slack for "value is 1" boundary checks
inline constexpr double range_slack = 1e-14;   // rounding slack before range clamping
inline constexpr int pinv_max_iter = 200;
}  // namespace tolerance

enum class Direction { increasing, decreasing };

/// A monotone function between closed subintervals of [0, +inf].
/// The evaluator must honor the declared direction; violations beyond
/// tolerance::mono are reported as NonMonotoneDetected by the probing
/// routines. Values are immutable after construction.
class UnaryMonotone {
 public:
  UnaryMonotone(Interval domain, Interval codomain, Direction dir,
                std::function<ExtReal(ExtReal)> fn, std::string label,
                std::optional<bool> strict_hint = std::nullopt)
      : domain_(domain),
        codomain_(codomain),
        dir_(dir),
        fn_(std::move(fn)),
        label_(std::move(label)),
        strict_hint_(strict_hint) {
    if (!fn_) throw std::invalid_argument("UnaryMonotone: null evaluator");
    if (!(domain_.lo <= domain_.hi) || !(codomain_.lo <= codomain_.hi)) {
      throw std::invalid_argument("UnaryMonotone: empty interval");
    }
  }

  /// Evaluate. The argument is clamped into the domain and the result is
  /// clamped into the codomain, both only within tolerance::range_slack;
  /// anything further out throws std::domain_error.
  ExtReal operator()(ExtReal x) const {
    if (x < domain_.lo) x = domain_.lo;
    if (x > domain_.hi) x = domain_.hi;
    ExtReal r = fn_(x);
    if (r < codomain_.lo) {
      if (codomain_.lo.value() - r.value() > tolerance::range_slack) {
        throw std::domain_error("UnaryMonotone '" + label_ +
                                "': value below codomain");
      }
      r = codomain_.lo;
    } else if (r > codomain_.hi) {
      if (r.is_finite() && (codomain_.hi.is_infinite() ||
                            r.value() - codomain_.hi.value() <=
                                tolerance::range_slack)) {
        r = codomain_.hi;
      } else if (r > codomain_.hi) {
        throw std::domain_error("UnaryMonotone '" + label_ +
                                "': value above codomain");
      }
    }
    return r;
  }

  const Interval& domain() const noexcept { return domain_; }
  const Interval& codomain() const noexcept { return codomain_; }
  Direction direction() const noexcept { return dir_; }
  const std::string& label() const noexcept { return label_; }
  std::optional<bool> strict_hint() const noexcept { return strict_hint_; }

 private:
  Interval domain_;
  Interval codomain_;
  Direction dir_;
  std::function<ExtReal(ExtReal)> fn_;
  std::string label_;
  std::optional<bool> strict_hint_;
};

/// Compactification used to bisect over unbounded domains: m(u) = u/(1+u),
/// m(inf) = 1. Strictly increasing, so bisection order is preserved.
inline double compactify(ExtReal u) noexcept {
  if (u.is_infinite()) return 1.0;
  return u.value() / (1.0 + u.value());
}

inline ExtReal uncompactify(double c) {
  if (c >= 1.0) return ExtReal::infinity();
  return ExtReal(c / (1.0 - c));
}

/// Sup-based pseudo-inverse evaluated at a single point:
///   decreasing f: sup { x in dom : f(x) > y }
///   increasing f: sup { x in dom : f(x) < y }
/// The sup of the empty set is the left domain endpoint, returned exactly.
/// Bisection runs until the bracket is narrower than tol (at most
/// tolerance::pinv_max_iter steps); on unbounded domains the bracket lives in
/// the compactified coordinate. Plateaus at level y resolve to the supremum
/// side of the solution set. Throws NonMonotoneDetected if a spot check finds
/// the evaluator moving against its declared direction.
ExtReal pseudo_inverse(const UnaryMonotone& f, ExtReal y,
                       double tol = tolerance::pinv);

/// The pseudo-inverse as a function object. The direction probe runs once at
/// wrap time instead of per evaluation; `domain` may extend the natural
/// [codomain of f] domain (the sup formula is total in y).
UnaryMonotone pseudo_inverse_fn(const UnaryMonotone& f,
                                double tol = tolerance::pinv,
                                std::optional<Interval> domain = std::nullopt);

struct StrictnessProbe {
  bool strict = true;
  // Valid when !strict: grid points u < v with |f(u) - f(v)| <= plateau
  // tolerance, the widest such span found.
  ExtReal plateau_lo;
  ExtReal plateau_hi;
};

/// Samples grid_n points across the domain (compactified if unbounded) and
/// reports the widest span over which the function is flat to within
/// tolerance::plateau. Verdicts are resolution-bounded: a plateau narrower
/// than one grid cell can escape, and a slope below the tolerance reads as
/// flat. Throws NonMonotoneDetected on direction violations.
StrictnessProbe probe_strictness(const UnaryMonotone& f, int grid_n = 1001);

}  // namespace overlapkit
