#include "overlapkit/random_pairs.hpp"

#include <algorithm>
#include <cmath>

#include "overlapkit/formatting.hpp"

namespace overlapkit {

namespace {

// Coefficient ranges keep the generated operators inside the numerically
// checkable regime: the smallest interior grid value stays above the
// double-rounding floor of the dualized suites (~5.5e-17), and the leading
// exponent alpha*delta >= 0.25 keeps the continuity heuristic's jump ratio
// under its threshold.
constexpr double kAlphaLo = 0.5, kAlphaHi = 2.0;
constexpr double kBetaHi = 1.0;
constexpr double kGammaHi = 0.5;
constexpr double kDecayLo = 0.5, kDecayHi = 1.5;
constexpr double kKneeLo = 0.5, kKneeHi = 3.0;

}  // namespace

GeneratorPair make_random_valid_pair(std::mt19937_64& rng, bool matched) {
  auto uni = [&rng](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  static constexpr double kAs[] = {0.0, 0.5, 1.0, 2.0};
  const double a = kAs[std::uniform_int_distribution<int>(0, 3)(rng)];
  const double half = a / 2.0;
  const double alpha = uni(kAlphaLo, kAlphaHi);
  const double beta = uni(0.0, kBetaHi);
  const double gamma = uni(0.0, kGammaHi);

  UnaryMonotone theta(
      Interval::unit(), Interval::nonneg(), Direction::decreasing,
      [half, alpha, beta, gamma](ExtReal x) {
        double v = x.value();
        if (v == 0.0) return ExtReal::infinity();
        double u = 1.0 - v;
        return ExtReal(half + alpha * (-std::log(v)) + beta * u +
                       gamma * u * u);
      },
      "rntheta(" + fmt_g(alpha) + "," + fmt_g(beta) + "," + fmt_g(gamma) + ")",
      true);

  std::string label = "random(a=" + fmt_g(a) +
                      (matched ? ",matched)" : ",free)");
  if (matched) {
    UnaryMonotone shifted(
        Interval::unit(), Interval::nonneg(), Direction::decreasing,
        [theta, half](ExtReal x) { return theta(x) + ExtReal(half); },
        theta.label() + "+" + fmt_g(half), true);
    UnaryMonotone vartheta =
        pseudo_inverse_fn(shifted, tolerance::pinv, Interval::nonneg());
    return GeneratorPair(theta, std::move(vartheta), a, label);
  }

  const double d1 = uni(kDecayLo, kDecayHi);
  const double d2 = uni(kDecayLo, kDecayHi);
  const double knee = uni(kKneeLo, kKneeHi);
  UnaryMonotone vartheta(
      Interval::nonneg(), Interval::unit(), Direction::decreasing,
      [a, d1, d2, knee](ExtReal u) {
        if (u.is_infinite()) return ExtReal(0.0);
        double v = u.value() - a;
        if (v <= 0.0) return ExtReal(1.0);
        double w = d1 * std::min(v, knee) + d2 * std::max(0.0, v - knee);
        return ExtReal(std::exp(-w));
      },
      "rnvartheta(" + fmt_g(d1) + "," + fmt_g(d2) + "," + fmt_g(knee) + ")");
  return GeneratorPair(std::move(theta), std::move(vartheta), a, label);
}

}  // namespace overlapkit
