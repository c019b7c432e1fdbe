#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "overlapkit/unary_monotone.hpp"

namespace overlapkit {

/// A binary operation on [0,1]^2 with values in [0,1]. Results are clamped
/// into [0,1] only within tolerance::range_slack; anything further out is a
/// broken evaluator and throws. Immutable after construction.
class BivariateOp {
 public:
  enum class Provenance {
    additive_pair,
    dual_pair,
    multiplicative_pair,
    distortion,
    dualized,
    builtin,
    external,
  };

  BivariateOp(std::function<double(double, double)> eval, Provenance prov,
              std::string label)
      : eval_(std::move(eval)), prov_(prov), label_(std::move(label)) {
    if (!eval_) throw std::invalid_argument("BivariateOp: null evaluator");
  }

  double operator()(double x, double y) const {
    double v = eval_(x, y);
    if (v < 0.0) {
      if (v < -tolerance::range_slack) {
        throw std::domain_error("BivariateOp '" + label_ + "': value " +
                                std::to_string(v) + " below 0");
      }
      return 0.0;
    }
    if (v > 1.0) {
      if (v > 1.0 + tolerance::range_slack) {
        throw std::domain_error("BivariateOp '" + label_ + "': value " +
                                std::to_string(v) + " above 1");
      }
      return 1.0;
    }
    return v;
  }

  Provenance provenance() const noexcept { return prov_; }
  const std::string& label() const noexcept { return label_; }

 private:
  std::function<double(double, double)> eval_;
  Provenance prov_;
  std::string label_;
};

/// N(x) = 1 - x conjugate: D(x,y) = 1 - B(1-x, 1-y). Swaps the overlap and
/// grouping worlds; applying it twice returns the original values up to a
/// few ulp.
BivariateOp dualize(const BivariateOp& op);

}  // namespace overlapkit
