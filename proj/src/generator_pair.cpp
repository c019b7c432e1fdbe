#include "overlapkit/generator_pair.hpp"

#include <cmath>

#include "overlapkit/formatting.hpp"

namespace overlapkit {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

bool is_unit(const Interval& iv) {
  return iv.lo == ExtReal(0.0) && iv.hi == ExtReal(1.0);
}

bool is_nonneg(const Interval& iv) {
  return iv.lo == ExtReal(0.0) && iv.hi.is_infinite();
}

std::string pair_label(const std::string& name, double a) {
  return name + "(a=" + fmt_g(a) + ")";
}

// theta(x) = a/2 - ln x, theta(0) = inf exactly (never a large sentinel).
UnaryMonotone theta_log(double a) {
  double half = a / 2.0;
  return UnaryMonotone(
      Interval::unit(), Interval::nonneg(), Direction::decreasing,
      [half](ExtReal x) {
        if (x.value() == 0.0) return ExtReal::infinity();
        return ExtReal(half - std::log(x.value()));
      },
      "theta[log,a=" + fmt_g(a) + "]", true);
}

// vartheta = 1 on [0,a), exp(a - u) on [a,inf), 0 at inf exactly.
UnaryMonotone vartheta_exp(double a) {
  return UnaryMonotone(
      Interval::nonneg(), Interval::unit(), Direction::decreasing,
      [a](ExtReal u) {
        if (u.is_infinite()) return ExtReal(0.0);
        if (u.value() < a) return ExtReal(1.0);
        return ExtReal(std::exp(a - u.value()));
      },
      "vartheta[exp,a=" + fmt_g(a) + "]", std::nullopt);
}

// vartheta = 1 on [0,a), a/u on [a,inf), 0 at inf exactly. Needs a > 0.
UnaryMonotone vartheta_reciprocal(double a) {
  return UnaryMonotone(
      Interval::nonneg(), Interval::unit(), Direction::decreasing,
      [a](ExtReal u) {
        if (u.is_infinite()) return ExtReal(0.0);
        if (u.value() < a) return ExtReal(1.0);
        return ExtReal(a / u.value());
      },
      "vartheta[reciprocal,a=" + fmt_g(a) + "]", std::nullopt);
}

// theta(x) = a/2 + ln((2-x)/x), theta(0) = inf exactly.
UnaryMonotone theta_log_ratio(double a) {
  double half = a / 2.0;
  return UnaryMonotone(
      Interval::unit(), Interval::nonneg(), Direction::decreasing,
      [half](ExtReal x) {
        if (x.value() == 0.0) return ExtReal::infinity();
        return ExtReal(half + std::log((2.0 - x.value()) / x.value()));
      },
      "theta[log-ratio,a=" + fmt_g(a) + "]", true);
}

// vartheta = 1 on [0,a), 4/(e^{2w} + 2e^w + 1) = (2/(e^w+1))^2 with w = u-a.
UnaryMonotone vartheta_logistic_sq(double a) {
  return UnaryMonotone(
      Interval::nonneg(), Interval::unit(), Direction::decreasing,
      [a](ExtReal u) {
        if (u.is_infinite()) return ExtReal(0.0);
        if (u.value() < a) return ExtReal(1.0);
        double r = 2.0 / (std::exp(u.value() - a) + 1.0);
        return ExtReal(r * r);
      },
      "vartheta[logistic-sq,a=" + fmt_g(a) + "]", std::nullopt);
}

// Strictly decreasing except for a flat stretch at level c on [0.4, 0.6];
// still hits inf only at 0 and a/2 only at 1. The counterexample generator
// for the distortion results.
UnaryMonotone theta_plateau(double a) {
  double half = a / 2.0;
  double c = half + 1.5;
  return UnaryMonotone(
      Interval::unit(), Interval::nonneg(), Direction::decreasing,
      [half, c](ExtReal xe) {
        double x = xe.value();
        if (x == 0.0) return ExtReal::infinity();
        if (x <= 0.4) return ExtReal(c - std::log(x / 0.4));
        if (x <= 0.6) return ExtReal(c);
        // Linear from c down to a/2; written so theta(1) = a/2 exactly.
        return ExtReal(half + (c - half) * ((1.0 - x) / 0.4));
      },
      "theta[plateau,a=" + fmt_g(a) + "]", false);
}

GeneratorPair make_pair(const std::string& name, double a) {
  if (name == "product-pair") {
    return GeneratorPair(theta_log(a), vartheta_exp(a), a,
                         pair_label(name, a));
  }
  if (name == "nonassoc-log") {
    require(a > 0.0, "nonassoc-log requires a > 0");
    return GeneratorPair(theta_log(a), vartheta_reciprocal(a), a,
                         pair_label(name, a));
  }
  if (name == "hamacher-squared") {
    return GeneratorPair(theta_log_ratio(a), vartheta_logistic_sq(a), a,
                         pair_label(name, a));
  }
  if (name == "plateau-pair") {
    return GeneratorPair(theta_plateau(a), vartheta_exp(a), a,
                         pair_label(name, a));
  }
  throw UnknownCatalogEntry("no catalog pair named '" + name + "'");
}

BivariateOp builtin(const std::string& name) {
  using P = BivariateOp::Provenance;
  if (name == "product") {
    return BivariateOp([](double x, double y) { return x * y; }, P::builtin,
                       "product");
  }
  if (name == "minimum") {
    return BivariateOp([](double x, double y) { return std::fmin(x, y); },
                       P::builtin, "minimum");
  }
  if (name == "maximum") {
    return BivariateOp([](double x, double y) { return std::fmax(x, y); },
                       P::builtin, "maximum");
  }
  if (name == "lukasiewicz") {
    return BivariateOp(
        [](double x, double y) { return std::fmax(0.0, x + y - 1.0); },
        P::builtin, "lukasiewicz");
  }
  if (name == "probabilistic-sum") {
    return BivariateOp([](double x, double y) { return x + y - x * y; },
                       P::builtin, "probabilistic-sum");
  }
  if (name == "hamacher") {
    return BivariateOp(
        [](double x, double y) { return x * y / (2.0 - x - y + x * y); },
        P::builtin, "hamacher");
  }
  throw UnknownCatalogEntry("no catalog operator named '" + name + "'");
}

}  // namespace

GeneratorPair::GeneratorPair(UnaryMonotone theta_, UnaryMonotone vartheta_,
                             double a_, std::string label_)
    : theta(std::move(theta_)),
      vartheta(std::move(vartheta_)),
      a(a_),
      label(std::move(label_)) {
  require(theta.direction() == Direction::decreasing,
          "GeneratorPair: theta must be decreasing");
  require(vartheta.direction() == Direction::decreasing,
          "GeneratorPair: vartheta must be decreasing");
  require(is_unit(theta.domain()) && is_nonneg(theta.codomain()),
          "GeneratorPair: theta must map [0,1] into [0,inf]");
  require(is_nonneg(vartheta.domain()) && is_unit(vartheta.codomain()),
          "GeneratorPair: vartheta must map [0,inf] into [0,1]");
  require(std::isfinite(a) && a >= 0.0, "GeneratorPair: a must be finite, >= 0");
}

DualGeneratorPair::DualGeneratorPair(UnaryMonotone t_, UnaryMonotone s_,
                                     double a_, std::string label_)
    : t(std::move(t_)), s(std::move(s_)), a(a_), label(std::move(label_)) {
  require(t.direction() == Direction::increasing,
          "DualGeneratorPair: t must be increasing");
  require(s.direction() == Direction::increasing,
          "DualGeneratorPair: s must be increasing");
  require(is_unit(t.domain()) && is_nonneg(t.codomain()),
          "DualGeneratorPair: t must map [0,1] into [0,inf]");
  require(is_nonneg(s.domain()) && is_unit(s.codomain()),
          "DualGeneratorPair: s must map [0,inf] into [0,1]");
  require(std::isfinite(a) && a >= 0.0,
          "DualGeneratorPair: a must be finite, >= 0");
}

BivariateOp build_overlap_additive(const GeneratorPair& pair) {
  UnaryMonotone theta = pair.theta;
  UnaryMonotone vartheta = pair.vartheta;
  return BivariateOp(
      [theta, vartheta](double x, double y) {
        return vartheta(theta(ExtReal(x)) + theta(ExtReal(y))).value();
      },
      BivariateOp::Provenance::additive_pair, "O[" + pair.label + "]");
}

BivariateOp build_grouping_additive(const DualGeneratorPair& pair) {
  UnaryMonotone t = pair.t;
  UnaryMonotone s = pair.s;
  return BivariateOp(
      [t, s](double x, double y) {
        return s(t(ExtReal(x)) + t(ExtReal(y))).value();
      },
      BivariateOp::Provenance::dual_pair, "G[" + pair.label + "]");
}

BivariateOp build_overlap_multiplicative(const UnaryMonotone& g,
                                         const UnaryMonotone& h) {
  require(g.direction() == Direction::increasing &&
              h.direction() == Direction::increasing,
          "build_overlap_multiplicative: g and h must be increasing");
  require(is_unit(g.domain()) && is_unit(g.codomain()) &&
              is_unit(h.domain()) && is_unit(h.codomain()),
          "build_overlap_multiplicative: g, h must map [0,1] into [0,1]");
  UnaryMonotone gc = g, hc = h;
  return BivariateOp(
      [gc, hc](double x, double y) {
        return gc(ExtReal(hc(ExtReal(x)).value() * hc(ExtReal(y)).value()))
            .value();
      },
      BivariateOp::Provenance::multiplicative_pair,
      "O[mult," + g.label() + "," + h.label() + "]");
}

BivariateOp build_distortion(const UnaryMonotone& F, const BivariateOp& T) {
  require(F.direction() == Direction::increasing && is_unit(F.domain()) &&
              is_unit(F.codomain()),
          "build_distortion: F must be increasing on [0,1]");
  UnaryMonotone Fc = F;
  BivariateOp Tc = T;
  return BivariateOp(
      [Fc, Tc](double x, double y) { return Fc(ExtReal(Tc(x, y))).value(); },
      BivariateOp::Provenance::distortion,
      "F(" + F.label() + ")o" + T.label());
}

DualGeneratorPair dual_of(const GeneratorPair& pair) {
  UnaryMonotone theta = pair.theta;
  UnaryMonotone vartheta = pair.vartheta;
  UnaryMonotone t(
      Interval::unit(), Interval::nonneg(), Direction::increasing,
      [theta](ExtReal x) { return theta(ExtReal(1.0 - x.value())); },
      "t[" + theta.label() + "]", theta.strict_hint());
  UnaryMonotone s(
      Interval::nonneg(), Interval::unit(), Direction::increasing,
      [vartheta](ExtReal u) { return ExtReal(1.0 - vartheta(u).value()); },
      "s[" + vartheta.label() + "]", vartheta.strict_hint());
  DualGeneratorPair dual(std::move(t), std::move(s), pair.a,
                         "dual-" + pair.label);
  dual.primal_source = pair;
  return dual;
}

GeneratorPair primal_of(const DualGeneratorPair& pair) {
  if (pair.primal_source) return *pair.primal_source;
  UnaryMonotone t = pair.t;
  UnaryMonotone s = pair.s;
  UnaryMonotone theta(
      Interval::unit(), Interval::nonneg(), Direction::decreasing,
      [t](ExtReal x) { return t(ExtReal(1.0 - x.value())); },
      "theta[" + t.label() + "]", t.strict_hint());
  UnaryMonotone vartheta(
      Interval::nonneg(), Interval::unit(), Direction::decreasing,
      [s](ExtReal u) { return ExtReal(1.0 - s(u).value()); },
      "vartheta[" + s.label() + "]", s.strict_hint());
  return GeneratorPair(std::move(theta), std::move(vartheta), pair.a,
                       "primal-" + pair.label);
}

BivariateOp dualize(const BivariateOp& op) {
  BivariateOp inner = op;
  return BivariateOp(
      [inner](double x, double y) {
        return 1.0 - inner(1.0 - x, 1.0 - y);
      },
      BivariateOp::Provenance::dualized, "dual[" + op.label() + "]");
}

CatalogEntry catalog(const std::string& name, double a) {
  static const char* pair_names[] = {"product-pair", "nonassoc-log",
                                     "hamacher-squared", "plateau-pair"};
  for (const char* p : pair_names) {
    if (name == p) return make_pair(name, a);
    if (name == std::string("dual-") + p) return dual_of(make_pair(p, a));
  }
  return builtin(name);
}

std::vector<std::string> catalog_names() {
  return {"product-pair",
          "nonassoc-log",
          "hamacher-squared",
          "plateau-pair",
          "dual-product-pair",
          "dual-nonassoc-log",
          "dual-hamacher-squared",
          "dual-plateau-pair",
          "product",
          "minimum",
          "maximum",
          "lukasiewicz",
          "probabilistic-sum",
          "hamacher"};
}

BivariateOp op_from_entry(const CatalogEntry& entry) {
  if (const auto* p = std::get_if<GeneratorPair>(&entry)) {
    return build_overlap_additive(*p);
  }
  if (const auto* d = std::get_if<DualGeneratorPair>(&entry)) {
    return build_grouping_additive(*d);
  }
  return std::get<BivariateOp>(entry);
}

std::optional<GeneratorPair> pair_from_entry(const CatalogEntry& entry) {
  if (const auto* p = std::get_if<GeneratorPair>(&entry)) return *p;
  if (const auto* d = std::get_if<DualGeneratorPair>(&entry)) {
    return primal_of(*d);
  }
  return std::nullopt;
}

}  // namespace overlapkit
