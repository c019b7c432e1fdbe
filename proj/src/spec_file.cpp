#include "overlapkit/spec_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "overlapkit/formatting.hpp"

namespace overlapkit {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
  throw MalformedInput("operator spec: " + what);
}

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

double number_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number()) bad(std::string("field '") + key + "' must be a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) bad(std::string("field '") + key + "' must be finite");
  return d;
}

double positive_field(const json& obj, const char* key) {
  double v = number_field(obj, key);
  if (!(v > 0.0)) bad(std::string("field '") + key + "' must be positive");
  return v;
}

double number_or(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  return number_field(obj, key);
}

UnaryMonotone make_theta(const json& spec, const std::string& f, double a) {
  const double half = a / 2.0;
  if (f == "log-offset") {
    double s = positive_field(spec, "scale");
    // Optional floor overrides theta(1) = a/2; raising it past a/2 breaks the
    // value-at-one condition so misconfigured pairs can be fed from a file.
    double floor = number_or(spec, "floor", half);
    if (floor < 0.0) bad("'theta.floor' must be >= 0");
    return UnaryMonotone(
        Interval::unit(), Interval::nonneg(), Direction::decreasing,
        [floor, s](ExtReal x) {
          if (x.value() == 0.0) return ExtReal::infinity();
          return ExtReal(floor + s * (-std::log(x.value())));
        },
        "theta:log-offset", true);
  }
  if (f == "power") {
    double s = positive_field(spec, "scale");
    double p = positive_field(spec, "p");
    return UnaryMonotone(
        Interval::unit(), Interval::nonneg(), Direction::decreasing,
        [half, s, p](ExtReal x) {
          double v = x.value();
          if (v == 0.0) return ExtReal::infinity();
          return ExtReal(half + s * std::pow((1.0 - v) / v, p));
        },
        "theta:power", true);
  }
  if (f == "rational") {
    double s = positive_field(spec, "scale");
    return UnaryMonotone(
        Interval::unit(), Interval::nonneg(), Direction::decreasing,
        [half, s](ExtReal x) {
          double v = x.value();
          if (v == 0.0) return ExtReal::infinity();
          return ExtReal(half + s * (1.0 - v) / v);
        },
        "theta:rational", true);
  }
  if (f == "plateau") {
    double lo = positive_field(spec, "lo");
    double hi = positive_field(spec, "hi");
    double level = positive_field(spec, "level");
    if (!(lo < hi && hi < 1.0)) bad("'theta.plateau' needs 0 < lo < hi < 1");
    return UnaryMonotone(
        Interval::unit(), Interval::nonneg(), Direction::decreasing,
        [half, lo, hi, level](ExtReal x) {
          double v = x.value();
          if (v == 0.0) return ExtReal::infinity();
          if (v < lo) return ExtReal(half + level + std::log(lo / v));
          if (v <= hi) return ExtReal(half + level);
          return ExtReal(half + level * (1.0 - v) / (1.0 - hi));
        },
        "theta:plateau", false);
  }
  if (f == "affine") {
    // Finite at 0: deliberately violates the infinity condition so failure
    // paths can be exercised from a file.
    double top = positive_field(spec, "top");
    return UnaryMonotone(
        Interval::unit(), Interval::nonneg(), Direction::decreasing,
        [half, top](ExtReal x) {
          return ExtReal(half + top * (1.0 - x.value()));
        },
        "theta:affine", true);
  }
  bad("unknown theta family '" + f + "'");
}

UnaryMonotone make_vartheta(const json& spec, const std::string& f, double a,
                            const UnaryMonotone& theta) {
  if (f == "exp-decay") {
    double r = positive_field(spec, "rate");
    return UnaryMonotone(
        Interval::nonneg(), Interval::unit(), Direction::decreasing,
        [a, r](ExtReal u) {
          if (u.is_infinite()) return ExtReal(0.0);
          double v = u.value() - a;
          if (v <= 0.0) return ExtReal(1.0);
          return ExtReal(std::exp(-r * v));
        },
        "vartheta:exp-decay");
  }
  if (f == "rational-decay") {
    double p = positive_field(spec, "p");
    return UnaryMonotone(
        Interval::nonneg(), Interval::unit(), Direction::decreasing,
        [a, p](ExtReal u) {
          if (u.is_infinite()) return ExtReal(0.0);
          if (u.value() <= a) return ExtReal(1.0);
          return ExtReal(std::pow((1.0 + a) / (1.0 + u.value()), p));
        },
        "vartheta:rational-decay");
  }
  if (f == "logistic-square") {
    return UnaryMonotone(
        Interval::nonneg(), Interval::unit(), Direction::decreasing,
        [a](ExtReal u) {
          if (u.is_infinite()) return ExtReal(0.0);
          double v = u.value() - a;
          if (v <= 0.0) return ExtReal(1.0);
          double w = 2.0 / (std::exp(v) + 1.0);
          return ExtReal(w * w);
        },
        "vartheta:logistic-square");
  }
  if (f == "plateau-exp") {
    double w = number_field(spec, "width");
    if (w < 0.0) bad("'vartheta.width' must be >= 0");
    double r = positive_field(spec, "rate");
    double edge = a + w;
    return UnaryMonotone(
        Interval::nonneg(), Interval::unit(), Direction::decreasing,
        [edge, r](ExtReal u) {
          if (u.is_infinite()) return ExtReal(0.0);
          double v = u.value() - edge;
          if (v <= 0.0) return ExtReal(1.0);
          return ExtReal(std::exp(-r * v));
        },
        "vartheta:plateau-exp");
  }
  if (f == "pseudo-inverse") {
    const double half = a / 2.0;
    UnaryMonotone shifted(
        Interval::unit(), Interval::nonneg(), Direction::decreasing,
        [theta, half](ExtReal x) { return theta(x) + ExtReal(half); },
        theta.label() + "+" + fmt_g(half), theta.strict_hint());
    return pseudo_inverse_fn(shifted, tolerance::pinv, Interval::nonneg());
  }
  bad("unknown vartheta family '" + f + "'");
}

}  // namespace

CatalogEntry parse_operator_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    bad(std::string("parse error: ") + e.what());
  }
  if (!doc.is_object()) bad("top level must be an object");

  std::string kind = string_field(doc, "kind");
  if (kind != "overlap-additive" && kind != "grouping-additive") {
    bad("unknown kind '" + kind + "'");
  }
  double a = number_field(doc, "a");
  if (a < 0.0) bad("'a' must be >= 0");

  const json& theta_spec = field(doc, "theta");
  const json& vt_spec = field(doc, "vartheta");
  if (!theta_spec.is_object()) bad("'theta' must be an object");
  if (!vt_spec.is_object()) bad("'vartheta' must be an object");
  std::string theta_family = string_field(theta_spec, "family");
  std::string vt_family = string_field(vt_spec, "family");

  std::string label;
  if (doc.contains("label")) {
    label = string_field(doc, "label");
  } else {
    label = "spec[" + theta_family + "," + vt_family + ",a=" + fmt_g(a) + "]";
  }

  UnaryMonotone theta = make_theta(theta_spec, theta_family, a);
  UnaryMonotone vartheta = make_vartheta(vt_spec, vt_family, a, theta);
  GeneratorPair pair(std::move(theta), std::move(vartheta), a, label);
  if (kind == "grouping-additive") return CatalogEntry(dual_of(pair));
  return CatalogEntry(std::move(pair));
}

CatalogEntry load_operator_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_operator_spec(buf.str());
}

}  // namespace overlapkit
