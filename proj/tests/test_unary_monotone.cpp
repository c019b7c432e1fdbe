#include <cmath>
#include <vector>

#include "doctest.h"
#include "overlapkit/errors.hpp"
#include "overlapkit/unary_monotone.hpp"

using namespace overlapkit;

namespace {

UnaryMonotone one_minus_x() {
  return UnaryMonotone(Interval::unit(), Interval::unit(),
                       Direction::decreasing,
                       [](ExtReal x) { return ExtReal(1.0 - x.value()); },
                       "1-x");
}

// 2 - ln x, infinite at 0: the usual shape of an additive generator.
UnaryMonotone log_gen() {
  return UnaryMonotone(Interval::unit(), Interval::nonneg(),
                       Direction::decreasing,
                       [](ExtReal x) {
                         if (x.value() == 0.0) return ExtReal::infinity();
                         return ExtReal(2.0 - std::log(x.value()));
                       },
                       "2-ln(x)");
}

UnaryMonotone square() {
  return UnaryMonotone(Interval::unit(), Interval::unit(),
                       Direction::increasing,
                       [](ExtReal x) { return ExtReal(x.value() * x.value()); },
                       "x^2");
}

}  // namespace

TEST_CASE("compactification maps [0,inf] onto [0,1]") {
  CHECK(compactify(ExtReal(0.0)) == 0.0);
  CHECK(compactify(ExtReal::infinity()) == 1.0);
  CHECK(compactify(ExtReal(1.0)) == doctest::Approx(0.5));
  CHECK(uncompactify(0.5).value() == doctest::Approx(1.0));
  CHECK(uncompactify(1.0).is_infinite());
  CHECK(uncompactify(compactify(ExtReal(7.25))).value() ==
        doctest::Approx(7.25));
}

TEST_CASE("pseudo-inverse of 1-x recovers the reflection") {
  UnaryMonotone f = one_minus_x();
  CHECK(pseudo_inverse(f, ExtReal(0.3)).value() == doctest::Approx(0.7));
  CHECK(pseudo_inverse(f, ExtReal(0.0)).value() == doctest::Approx(1.0));
}

TEST_CASE("pseudo-inverse of a log generator hits frozen values") {
  UnaryMonotone th = log_gen();
  // { theta > 3 } = [0, e^-1)
  CHECK(pseudo_inverse(th, ExtReal(3.0)).value() ==
        doctest::Approx(0.36787944117144233).epsilon(1e-9));
  // { theta > 2 } = [0, 1): sup found by bisection.
  CHECK(pseudo_inverse(th, ExtReal(2.0)).value() ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("empty and full solution sets return exact endpoints") {
  UnaryMonotone th = log_gen();
  // theta > 1 everywhere: full set, exact right endpoint.
  CHECK(pseudo_inverse(th, ExtReal(1.0)).value() == 1.0);
  // theta > inf nowhere: empty set, exact left endpoint.
  CHECK(pseudo_inverse(th, ExtReal::infinity()).value() == 0.0);

  UnaryMonotone sq = square();
  // x^2 < 0 nowhere.
  CHECK(pseudo_inverse(sq, ExtReal(0.0)).value() == 0.0);
  // x^2 < 2 everywhere.
  CHECK(pseudo_inverse(sq, ExtReal(2.0)).value() == 1.0);
}

TEST_CASE("pseudo-inverse of an increasing map uses the strict sublevel set") {
  UnaryMonotone sq = square();
  CHECK(pseudo_inverse(sq, ExtReal(0.25)).value() == doctest::Approx(0.5));
  CHECK(pseudo_inverse(sq, ExtReal(0.81)).value() == doctest::Approx(0.9));
}

TEST_CASE("strict continuous maps round-trip through the pseudo-inverse") {
  UnaryMonotone th = log_gen();
  for (double x : {0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
    ExtReal back = pseudo_inverse(th, th(ExtReal(x)));
    CHECK(std::fabs(back.value() - x) <= 1e-9);
  }
}

TEST_CASE("pseudo-inverse agrees with a brute-force sup over a fine grid") {
  const int n = 1000001;
  auto brute_dec = [&](const UnaryMonotone& f, double y) {
    // sup { x : f(x) > y } estimated from below on the grid.
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
      double x = static_cast<double>(i) / (n - 1);
      if (f(ExtReal(x)) > ExtReal(y)) best = x;
    }
    return best;
  };
  UnaryMonotone f(Interval::unit(), Interval::unit(), Direction::decreasing,
                  [](ExtReal x) { return ExtReal(std::exp(-3.0 * x.value())); },
                  "exp(-3x)");
  for (double y : {0.9, 0.5, 0.1, 0.0498}) {
    double ref = brute_dec(f, y);
    double got = pseudo_inverse(f, ExtReal(y)).value();
    CHECK(std::fabs(got - ref) <= 2e-6);
  }

  auto brute_inc = [&](const UnaryMonotone& f2, double y) {
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
      double x = static_cast<double>(i) / (n - 1);
      if (f2(ExtReal(x)) < ExtReal(y)) best = x;
    }
    return best;
  };
  UnaryMonotone g(Interval::unit(), Interval::unit(), Direction::increasing,
                  [](ExtReal x) { return ExtReal(std::pow(x.value(), 3)); },
                  "x^3");
  for (double y : {0.7, 0.2, 0.027}) {
    double ref = brute_inc(g, y);
    double got = pseudo_inverse(g, ExtReal(y)).value();
    CHECK(std::fabs(got - ref) <= 2e-6);
  }
}

TEST_CASE("pseudo_inverse_fn packages the inverse with swapped intervals") {
  UnaryMonotone th = log_gen();
  UnaryMonotone inv = pseudo_inverse_fn(th);
  CHECK(inv.direction() == Direction::decreasing);
  CHECK(inv.domain().hi.is_infinite());
  CHECK(inv.codomain().hi.value() == 1.0);
  CHECK(inv.label() == "pinv(2-ln(x))");
  // Arguments below the generator's floor land on the full-set endpoint.
  CHECK(inv(ExtReal(0.5)).value() == 1.0);
  CHECK(inv(ExtReal(3.0)).value() ==
        doctest::Approx(0.36787944117144233).epsilon(1e-9));
  CHECK(inv(ExtReal::infinity()).value() == 0.0);

  UnaryMonotone sq_inv = pseudo_inverse_fn(square());
  CHECK(sq_inv.direction() == Direction::increasing);
  CHECK(sq_inv(ExtReal(0.25)).value() == doctest::Approx(0.5));
}

TEST_CASE("strictness probe flags a flat stretch with its endpoints") {
  UnaryMonotone hinge(Interval::unit(), Interval::unit(),
                      Direction::decreasing,
                      [](ExtReal x) {
                        return ExtReal(std::max(0.0, 1.0 - 2.0 * x.value()));
                      },
                      "hinge");
  StrictnessProbe p = probe_strictness(hinge);
  CHECK_FALSE(p.strict);
  CHECK(p.plateau_lo.value() == doctest::Approx(0.5).epsilon(2e-3));
  CHECK(p.plateau_hi.value() == doctest::Approx(1.0));

  UnaryMonotone expf(Interval::unit(), Interval::unit(), Direction::decreasing,
                     [](ExtReal x) { return ExtReal(std::exp(-x.value())); },
                     "exp(-x)");
  CHECK(probe_strictness(expf).strict);
  CHECK(probe_strictness(log_gen()).strict);
}

TEST_CASE("a map moving against its declared direction is rejected") {
  UnaryMonotone lied(Interval::unit(), Interval::unit(), Direction::decreasing,
                     [](ExtReal x) { return x; }, "identity-lying");
  CHECK_THROWS_AS(pseudo_inverse(lied, ExtReal(0.5)), NonMonotoneDetected);
  CHECK_THROWS_AS(probe_strictness(lied), NonMonotoneDetected);
}

TEST_CASE("arguments are clamped into the domain, results into the codomain") {
  UnaryMonotone f = one_minus_x();
  CHECK(f(ExtReal(2.0)).value() == 0.0);  // argument clamps to x = 1

  UnaryMonotone noisy(Interval::unit(), Interval::unit(),
                      Direction::increasing,
                      [](ExtReal) { return ExtReal(1.0 + 5e-15); }, "noisy");
  CHECK(noisy(ExtReal(0.5)).value() == 1.0);  // within range slack

  UnaryMonotone wild(Interval::unit(), Interval::unit(), Direction::increasing,
                     [](ExtReal) { return ExtReal(1.2); }, "wild");
  CHECK_THROWS_AS(wild(ExtReal(0.5)), std::domain_error);
}

TEST_CASE("strict hints ride along untouched") {
  UnaryMonotone f(Interval::unit(), Interval::unit(), Direction::decreasing,
                  [](ExtReal x) { return ExtReal(1.0 - x.value()); }, "1-x",
                  true);
  CHECK(f.strict_hint().has_value());
  CHECK(*f.strict_hint() == true);
  CHECK(pseudo_inverse_fn(f).strict_hint().has_value());
  CHECK_FALSE(one_minus_x().strict_hint().has_value());
}
