#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "overlapkit/generator_pair.hpp"
#include "overlapkit/grid.hpp"
#include "overlapkit/random_pairs.hpp"

using namespace overlapkit;

namespace {

GeneratorPair cat_pair(const std::string& name, double a) {
  return std::get<GeneratorPair>(catalog(name, a));
}

}  // namespace

TEST_CASE("product pair reproduces multiplication for every relaxation") {
  for (double a : {0.0, 1.0, 2.0, 10.0}) {
    BivariateOp O = build_overlap_additive(cat_pair("product-pair", a));
    CHECK(O(0.5, 0.4) == doctest::Approx(0.2).epsilon(1e-12));
    Grid g = Grid::uniform(101);
    double worst = 0.0;
    for (double x : g.points()) {
      for (double y : g.points()) {
        worst = std::max(worst, std::fabs(O(x, y) - x * y));
      }
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("log pair hits its closed-form values") {
  BivariateOp O = build_overlap_additive(cat_pair("nonassoc-log", 1.0));
  // O(x,y) = 1 / (1 - ln(xy))
  CHECK(O(std::exp(-1.0), 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(O(0.5, 1.0) ==
        doctest::Approx(0.5906161091496412).epsilon(1e-12));
  CHECK(O(0.0, 0.7) == 0.0);
  CHECK(O(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(catalog("nonassoc-log", 0.0), std::invalid_argument);
}

TEST_CASE("squared hamacher pair matches its closed form") {
  BivariateOp O = build_overlap_additive(cat_pair("hamacher-squared", 1.0));
  CHECK(O(0.5, 0.5) == doctest::Approx(0.04).epsilon(1e-12));
  Grid g = Grid::uniform(101);
  for (double x : g.points()) {
    CHECK(std::fabs(O(x, 1.0) - x * x) <= 1e-9);
  }
  double x = 0.3, y = 0.8;
  double ref = std::pow(x * y / (2.0 - x - y + x * y), 2);
  CHECK(O(x, y) == doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("plateau pair builds a unit-valued corner") {
  BivariateOp O = build_overlap_additive(cat_pair("plateau-pair", 1.0));
  CHECK(O(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(O(0.0, 0.5) == 0.0);
  CHECK(O(0.5, 0.5) > 0.0);
  CHECK(O(0.5, 0.5) < 1.0);
}

TEST_CASE("duals mirror through the standard negation") {
  GeneratorPair pp = cat_pair("product-pair", 1.0);
  DualGeneratorPair dp = dual_of(pp);
  BivariateOp G = build_grouping_additive(dp);
  CHECK(G(0.5, 0.4) == doctest::Approx(0.7).epsilon(1e-12));

  BivariateOp O = build_overlap_additive(pp);
  BivariateOp Gd = dualize(O);
  Grid g = Grid::uniform(41);
  for (double x : g.points()) {
    for (double y : g.points()) {
      CHECK(std::fabs(G(x, y) - Gd(x, y)) <= 1e-12);
    }
  }
  CHECK(dp.label == "dual-" + pp.label);
}

TEST_CASE("primal of dual recovers the original operator") {
  for (const char* name : {"product-pair", "hamacher-squared"}) {
    GeneratorPair pp = cat_pair(name, 1.0);
    GeneratorPair back = primal_of(dual_of(pp));
    CHECK(back.label == pp.label);
    BivariateOp O1 = build_overlap_additive(pp);
    BivariateOp O2 = build_overlap_additive(back);
    for (double x : {0.0, 0.25, 0.3, 0.5, 0.75, 0.9, 1.0}) {
      for (double y : {0.0, 0.25, 0.5, 0.8, 1.0}) {
        CHECK(std::fabs(O1(x, y) - O2(x, y)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("multiplicative construction composes its unary parts") {
  UnaryMonotone g(Interval::unit(), Interval::unit(), Direction::increasing,
                  [](ExtReal u) { return ExtReal(u.value() * u.value()); },
                  "u^2");
  UnaryMonotone h(Interval::unit(), Interval::unit(), Direction::increasing,
                  [](ExtReal u) { return u; }, "id");
  BivariateOp O = build_overlap_multiplicative(g, h);
  CHECK(O(0.5, 0.5) == doctest::Approx(0.0625).epsilon(1e-12));
  CHECK(O(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(O(0.0, 1.0) == 0.0);
  CHECK(O.provenance() == BivariateOp::Provenance::multiplicative_pair);
}

TEST_CASE("distortion construction is outer-then-inner composition") {
  UnaryMonotone F(Interval::unit(), Interval::unit(), Direction::increasing,
                  [](ExtReal u) { return ExtReal(u.value() * u.value()); },
                  "u^2");
  BivariateOp T = std::get<BivariateOp>(catalog("product", 0.0));
  BivariateOp O = build_distortion(F, T);
  CHECK(O(0.5, 0.4) == doctest::Approx(0.04).epsilon(1e-12));
  CHECK(O.provenance() == BivariateOp::Provenance::distortion);
}

TEST_CASE("catalog inventory is complete and every entry resolves") {
  auto names = catalog_names();
  CHECK(names.size() == 14);
  std::set<std::string> uniq(names.begin(), names.end());
  CHECK(uniq.size() == names.size());
  CHECK(uniq.count("product-pair") == 1);
  CHECK(uniq.count("dual-plateau-pair") == 1);
  CHECK(uniq.count("lukasiewicz") == 1);
  for (const auto& name : names) {
    CatalogEntry e = catalog(name, 1.0);
    BivariateOp op = op_from_entry(e);
    double v = op(0.5, 0.5);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
  CHECK_THROWS_AS(catalog("no-such-entry", 1.0), UnknownCatalogEntry);
}

TEST_CASE("builtin operators take their textbook values") {
  auto val = [](const char* n, double x, double y) {
    return op_from_entry(catalog(n, 0.0))(x, y);
  };
  CHECK(val("product", 0.5, 0.4) == doctest::Approx(0.2));
  CHECK(val("minimum", 0.5, 0.4) == doctest::Approx(0.4));
  CHECK(val("maximum", 0.5, 0.4) == doctest::Approx(0.5));
  CHECK(val("lukasiewicz", 0.7, 0.5) == doctest::Approx(0.2));
  CHECK(val("lukasiewicz", 0.2, 0.3) == 0.0);
  CHECK(val("probabilistic-sum", 0.5, 0.4) == doctest::Approx(0.7));
  // xy / (2 - x - y + xy), the strict Hamacher member behind the squared pair
  CHECK(val("hamacher", 0.5, 0.5) == doctest::Approx(0.2));
  CHECK(val("hamacher", 0.3, 1.0) == doctest::Approx(0.3));
}

TEST_CASE("pair extraction works for pair, dual and plain entries") {
  CHECK(pair_from_entry(catalog("product-pair", 1.0)).has_value());
  auto via_dual = pair_from_entry(catalog("dual-product-pair", 1.0));
  REQUIRE(via_dual.has_value());
  BivariateOp O = build_overlap_additive(*via_dual);
  CHECK(O(0.5, 0.4) == doctest::Approx(0.2).epsilon(1e-9));
  CHECK_FALSE(pair_from_entry(catalog("product", 0.0)).has_value());
}

TEST_CASE("additive constructions are bitwise symmetric") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 6; ++k) {
    GeneratorPair pair = make_random_valid_pair(rng, k % 2 == 0);
    BivariateOp O = build_overlap_additive(pair);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int j = 0; j < 50; ++j) {
      double x = unit(rng), y = unit(rng);
      CHECK(O(x, y) == O(y, x));  // exact: extended addition commutes
    }
  }
}

TEST_CASE("random valid pairs are reproducible from the seed") {
  std::mt19937_64 a(123), b(123);
  GeneratorPair p1 = make_random_valid_pair(a, false);
  GeneratorPair p2 = make_random_valid_pair(b, false);
  CHECK(p1.label == p2.label);
  BivariateOp O1 = build_overlap_additive(p1);
  BivariateOp O2 = build_overlap_additive(p2);
  for (double x : {0.1, 0.37, 0.93}) {
    CHECK(O1(x, 0.5) == O2(x, 0.5));
  }
}
