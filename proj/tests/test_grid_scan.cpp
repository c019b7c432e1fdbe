#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "overlapkit/grid.hpp"
#include "overlapkit/scan.hpp"

using namespace overlapkit;

TEST_CASE("uniform grids have exact endpoints and preserved refinements") {
  Grid g = Grid::uniform(101);
  CHECK(g.n() == 101);
  CHECK(g[0] == 0.0);
  CHECK(g[100] == 1.0);
  CHECK(g[50] == 0.5);
  CHECK(g.step() == doctest::Approx(0.01));
  CHECK(g.refinement_depth() == 0);

  Grid r = g.refined();
  CHECK(r.n() == 201);
  CHECK(r.refinement_depth() == 1);
  for (int i = 0; i < g.n(); ++i) {
    CHECK(r[2 * i] == g[i]);  // old points survive halving exactly
  }

  CHECK_THROWS_AS(Grid::uniform(2), std::invalid_argument);
}

TEST_CASE("serial and parallel max scans are bitwise identical") {
  const std::size_t count = 200003;
  auto metric = [](std::size_t i) {
    double x = static_cast<double>(i) * 1e-5;
    return std::sin(x) * std::exp(-x * 1e-3);
  };
  int saved = scan::resolved_threads();
  scan::set_threads(1);
  scan::Extremum s = scan::max_metric(count, metric);
  scan::set_threads(4);
  scan::Extremum p = scan::max_metric(count, metric);
  scan::set_threads(saved);

  CHECK(s.value == p.value);
  CHECK(s.index == p.index);
  CHECK(s.value == scan::max_metric_serial(count, metric).value);
  CHECK(p.index == scan::max_metric_parallel(count, metric).index);
}

TEST_CASE("ties resolve to the smallest index in both kernels") {
  auto metric = [](std::size_t i) {
    return (i % 10 == 3) ? 1.0 : 0.0;  // first maximizer is index 3
  };
  int saved = scan::resolved_threads();
  scan::set_threads(4);
  scan::Extremum p = scan::max_metric_parallel(std::size_t{100000}, metric);
  scan::set_threads(saved);
  scan::Extremum s = scan::max_metric_serial(std::size_t{100000}, metric);
  CHECK(s.index == 3);
  CHECK(p.index == 3);
  CHECK(s.value == 1.0);
}

TEST_CASE("index collection is sorted and scheduling independent") {
  const std::size_t count = 50000;
  auto pred = [](std::size_t i) { return i % 37 == 0; };
  int saved = scan::resolved_threads();
  scan::set_threads(1);
  auto s = scan::collect_indices(count, pred);
  scan::set_threads(4);
  auto p = scan::collect_indices(count, pred);
  scan::set_threads(saved);
  CHECK(s == p);
  REQUIRE(!s.empty());
  CHECK(s.front() == 0);
  for (std::size_t k = 1; k < s.size(); ++k) CHECK(s[k - 1] < s[k]);
}

TEST_CASE("an empty scan reports the sentinel extremum") {
  scan::Extremum e = scan::max_metric_serial(0, [](std::size_t) { return 1.0; });
  CHECK(std::isinf(e.value));
  CHECK(e.value < 0);
}
