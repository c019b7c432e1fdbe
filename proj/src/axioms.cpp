#include "overlapkit/axioms.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "overlapkit/scan.hpp"

namespace overlapkit {

namespace {

constexpr double kJumpShrink = 0.95;  // continuity: refined jump must shrink this much
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxRefinedCells = 64;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Operator values over the full grid, row-major in x. Filled in parallel;
/// each cell is computed independently, so the contents are identical to a
/// serial fill.
std::vector<double> fill_cache(const BivariateOp& op, const Grid& g) {
  const int n = g.n();
  std::vector<double> cache(static_cast<std::size_t>(n) * n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(scan::resolved_threads())
#endif
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cache[static_cast<std::size_t>(i) * n + j] = op(g[i], g[j]);
    }
  }
  return cache;
}

Witness point_witness(double x, double y, double lhs, double rhs,
                      double defect) {
  Witness w;
  w.x = x;
  w.y = y;
  w.lhs = lhs;
  w.rhs = rhs;
  w.defect = defect;
  return w;
}

AxiomResult commutativity_check(const std::string& id,
                                const std::vector<double>& cache,
                                const Grid& g, double tol) {
  const int n = g.n();
  auto metric = [&](std::size_t idx) {
    std::size_t i = idx / n, j = idx % n;
    return std::fabs(cache[i * n + j] - cache[j * n + i]);
  };
  auto best = scan::max_metric(static_cast<std::size_t>(n) * n, metric);
  std::size_t i = best.index / n, j = best.index % n;
  AxiomResult r;
  r.id = id;
  r.tol = tol;
  r.verdict = best.value <= tol ? Verdict::pass : Verdict::fail;
  r.witness = point_witness(g[i], g[j], cache[i * n + j], cache[j * n + i],
                            best.value);
  return r;
}

AxiomResult monotonicity_check(const std::string& id,
                               const std::vector<double>& cache,
                               const Grid& g) {
  const int n = g.n();
  // Block 0: steps along x, block 1: steps along y. Adjacent differences
  // suffice by transitivity. Positive metric = decrease where an increase
  // is required.
  const std::size_t block = static_cast<std::size_t>(n - 1) * n;
  auto metric = [&](std::size_t idx) {
    if (idx < block) {
      std::size_t i = idx / n, j = idx % n;
      return cache[i * n + j] - cache[(i + 1) * n + j];
    }
    std::size_t k = idx - block;
    std::size_t i = k / (n - 1), j = k % (n - 1);
    return cache[i * n + j] - cache[i * n + j + 1];
  };
  auto best = scan::max_metric(2 * block, metric);
  AxiomResult r;
  r.id = id;
  r.tol = tolerance::mono;
  r.verdict = best.value <= tolerance::mono ? Verdict::pass : Verdict::fail;
  double xw, yw, lhs, rhs;
  if (best.index < block) {
    std::size_t i = best.index / n, j = best.index % n;
    xw = g[static_cast<int>(i) + 1];
    yw = g[static_cast<int>(j)];
    lhs = cache[(i + 1) * n + j];
    rhs = cache[i * n + j];
  } else {
    std::size_t k = best.index - block;
    std::size_t i = k / (n - 1), j = k % (n - 1);
    xw = g[static_cast<int>(i)];
    yw = g[static_cast<int>(j) + 1];
    lhs = cache[i * n + j + 1];
    rhs = cache[i * n + j];
  }
  r.witness = point_witness(xw, yw, lhs, rhs, best.value);
  return r;
}

struct JumpScan {
  double value;
  double x, y;  // lower corner of the cell with the largest adjacent jump
};

JumpScan max_adjacent_jump(const std::vector<double>& cache, const Grid& g) {
  const int n = g.n();
  const std::size_t block = static_cast<std::size_t>(n - 1) * n;
  auto metric = [&](std::size_t idx) {
    if (idx < block) {
      std::size_t i = idx / n, j = idx % n;
      return std::fabs(cache[(i + 1) * n + j] - cache[i * n + j]);
    }
    std::size_t k = idx - block;
    std::size_t i = k / (n - 1), j = k % (n - 1);
    return std::fabs(cache[i * n + j + 1] - cache[i * n + j]);
  };
  auto best = scan::max_metric(2 * block, metric);
  std::size_t i, j;
  if (best.index < block) {
    i = best.index / n;
    j = best.index % n;
  } else {
    std::size_t k = best.index - block;
    i = k / (n - 1);
    j = k % (n - 1);
  }
  return {best.value, g[static_cast<int>(i)], g[static_cast<int>(j)]};
}

/// Exact zeros strictly inside the unit square fail outright; positive
/// values at or below tol get one local refinement round (the smallest
/// kMaxRefinedCells of them) that hunts hidden exact zeros. Returns a fail
/// witness or nothing.
std::optional<Witness> interior_zero_scan(const BivariateOp& op,
                                          const std::vector<double>& cache,
                                          const Grid& g, double tol) {
  const int n = g.n();
  const std::size_t interior = static_cast<std::size_t>(n - 1) * (n - 1);
  auto at = [&](std::size_t idx) {
    std::size_t i = idx / (n - 1) + 1, j = idx % (n - 1) + 1;
    return std::pair<std::size_t, std::size_t>{i, j};
  };

  // Hard fail: the most interior exact zero (max of min(x,y)).
  auto zero_metric = [&](std::size_t idx) {
    auto [i, j] = at(idx);
    if (cache[i * n + j] != 0.0) return kNegInf;
    return std::fmin(g[static_cast<int>(i)], g[static_cast<int>(j)]);
  };
  auto worst = scan::max_metric(interior, zero_metric);
  if (worst.value > kNegInf) {
    auto [i, j] = at(worst.index);
    return point_witness(g[static_cast<int>(i)], g[static_cast<int>(j)], 0.0,
                         0.0, worst.value);
  }

  // Suspicious cells: positive but inside tolerance. Refine the smallest
  // few on an 11x11 neighborhood; only an exact zero off the axes fails.
  auto suspicious = scan::collect_indices(interior, [&](std::size_t idx) {
    auto [i, j] = at(idx);
    double v = cache[i * n + j];
    return v > 0.0 && v <= tol;
  });
  if (suspicious.size() > kMaxRefinedCells) {
    std::sort(suspicious.begin(), suspicious.end(),
              [&](std::size_t a, std::size_t b) {
                auto [ai, aj] = at(a);
                auto [bi, bj] = at(b);
                double va = cache[ai * n + aj], vb = cache[bi * n + bj];
                return va < vb || (va == vb && a < b);
              });
    suspicious.resize(kMaxRefinedCells);
    std::sort(suspicious.begin(), suspicious.end());
  }
  const double h = g.step();
  for (std::size_t idx : suspicious) {
    auto [i, j] = at(idx);
    double cx = g[static_cast<int>(i)], cy = g[static_cast<int>(j)];
    for (int a = 0; a <= 10; ++a) {
      for (int b = 0; b <= 10; ++b) {
        double sx = std::clamp(cx - h + 2.0 * h * a / 10, 0.0, 1.0);
        double sy = std::clamp(cy - h + 2.0 * h * b / 10, 0.0, 1.0);
        if (sx == 0.0 || sy == 0.0) continue;
        if (op(sx, sy) == 0.0) {
          return point_witness(sx, sy, 0.0, 0.0, std::fmin(sx, sy));
        }
      }
    }
  }
  return std::nullopt;
}

AxiomResult one_only_at_corner(const std::string& id,
                               const std::vector<double>& cache,
                               const Grid& g, double tol) {
  const int n = g.n();
  AxiomResult r;
  r.id = id;
  r.tol = tol;

  double corner = cache[static_cast<std::size_t>(n - 1) * n + (n - 1)];
  if (std::fabs(corner - 1.0) > tolerance::boundary_one) {
    r.verdict = Verdict::fail;
    r.witness = point_witness(1.0, 1.0, corner, 1.0, std::fabs(corner - 1.0));
    return r;
  }

  // Only-if direction, skipping the one-cell band at the upper boundary
  // where a continuous operator is legitimately close to 1.
  const std::size_t band = static_cast<std::size_t>(n - 1);
  auto metric = [&](std::size_t idx) {
    std::size_t i = idx / band, j = idx % band;
    return cache[i * n + j];
  };
  auto best = scan::max_metric(band * band, metric);
  if (best.value >= 1.0 - tol) {
    std::size_t i = best.index / band, j = best.index % band;
    r.verdict = Verdict::fail;
    r.witness =
        point_witness(g[static_cast<int>(i)], g[static_cast<int>(j)],
                      best.value, 1.0, best.value - (1.0 - tol));
  } else {
    r.verdict = Verdict::pass;
  }
  return r;
}

AxiomResult continuity_heuristic(const std::string& id,
                                 const BivariateOp& op,
                                 const std::vector<double>& cache,
                                 const Grid& g, double tol) {
  JumpScan coarse = max_adjacent_jump(cache, g);
  Grid fine = g.refined();
  std::vector<double> fine_cache = fill_cache(op, fine);
  JumpScan refined = max_adjacent_jump(fine_cache, fine);

  AxiomResult r;
  r.id = id;
  r.tol = kJumpShrink;
  bool shrinks = refined.value <= kJumpShrink * coarse.value + 1e-12;
  bool flat = coarse.value <= tol;
  r.verdict = (shrinks || flat) ? Verdict::pass : Verdict::inconclusive;
  Witness w = point_witness(refined.x, refined.y, coarse.value, refined.value,
                            coarse.value > 0.0 ? refined.value / coarse.value
                                               : 0.0);
  r.witness = w;
  return r;
}

// ---------------------------------------------------------------------------
// Mirroring: grouping and t-conorm checks reuse the overlap/t-norm engines on
// the dualized operator; witnesses map back via (x,y) -> (1-x,1-y) and
// operator values via v -> 1-v. Jump magnitudes and defects are invariant.

struct MirrorRule {
  const char* from;
  const char* to;
  bool flip_values;
};

VerificationReport mirror_report(VerificationReport in, std::string subject,
                                 const std::vector<MirrorRule>& rules,
                                 const std::vector<std::string>& order) {
  VerificationReport out;
  out.subject = std::move(subject);
  out.grid = in.grid;
  out.vacuous = in.vacuous;
  out.wall_seconds = in.wall_seconds;
  for (auto& ax : in.axioms) {
    const MirrorRule* rule = nullptr;
    for (const auto& r : rules) {
      if (ax.id == r.from) {
        rule = &r;
        break;
      }
    }
    AxiomResult m = ax;
    if (rule) m.id = rule->to;
    if (m.witness) {
      Witness& w = *m.witness;
      w.x = 1.0 - w.x;
      if (w.y) w.y = 1.0 - *w.y;
      if (w.z) w.z = 1.0 - *w.z;
      if (rule && rule->flip_values) {
        w.lhs = 1.0 - w.lhs;
        w.rhs = 1.0 - w.rhs;
      }
    }
    out.axioms.push_back(std::move(m));
  }
  // Re-emit in the mirror world's natural order.
  std::vector<AxiomResult> sorted;
  for (const auto& id : order) {
    for (auto& ax : out.axioms) {
      if (ax.id == id) sorted.push_back(ax);
    }
  }
  if (sorted.size() == out.axioms.size()) out.axioms = std::move(sorted);
  return out;
}

// Pair-condition helpers, shared with check_necessary_conditions. ----------

std::vector<ExtReal> compact_points(ExtReal lo, ExtReal hi, int n) {
  std::vector<ExtReal> xs(n);
  double clo = compactify(lo), chi = compactify(hi);
  for (int i = 0; i < n; ++i) {
    xs[i] = uncompactify(clo + (chi - clo) * i / (n - 1));
  }
  return xs;
}

double finite_or(double v, double fallback) {
  return std::isfinite(v) ? v : fallback;
}

AxiomResult theta_infinite_only_at_zero(const std::string& id,
                                        const UnaryMonotone& theta,
                                        const Grid& g) {
  AxiomResult r;
  r.id = id;
  r.tol = 0.0;
  ExtReal at0 = theta(ExtReal(0.0));
  if (!at0.is_infinite()) {
    r.verdict = Verdict::fail;
    Witness w;
    w.x = 0.0;
    w.lhs = at0.value();
    w.rhs = std::numeric_limits<double>::infinity();
    w.defect = 1.0;
    r.witness = w;
    return r;
  }
  const int n = g.n();
  auto metric = [&](std::size_t idx) {
    int i = static_cast<int>(idx) + 1;
    return theta(ExtReal(g[i])).is_infinite() ? g[i] : kNegInf;
  };
  auto best = scan::max_metric(static_cast<std::size_t>(n - 1), metric);
  if (best.value > kNegInf) {
    r.verdict = Verdict::fail;
    Witness w;
    w.x = best.value;
    w.lhs = std::numeric_limits<double>::infinity();
    w.rhs = 0.0;
    w.defect = best.value;
    r.witness = w;
  } else {
    r.verdict = Verdict::pass;
  }
  return r;
}

AxiomResult theta_floor_only_at_one(const std::string& id,
                                    const UnaryMonotone& theta, double a,
                                    const Grid& g) {
  AxiomResult r;
  r.id = id;
  r.tol = tolerance::plateau;
  const double half = a / 2.0;
  double gap = ext_gap(theta(ExtReal(1.0)), ExtReal(half));
  if (gap > tolerance::plateau) {
    r.verdict = Verdict::fail;
    Witness w;
    w.x = 1.0;
    w.lhs = finite_or(theta(ExtReal(1.0)).value(),
                      std::numeric_limits<double>::infinity());
    w.rhs = half;
    w.defect = gap;
    r.witness = w;
    return r;
  }
  // Attainment of the floor anywhere left of the one-cell boundary band.
  const int n = g.n();
  auto metric = [&](std::size_t idx) {
    ExtReal v = theta(ExtReal(g[static_cast<int>(idx)]));
    if (v.is_infinite()) return kNegInf;
    return (half + tolerance::plateau) - v.value();
  };
  auto best = scan::max_metric(static_cast<std::size_t>(n - 2), metric);
  if (best.value > 0.0) {
    int i = static_cast<int>(best.index);
    r.verdict = Verdict::fail;
    Witness w;
    w.x = g[i];
    w.lhs = theta(ExtReal(g[i])).value();
    w.rhs = half;
    w.defect = best.value;
    r.witness = w;
  } else {
    r.verdict = Verdict::pass;
  }
  return r;
}

AxiomResult vartheta_one_exactly_on_0a(const std::string& id,
                                       const UnaryMonotone& vartheta, double a,
                                       const Grid& g) {
  AxiomResult r;
  r.id = id;
  r.tol = tolerance::plateau;
  const int n = g.n();

  // If direction: vartheta = 1 across [0, a].
  {
    auto metric = [&](std::size_t idx) {
      double u = a * g[static_cast<int>(idx)];
      return 1.0 - vartheta(ExtReal(u)).value();
    };
    auto best =
        scan::max_metric(static_cast<std::size_t>(a == 0.0 ? 1 : n), metric);
    if (best.value > tolerance::plateau) {
      double u = a * g[static_cast<int>(best.index)];
      r.verdict = Verdict::fail;
      Witness w;
      w.x = u;
      w.lhs = vartheta(ExtReal(u)).value();
      w.rhs = 1.0;
      w.defect = best.value;
      r.witness = w;
      return r;
    }
  }

  // Only-if direction: no attainment of 1 beyond a (skipping the adjacent
  // cell, where continuity keeps vartheta near 1).
  auto xs = compact_points(ExtReal(a), ExtReal::infinity(), n);
  auto metric = [&](std::size_t idx) {
    const ExtReal& u = xs[idx + 2];
    return vartheta(u).value() - (1.0 - tolerance::plateau);
  };
  auto best = scan::max_metric(static_cast<std::size_t>(n - 2), metric);
  if (best.value > 0.0) {
    const ExtReal& u = xs[best.index + 2];
    r.verdict = Verdict::fail;
    Witness w;
    w.x = finite_or(u.value(), std::numeric_limits<double>::infinity());
    w.lhs = vartheta(u).value();
    w.rhs = 1.0;
    w.defect = best.value;
    r.witness = w;
  } else {
    r.verdict = Verdict::pass;
  }
  return r;
}

AxiomResult vartheta_zero_only_at_inf(const std::string& id,
                                      const UnaryMonotone& vartheta,
                                      const Grid& g) {
  AxiomResult r;
  r.id = id;
  r.tol = 0.0;
  double at_inf = vartheta(ExtReal::infinity()).value();
  if (at_inf != 0.0) {
    r.verdict = Verdict::fail;
    Witness w;
    w.x = std::numeric_limits<double>::infinity();
    w.lhs = at_inf;
    w.rhs = 0.0;
    w.defect = at_inf;
    r.witness = w;
    return r;
  }
  // Exact zeros at finite points, skipping the cell adjacent to infinity
  // (where exp-family generators underflow at double precision). The most
  // finite spurious zero wins the witness.
  const int n = g.n();
  auto xs = compact_points(ExtReal(0.0), ExtReal::infinity(), n);
  auto metric = [&](std::size_t idx) {
    const ExtReal& u = xs[idx];
    if (vartheta(u).value() != 0.0) return kNegInf;
    return 1.0 - compactify(u);
  };
  auto best = scan::max_metric(static_cast<std::size_t>(n - 2), metric);
  if (best.value > kNegInf) {
    const ExtReal& u = xs[best.index];
    r.verdict = Verdict::fail;
    Witness w;
    w.x = u.value();
    w.lhs = 0.0;
    w.rhs = 0.0;
    w.defect = best.value;
    r.witness = w;
  } else {
    r.verdict = Verdict::pass;
  }
  return r;
}

AxiomResult positivity_check(const std::string& id, const BivariateOp& op,
                             const std::vector<double>& cache, const Grid& g,
                             double tol) {
  AxiomResult r;
  r.id = id;
  r.tol = tol;
  auto bad = interior_zero_scan(op, cache, g, tol);
  if (bad) {
    r.verdict = Verdict::fail;
    r.witness = bad;
  } else {
    r.verdict = Verdict::pass;
  }
  return r;
}

}  // namespace

VerificationReport check_overlap_axioms(const BivariateOp& O, const Grid& grid,
                                        double tol) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.subject = O.label();
  rep.grid = {grid.n(), grid.refinement_depth()};

  const int n = grid.n();
  std::vector<double> cache = fill_cache(O, grid);

  rep.axioms.push_back(commutativity_check("O1", cache, grid, tol));

  // O2: axes give zero (up to range slack: dualized operators round exact
  // edge values by an ulp); zero appears nowhere else, and interior zeros
  // are hunted exactly.
  {
    AxiomResult r;
    r.id = "O2";
    r.tol = tol;
    auto axis_metric = [&](std::size_t idx) {
      bool first = idx < static_cast<std::size_t>(n);
      std::size_t k = first ? idx : idx - n;
      double v = first ? cache[k] : cache[k * n];
      return std::fabs(v);
    };
    auto worst_axis =
        scan::max_metric(2 * static_cast<std::size_t>(n), axis_metric);
    if (worst_axis.value > tolerance::range_slack) {
      bool first = worst_axis.index < static_cast<std::size_t>(n);
      std::size_t k = first ? worst_axis.index : worst_axis.index - n;
      double u = grid[static_cast<int>(k)];
      r.verdict = Verdict::fail;
      r.witness = point_witness(first ? 0.0 : u, first ? u : 0.0,
                                worst_axis.value, 0.0, worst_axis.value);
    } else if (auto bad = interior_zero_scan(O, cache, grid, tol)) {
      r.verdict = Verdict::fail;
      r.witness = bad;
    } else {
      r.verdict = Verdict::pass;
    }
    rep.axioms.push_back(std::move(r));
  }

  rep.axioms.push_back(one_only_at_corner("O3", cache, grid, tol));
  rep.axioms.push_back(monotonicity_check("O4", cache, grid));
  rep.axioms.push_back(continuity_heuristic("O5", O, cache, grid, tol));

  rep.wall_seconds = seconds_since(t0);
  return rep;
}

VerificationReport check_grouping_axioms(const BivariateOp& G,
                                         const Grid& grid, double tol) {
  VerificationReport dual = check_overlap_axioms(dualize(G), grid, tol);
  static const std::vector<MirrorRule> rules = {{"O1", "G1", true},
                                                {"O2", "G3", true},
                                                {"O3", "G2", true},
                                                {"O4", "G4", true},
                                                {"O5", "G5", false}};
  return mirror_report(std::move(dual), G.label(), rules,
                       {"G1", "G2", "G3", "G4", "G5"});
}

AxiomResult check_associativity(const BivariateOp& B, const Grid& grid,
                                double tol) {
  const int n = grid.n();
  // First-level products on grid pairs are reused across all triples.
  std::vector<double> cache = fill_cache(B, grid);
  const std::size_t nn = static_cast<std::size_t>(n);
  auto metric = [&](std::size_t idx) {
    std::size_t k = idx % nn, j = (idx / nn) % nn, i = idx / (nn * nn);
    double lhs = B(cache[i * nn + j], grid[static_cast<int>(k)]);
    double rhs = B(grid[static_cast<int>(i)], cache[j * nn + k]);
    return std::fabs(lhs - rhs);
  };
  auto best = scan::max_metric(nn * nn * nn, metric);
  std::size_t k = best.index % nn, j = (best.index / nn) % nn,
              i = best.index / (nn * nn);
  AxiomResult r;
  r.id = "associativity";
  r.tol = tol;
  r.verdict = best.value <= tol ? Verdict::pass : Verdict::fail;
  Witness w;
  w.x = grid[static_cast<int>(i)];
  w.y = grid[static_cast<int>(j)];
  w.z = grid[static_cast<int>(k)];
  w.lhs = B(cache[i * nn + j], grid[static_cast<int>(k)]);
  w.rhs = B(grid[static_cast<int>(i)], cache[j * nn + k]);
  w.defect = best.value;
  r.witness = w;
  return r;
}

AxiomResult check_neutral(const BivariateOp& B, double e, const Grid& grid,
                          double tol) {
  const int n = grid.n();
  auto metric = [&](std::size_t idx) {
    double x = grid[static_cast<int>(idx)];
    return std::fabs(B(x, e) - x);
  };
  auto best = scan::max_metric(static_cast<std::size_t>(n), metric);
  double x = grid[static_cast<int>(best.index)];
  AxiomResult r;
  r.id = "neutral";
  r.tol = tol;
  r.verdict = best.value <= tol ? Verdict::pass : Verdict::fail;
  r.witness = point_witness(x, e, B(x, e), x, best.value);
  return r;
}

AxiomResult check_archimedean_diagonal(const BivariateOp& B, double x,
                                       int n_max, double eps) {
  AxiomResult r;
  r.id = "archimedean-diagonal";
  r.tol = eps;
  auto diag_witness = [&](double last, double defect) {
    Witness w;
    w.x = x;
    w.lhs = last;
    w.rhs = eps;
    w.defect = defect;
    return w;
  };
  double cur = x;
  for (int k = 1; k < n_max; ++k) {
    double next = B(cur, x);
    if (next < eps) {
      r.verdict = Verdict::pass;
      r.witness = diag_witness(next, 0.0);
      return r;
    }
    if (std::fabs(next - cur) <= 1e-15) {
      // Fixed point at or above eps: the diagonal cannot reach zero.
      r.verdict = Verdict::fail;
      r.witness = diag_witness(next, next - eps);
      return r;
    }
    cur = next;
  }
  r.verdict = Verdict::fail;
  r.witness = diag_witness(cur, cur - eps);
  return r;
}

VerificationReport check_tnorm(const BivariateOp& T, const Grid& grid,
                               double tol) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.subject = T.label();
  rep.grid = {grid.n(), grid.refinement_depth()};

  const int n = grid.n();
  std::vector<double> cache = fill_cache(T, grid);

  rep.axioms.push_back(commutativity_check("T1", cache, grid, tol));

  Grid triple = grid.n() <= 51 ? grid : Grid::uniform(51);
  AxiomResult assoc = check_associativity(T, triple, tol);
  assoc.id = "T2";
  rep.axioms.push_back(std::move(assoc));

  AxiomResult mono = monotonicity_check("T3", cache, grid);
  rep.axioms.push_back(std::move(mono));

  AxiomResult neutral = check_neutral(T, 1.0, grid, tol);
  neutral.id = "T4";
  rep.axioms.push_back(std::move(neutral));

  rep.axioms.push_back(positivity_check("positivity", T, cache, grid, tol));

  // Informational: distance above the min bound every t-subnorm satisfies.
  {
    auto metric = [&](std::size_t idx) {
      std::size_t i = idx / n, j = idx % n;
      return cache[i * n + j] -
             std::fmin(grid[static_cast<int>(i)], grid[static_cast<int>(j)]);
    };
    auto best = scan::max_metric(static_cast<std::size_t>(n) * n, metric);
    std::size_t i = best.index / n, j = best.index % n;
    AxiomResult r;
    r.id = "subnorm-bound";
    r.tol = tolerance::mono;
    r.verdict = best.value <= tolerance::mono ? Verdict::pass : Verdict::fail;
    r.witness = point_witness(
        grid[static_cast<int>(i)], grid[static_cast<int>(j)], cache[i * n + j],
        std::fmin(grid[static_cast<int>(i)], grid[static_cast<int>(j)]),
        best.value);
    rep.axioms.push_back(std::move(r));
  }

  rep.wall_seconds = seconds_since(t0);
  return rep;
}

VerificationReport check_tconorm(const BivariateOp& S, const Grid& grid,
                                 double tol) {
  VerificationReport dual = check_tnorm(dualize(S), grid, tol);
  static const std::vector<MirrorRule> rules = {
      {"T1", "S1", true},
      {"T2", "S2", true},
      {"T3", "S3", true},
      {"T4", "S4", true},
      {"positivity", "positivity", true},
      {"subnorm-bound", "superconorm-bound", true}};
  return mirror_report(
      std::move(dual), S.label(), rules,
      {"S1", "S2", "S3", "S4", "positivity", "superconorm-bound"});
}

VerificationReport check_pair_conditions(const GeneratorPair& pair,
                                         const Grid& grid) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.subject = pair.label;
  rep.grid = {grid.n(), grid.refinement_depth()};
  rep.axioms.push_back(
      theta_infinite_only_at_zero("cond-1", pair.theta, grid));
  rep.axioms.push_back(
      theta_floor_only_at_one("cond-2", pair.theta, pair.a, grid));
  rep.axioms.push_back(
      vartheta_one_exactly_on_0a("cond-3", pair.vartheta, pair.a, grid));
  rep.axioms.push_back(
      vartheta_zero_only_at_inf("cond-4", pair.vartheta, grid));
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

VerificationReport check_necessary_conditions(const GeneratorPair& pair,
                                              const BivariateOp& O,
                                              const Grid& grid) {
  auto t0 = Clock::now();
  VerificationReport gate = check_overlap_axioms(O, grid);
  VerificationReport rep;
  rep.subject = pair.label;
  rep.grid = {grid.n(), grid.refinement_depth()};
  rep.vacuous = !gate.all_pass();
  rep.axioms.push_back(theta_infinite_only_at_zero("nec-i", pair.theta, grid));
  rep.axioms.push_back(
      vartheta_zero_only_at_inf("nec-ii", pair.vartheta, grid));
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

}  // namespace overlapkit
