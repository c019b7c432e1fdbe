#pragma once

#include "overlapkit/bivariate_op.hpp"
#include "overlapkit/generator_pair.hpp"
#include "overlapkit/grid.hpp"
#include "overlapkit/report.hpp"

namespace overlapkit {

/// Overlap axioms on a grid:
///   O1 commutativity, O2 zero set = axes (both directions), O3 one set =
///   {(1,1)} (both directions), O4 monotonicity in each argument, O5 a
///   continuity heuristic (pass/inconclusive, never a proof).
/// Zero-side boundary checks are exact; one-side boundary checks allow
/// tolerance::boundary_one. The O3 "only if" scan skips the one-cell band at
/// the upper boundary where continuity makes the question ill-posed at grid
/// resolution. Exact interior zeros fail O2 outright; sub-tolerance interior
/// positives trigger one local refinement round that hunts exact zeros
/// before the verdict.
VerificationReport check_overlap_axioms(const BivariateOp& O, const Grid& grid,
                                        double tol = tolerance::equality);

/// Mirror suite (G1..G5): zero set = {(0,0)}, one set = the lines x=1, y=1.
/// Runs the overlap machinery on the dualized operator and mirrors the
/// report (coordinates x -> 1-x, values v -> 1-v, ids O2<->G3, O3<->G2).
VerificationReport check_grouping_axioms(const BivariateOp& G,
                                         const Grid& grid,
                                         double tol = tolerance::equality);

/// T1 commutativity, T2 associativity, T3 monotonicity, T4 neutral element 1,
/// plus "positivity" (no zero divisors) and the informational
/// "subnorm-bound" (T <= min). The T2 triple scan caps its grid at n=51.
VerificationReport check_tnorm(const BivariateOp& T, const Grid& grid,
                               double tol = tolerance::equality);

/// Mirror of check_tnorm under dualization (S1..S4 with neutral element 0,
/// "positivity" = one set on the boundary lines, "superconorm-bound").
VerificationReport check_tconorm(const BivariateOp& S, const Grid& grid,
                                 double tol = tolerance::equality);

/// Worst associativity defect |B(B(x,y),z) - B(x,B(y,z))| over the triple
/// grid, with the earliest lexicographic witness among maxima.
AxiomResult check_associativity(const BivariateOp& B, const Grid& grid,
                                double tol = tolerance::equality);

/// Worst |B(x,e) - x| over the grid.
AxiomResult check_neutral(const BivariateOp& B, double e, const Grid& grid,
                          double tol = tolerance::equality);

/// Diagonal power sequence x_{k+1} = B(x_k, x): passes when it drops below
/// eps within n_max steps, fails on stagnation (fixed point >= eps).
AxiomResult check_archimedean_diagonal(const BivariateOp& B, double x,
                                       int n_max = 200, double eps = 1e-6);

/// The four sufficiency conditions on a pair, each checked in both
/// directions on grids (compactified where the domain is unbounded):
///   cond-1  theta(x) = inf  iff x = 0        (exact infinity)
///   cond-2  theta(x) = a/2  iff x = 1        (within plateau tolerance)
///   cond-3  vartheta(x) = 1 iff x in [0,a]   (within plateau tolerance)
///   cond-4  vartheta(x) = 0 iff x = inf      (exact zero)
/// "Only if" scans skip one grid cell next to the attainment boundary.
VerificationReport check_pair_conditions(const GeneratorPair& pair,
                                         const Grid& grid = Grid::uniform(101));

/// The two conditions every overlap-generating pair must satisfy:
///   nec-i  theta(x) = inf iff x = 0,  nec-ii  vartheta(x) = 0 iff x = inf.
/// Runs the full overlap suite on O first; if that fails, the report is
/// marked vacuous (the conditions are only necessary when O really is an
/// overlap function).
VerificationReport check_necessary_conditions(const GeneratorPair& pair,
                                              const BivariateOp& O,
                                              const Grid& grid);

}  // namespace overlapkit
