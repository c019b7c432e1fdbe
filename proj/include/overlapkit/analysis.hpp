#pragma once

#include <optional>
#include <utility>

#include "overlapkit/axioms.hpp"

namespace overlapkit {

/// max |vartheta(theta(x) + a/2) - x| over the grid: the composition that is
/// the identity exactly when 1 is a neutral element of the generated
/// operator.
AxiomResult check_identity_composition(const GeneratorPair& pair,
                                       const Grid& grid,
                                       double tol = tolerance::equality);

/// vartheta := pseudo-inverse of theta + a/2, then the additive construction.
/// Requires theta(x) = inf iff x = 0, theta(1) = a/2 (within plateau
/// tolerance; HypothesisUnmet otherwise) and strict monotonicity (NotStrict
/// otherwise). The result is a positive t-norm up to grid resolution.
BivariateOp build_tnorm_by_pseudo_inverse(const UnaryMonotone& theta,
                                          double a);

/// Three statements that are equivalent for operators generated by a pair
/// with theta(1) = a/2 (HypothesisUnmet otherwise): the operator is a
/// t-norm; 1 is neutral; vartheta o (theta + a/2) = id. Disagreement between
/// the verdicts indicates an engine defect, never a valid state.
struct EquivalenceReport {
  std::string subject;
  AxiomResult is_tnorm;
  AxiomResult neutral_one;
  AxiomResult composition_identity;
  VerificationReport tnorm_detail;
  bool mutually_consistent = false;

  bool all_three_pass() const {
    return is_tnorm.passed() && neutral_one.passed() &&
           composition_identity.passed();
  }
  ojson to_json() const;
};

EquivalenceReport tnorm_equivalence_report(const GeneratorPair& pair,
                                           const BivariateOp& O,
                                           const Grid& grid,
                                           double tol = tolerance::equality);

enum class InnerClass {
  t_subnorm,
  t_norm,
  strict_t_norm,
  t_superconorm,
  t_conorm,
  strict_t_conorm,
};

const char* to_string(InnerClass c);

/// O = F o inner with inner the pseudo-inverse construction on theta + a/2
/// and F(x) = vartheta(theta(x) + a/2). When theta is strict the
/// multiplicative form exists as well: O(x,y) = H(phi(x) * phi(y)) with
/// phi = exp(a/2 - theta) and H = F o phi^(-1).
struct DecompositionResult {
  UnaryMonotone F;
  BivariateOp inner;
  InnerClass inner_class;
  double reconstruction_error = 0.0;
  VerificationReport inner_report;
  std::optional<UnaryMonotone> phi;
  std::optional<UnaryMonotone> H;

  ojson to_json() const;
};

/// Requires the pair to satisfy the theta-floor or vartheta-plateau
/// condition (HypothesisUnmet otherwise); throws ReconstructionFailed if
/// recomposing misses the original by more than recon_tol anywhere on the
/// grid.
DecompositionResult decompose_distortion(const GeneratorPair& pair,
                                         const Grid& grid,
                                         double recon_tol = 1e-5);

enum class Representability {
  strict_distortion,
  not_positive_ctnorm_distortion,
  out_of_hypothesis,
};

const char* to_string(Representability r);

struct RepresentabilityVerdict {
  Representability kind = Representability::out_of_hypothesis;
  // Set for the non-representable case: a flat stretch of theta.
  std::optional<std::pair<double, double>> plateau;

  ojson to_json() const;
};

/// A pair under the decomposition hypothesis yields a distortion of a strict
/// t-norm exactly when theta is strict; a theta plateau certifies that no
/// positive continuous t-norm distortion exists.
RepresentabilityVerdict representability_verdict(const GeneratorPair& pair,
                                                 int probe_n = 1001);

/// 1 - O(1-x, 1-y): the grouping-side mirror of an overlap-side operator.
inline BivariateOp dualize_overlap(const BivariateOp& O) { return dualize(O); }

/// Every overlap-side analysis run on the grouping side of a dual pair:
/// dual conditions, grouping axioms, the t-conorm equivalence (neutral 0,
/// s o (t + a/2) = id), the conorm-side decomposition and representability.
struct DualSuiteReport {
  std::string subject;
  VerificationReport pair_conditions;
  VerificationReport grouping_axioms;
  EquivalenceReport equivalence;
  DecompositionResult decomposition;
  RepresentabilityVerdict representability;

  ojson to_json() const;
};

DualSuiteReport dual_grouping_suite(const DualGeneratorPair& pair,
                                    const Grid& grid,
                                    double tol = tolerance::equality);

}  // namespace overlapkit
