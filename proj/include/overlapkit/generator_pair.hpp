#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "overlapkit/bivariate_op.hpp"
#include "overlapkit/errors.hpp"
#include "overlapkit/unary_monotone.hpp"

namespace overlapkit {

/// Additive generator pair for overlap-side constructions:
///   theta    decreasing [0,1] -> [0,inf]
///   vartheta decreasing [0,inf] -> [0,1]
///   O(x,y) = vartheta(theta(x) + theta(y))
/// `a` is the relaxation parameter: the constructions of interest satisfy
/// theta(1) = a/2 and vartheta = 1 exactly on [0,a].
struct GeneratorPair {
  UnaryMonotone theta;
  UnaryMonotone vartheta;
  double a = 0.0;
  std::string label;

  GeneratorPair(UnaryMonotone theta_, UnaryMonotone vartheta_, double a_,
                std::string label_);
};

/// Dual pair for grouping-side constructions:
///   t increasing [0,1] -> [0,inf],  s increasing [0,inf] -> [0,1]
///   G(x,y) = s(t(x) + t(y))
struct DualGeneratorPair {
  UnaryMonotone t;
  UnaryMonotone s;
  double a = 0.0;
  std::string label;
  /// Set by dual_of. primal_of returns it verbatim; without it the primal is
  /// rebuilt as 1 - s, which saturates to exact zero once s is within one
  /// ulp of 1 and poisons far-tail zero hunts.
  std::optional<GeneratorPair> primal_source;

  DualGeneratorPair(UnaryMonotone t_, UnaryMonotone s_, double a_,
                    std::string label_);
};

BivariateOp build_overlap_additive(const GeneratorPair& pair);
BivariateOp build_grouping_additive(const DualGeneratorPair& pair);

/// O(x,y) = g(h(x) * h(y)) with g, h increasing [0,1] -> [0,1].
BivariateOp build_overlap_multiplicative(const UnaryMonotone& g,
                                         const UnaryMonotone& h);

/// O(x,y) = F(T(x,y)) with F increasing [0,1] -> [0,1].
BivariateOp build_distortion(const UnaryMonotone& F, const BivariateOp& T);

/// t(x) = theta(1-x), s(x) = 1 - vartheta(x); the standard-negation dual.
DualGeneratorPair dual_of(const GeneratorPair& pair);
/// theta(x) = t(1-x), vartheta(x) = 1 - s(x); inverse of dual_of.
GeneratorPair primal_of(const DualGeneratorPair& pair);

using CatalogEntry = std::variant<GeneratorPair, DualGeneratorPair, BivariateOp>;

/// Named constructions with a stable public inventory. Pair entries:
///   product-pair        theta = a/2 - ln x, exp-decay vartheta; O = xy
///   nonassoc-log        same theta, vartheta = a/x beyond a (requires a > 0);
///                       O = a/(a - ln xy), continuous but not associative
///   hamacher-squared    theta = a/2 + ln((2-x)/x), squared-logistic vartheta;
///                       O = (xy / (2-x-y+xy))^2
///   plateau-pair        theta flat on [0.4, 0.6], exp-decay vartheta
///   dual-<name>         the standard-negation dual of each pair above
/// Plain operators (the `a` argument is ignored): product, minimum,
/// lukasiewicz, hamacher, probabilistic-sum, maximum.
/// Throws UnknownCatalogEntry for anything else.
CatalogEntry catalog(const std::string& name, double a);

std::vector<std::string> catalog_names();

/// The operator described by an entry (pairs are built, plain ops pass
/// through).
BivariateOp op_from_entry(const CatalogEntry& entry);

/// The overlap-side pair of an entry: pair entries pass through, dual entries
/// are mapped by primal_of, plain operators have none.
std::optional<GeneratorPair> pair_from_entry(const CatalogEntry& entry);

}  // namespace overlapkit
