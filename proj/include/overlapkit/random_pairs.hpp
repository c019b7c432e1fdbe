#pragma once

#include <random>

#include "overlapkit/generator_pair.hpp"

namespace overlapkit {

/// A randomized generator pair satisfying all four pair conditions, for
/// property sweeps. theta(x) = a/2 + alpha(-ln x) + beta(1-x) + gamma(1-x)^2
/// with exact branches at 0 and 1 and a drawn from {0, 0.5, 1, 2}.
/// matched = true pairs theta with the pseudo-inverse of theta + a/2 (the
/// generated operator is then a t-norm); matched = false uses an independent
/// piecewise-exponential decay (a valid overlap generator whose operator
/// does not have 1 as neutral element).
GeneratorPair make_random_valid_pair(std::mt19937_64& rng, bool matched);

}  // namespace overlapkit
