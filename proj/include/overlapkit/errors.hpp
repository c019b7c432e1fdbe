#pragma once

#include <stdexcept>
#include <string>

namespace overlapkit {

/// Base class for every failure mode this library reports by exception.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A function declared monotone violated its direction beyond the probing
/// tolerance.
struct NonMonotoneDetected : Error {
  using Error::Error;
};

/// A construction that needs a strictly monotone generator was handed one
/// with a plateau.
struct NotStrict : Error {
  using Error::Error;
};

/// A hypothesis the analysis depends on (e.g. theta(1) = a/2) does not hold
/// for the supplied pair, so the requested report would be meaningless.
struct HypothesisUnmet : Error {
  using Error::Error;
};

/// Recomposing a decomposition failed to reproduce the original operator
/// within tolerance.
struct ReconstructionFailed : Error {
  using Error::Error;
};

/// No catalog entry under the requested name.
struct UnknownCatalogEntry : Error {
  using Error::Error;
};

/// An operator description file failed to parse or validate.
struct MalformedInput : Error {
  using Error::Error;
};

}  // namespace overlapkit
