#pragma once

#include <string>

#include "overlapkit/generator_pair.hpp"

namespace overlapkit {

/// Parses a JSON operator description:
///   {"kind": "overlap-additive" | "grouping-additive",
///    "a": 1.0,
///    "label": "optional",
///    "theta":    {"family": "...", ...params},
///    "vartheta": {"family": "...", ...params}}
/// theta families: log-offset{scale, floor?=a/2}, power{scale,p},
/// rational{scale}, plateau{lo,hi,level}, affine{top} (the last violates the
/// infinity condition on purpose; a floor above a/2 breaks the value at one
/// the same way). vartheta families: exp-decay{rate},
/// rational-decay{p}, logistic-square{}, plateau-exp{width,rate},
/// pseudo-inverse{}. grouping-additive builds the overlap-side pair and
/// returns its dual. Throws MalformedInput on any parse or validation
/// problem.
CatalogEntry parse_operator_spec(const std::string& json_text);

/// parse_operator_spec on the contents of `path`; unreadable files are
/// MalformedInput too.
CatalogEntry load_operator_spec(const std::string& path);

}  // namespace overlapkit
