#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace overlapkit {

// Insertion-ordered JSON keeps report serialization byte-stable across runs.
using ojson = nlohmann::ordered_json;

enum class Verdict { pass, fail, inconclusive };

const char* to_string(Verdict v);

/// Worst point found by a scan. x is always set; y for binary checks, z for
/// ternary ones. lhs/rhs are the two compared values at that point and
/// defect the violation magnitude (axiom-specific for set-membership
/// checks, where it is the distance from the admissible region).
struct Witness {
  double x = 0.0;
  std::optional<double> y;
  std::optional<double> z;
  double lhs = 0.0;
  double rhs = 0.0;
  double defect = 0.0;

  ojson to_json() const;
};

struct AxiomResult {
  std::string id;
  Verdict verdict = Verdict::pass;
  std::optional<Witness> witness;
  double tol = 0.0;

  bool passed() const { return verdict == Verdict::pass; }
  ojson to_json() const;
};

struct GridInfo {
  int n = 0;
  int refinement_depth = 0;
};

/// Outcome of one axiom suite over one operator. `vacuous` marks reports
/// whose precondition failed (the checks still ran, but the conclusions
/// carry no weight). wall_seconds is measured but deliberately not
/// serialized: JSON output is byte-identical for identical configs.
struct VerificationReport {
  std::string subject;
  GridInfo grid;
  bool vacuous = false;
  std::vector<AxiomResult> axioms;
  double wall_seconds = 0.0;

  bool all_pass() const;
  const AxiomResult* find(const std::string& id) const;
  ojson to_json() const;
};

}  // namespace overlapkit
