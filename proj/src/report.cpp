#include "overlapkit/report.hpp"

namespace overlapkit {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

ojson Witness::to_json() const {
  ojson j;
  j["x"] = x;
  if (y) j["y"] = *y;
  if (z) j["z"] = *z;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["defect"] = defect;
  return j;
}

ojson AxiomResult::to_json() const {
  ojson j;
  j["id"] = id;
  j["verdict"] = to_string(verdict);
  if (witness) j["witness"] = witness->to_json();
  j["tol"] = tol;
  return j;
}

bool VerificationReport::all_pass() const {
  for (const auto& a : axioms) {
    if (a.verdict != Verdict::pass) return false;
  }
  return !vacuous;
}

const AxiomResult* VerificationReport::find(const std::string& id) const {
  for (const auto& a : axioms) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

ojson VerificationReport::to_json() const {
  ojson j;
  j["subject"] = subject;
  j["grid"] = {{"n", grid.n}, {"refinement_depth", grid.refinement_depth}};
  if (vacuous) j["vacuous"] = true;
  ojson arr = ojson::array();
  for (const auto& a : axioms) arr.push_back(a.to_json());
  j["axioms"] = std::move(arr);
  return j;
}

}  // namespace overlapkit
