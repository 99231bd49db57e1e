#pragma once

#include <string>
#include <vector>

#include "tep/market/types.hpp"

namespace tep::market {

struct OptimalityCheck {
  std::string name;
  double residual = 0.0;
  double scale = 1.0;  // residual is judged against tolerance * scale
  bool pass = true;
};

struct VerificationReport {
  std::vector<OptimalityCheck> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
  std::string to_string() const;
};

// Recomputes every optimality identity of a claimed clearing outcome from
// scratch: primal feasibility, dual feasibility, strong duality,
// complementarity of the flow limits, loop-term annihilation and the
// direct-vs-recast congestion rent identity. Failures are report entries,
// never exceptions.
VerificationReport verify_outcome(const ClearingOutcome& outcome,
                                  const PlanDecision& plan,
                                  const Instance& instance);

}  // namespace tep::market
