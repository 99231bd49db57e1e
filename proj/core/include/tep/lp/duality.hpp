#pragma once

#include "tep/lp/model.hpp"
#include "tep/lp/solution.hpp"

namespace tep::lp {

// Feasibility and complementarity residuals of a claimed solution,
// recomputed from scratch against the model.
struct SolutionResiduals {
  double primal = 0.0;         // max bound/row violation
  double dual = 0.0;           // max reduced-cost sign violation at bounds
  double complementarity = 0.0;  // max |dual * slack| style product
};

SolutionResiduals residuals(const LpModel& model, const LpSolution& sol);

// |primal objective - dual objective| recomputed from the reported duals and
// reduced costs. Throws tep::Error when sol is not optimal.
double check_strong_duality(const LpModel& model, const LpSolution& sol);

}  // namespace tep::lp
