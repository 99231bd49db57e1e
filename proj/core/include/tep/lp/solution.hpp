#pragma once

#include <vector>

namespace tep::lp {

enum class SolveStatus { optimal, infeasible, unbounded };

// Primal-dual solution of an LpModel. Sign conventions for a maximization:
// binding <= rows have row_dual >= 0, binding >= rows have row_dual <= 0,
// equality rows are unrestricted. Reduced costs satisfy d_j <= 0 at a lower
// bound and d_j >= 0 at an upper bound.
struct LpSolution {
  SolveStatus status = SolveStatus::infeasible;
  std::vector<double> x;             // structural variable values
  std::vector<double> row_dual;      // y, one per row
  std::vector<double> reduced_cost;  // d_j = c_j - y'a_j, one per variable
  std::vector<double> row_activity;  // a_i'x, one per row
  double objective = 0.0;            // including any model constant
  long iterations = 0;
  long phase1_iterations = 0;
};

}  // namespace tep::lp
