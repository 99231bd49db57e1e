#pragma once

#include <vector>

#include "tep/lp/model.hpp"

namespace tep::milp {

// An LpModel plus the variable indices constrained to {0, 1}. Binary
// variables must carry bounds inside [0, 1].
struct MilpModel {
  lp::LpModel lp;
  std::vector<int> binaries;
};

struct MilpSolution {
  enum class Status { optimal, infeasible };
  Status status = Status::infeasible;
  std::vector<double> x;        // incumbent, binaries rounded to exact 0/1
  double objective = 0.0;       // incumbent objective
  double best_bound = 0.0;      // proven upper bound (maximization)
  double gap_abs = 0.0;
  double gap_rel = 0.0;
  long nodes_explored = 0;
};

}  // namespace tep::milp
