#pragma once

#include "tep/lp/model.hpp"
#include "tep/lp/solution.hpp"

namespace tep::lp {

struct SimplexOptions {
  // 0 means automatic: 200 * (rows + vars) + 20000.
  long iteration_limit = 0;
  // Consecutive degenerate pivots tolerated before falling back to Bland's
  // rule, which guarantees termination.
  int stall_threshold = 256;
  // Basis refactorizations happen at least this often (in pivots).
  int refactor_interval = 64;
};

// Bounded-variable revised simplex. Returns optimal/infeasible/unbounded in
// the solution status; throws LpError on iteration limit or a numerically
// singular basis.
LpSolution solve_lp(const LpModel& model, const SimplexOptions& options = {});

}  // namespace tep::lp
