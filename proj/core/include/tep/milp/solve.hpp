#pragma once

#include <functional>

#include "tep/lp/simplex.hpp"
#include "tep/milp/model.hpp"

namespace tep::milp {

struct MilpOptions {
  double gap_abs = 0.0;
  double gap_rel = 0.0;
  long node_limit = 20'000'000;
  lp::SimplexOptions lp_options;
  // Indices (into lp variables) compared lexicographically to break ties
  // between equal-objective incumbents; defaults to the binary list.
  std::vector<int> lex_order;
  // Called with the known bound of every processed node, in processing order.
  std::function<void(double)> bound_trace;
};

// Best-bound branch and bound over the binary variables, LP relaxations
// solved from scratch at every node. Branching: most-fractional binary,
// lowest index on ties; equal-bound nodes are explored deepest-first.
// Throws MilpError (carrying the incumbent, if any) when node_limit is hit.
MilpSolution solve_milp(const MilpModel& model, const MilpOptions& options = {});

// Exact reference: solves the LP for every assignment of the binaries and
// keeps the best feasible one (ties: lexicographically smallest assignment).
// Throws tep::Error above 24 binaries.
MilpSolution enumerate_oracle(const MilpModel& model,
                              const lp::SimplexOptions& lp_options = {});

}  // namespace tep::milp
