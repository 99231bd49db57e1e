#pragma once

#include <vector>

#include "tep/lp/model.hpp"
#include "tep/market/types.hpp"

namespace tep::market {

// Ex-ante tariff shift: demand prices drop by the allocated tariff burden,
// supply prices rise by it. Returns one effective price per bid.
std::vector<double> apply_tariff_shift(const Instance& instance,
                                       const PlanDecision& plan);

// Variable/row layout of a clearing LP, used to map duals back to symbols.
struct ClearingLpIndex {
  std::vector<int> periods;          // instance period positions covered
  std::vector<int> bid_var;          // per bid: column or -1 if out of scope
  std::vector<int> flow_var;         // (local t, m)
  std::vector<int> balance_row;      // (local t, n)
  std::vector<int> kvl_row;          // (local t, l)
  std::vector<int> fmax_row;         // (local t, m)
  std::vector<int> fmin_row;         // (local t, m)
  int loop_count = 0;
};

// Market clearing LP over the given periods (all periods for the public
// overload): objective uses tariff-shifted prices, constraints are nodal
// balance, Kirchhoff voltage rows and the plan's flow capacities.
lp::LpModel build_clearing_lp(const Instance& instance, const PlanDecision& plan,
                              const std::vector<int>& periods,
                              ClearingLpIndex* index);
lp::LpModel build_clearing_lp(const Instance& instance, const PlanDecision& plan);

// Solves one LP per period (they are independent) and assembles the primal
// solution, every dual family and the shifted prices. Throws on solver
// failure; an all-zero solution is always feasible, so infeasibility here is
// an internal error.
ClearingOutcome clear_market(const Instance& instance, const PlanDecision& plan);

}  // namespace tep::market
