#pragma once

#include "tep/market/types.hpp"

namespace tep::market {

// Congestion rent from nodal price differences:
// sum_t w_t sum_m (pi_receiving - pi_sending) * f.
double congestion_rent_direct(const ClearingOutcome& outcome,
                              const Instance& instance);

// Equivalent complementarity form: sum_t w_t sum_m capacity * (mu+ + mu-).
// Agrees with the direct value at any optimal outcome.
double congestion_rent_recast(const ClearingOutcome& outcome,
                              const PlanDecision& plan, const Instance& instance);

// Tariff revenue: sum_t w_t sum_m sum_n u_m tau_m delta(m,n) * (demand + supply
// cleared at n).
double tariff_payments(const ClearingOutcome& outcome, const PlanDecision& plan,
                       const Instance& instance);

}  // namespace tep::market
