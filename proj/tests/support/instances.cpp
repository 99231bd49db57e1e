#include "support/instances.hpp"

#include <cmath>

#include "support/lp_oracle.hpp"

namespace tep::test {

namespace {

// Appends a midpoint-priced ladder for a linear inverse curve p(q) over
// quantities (0, qmax], clamping prices at zero.
void add_ladder(market::Instance& inst, int node, int period, market::Side side,
                double qmax, double step, double intercept, double slope) {
  int count = static_cast<int>(std::lround(qmax / step));
  for (int i = 1; i <= count; ++i) {
    double mid = i * step - step / 2.0;
    double price = std::max(0.0, intercept + slope * mid);
    inst.bids.push_back({static_cast<int>(inst.bids.size()), node, period, side,
                         price, step});
  }
}

}  // namespace

market::Instance two_zone_disaggregated(double step) {
  market::Instance inst;
  inst.network.nodes = {{0}, {1}};
  net::Line line;
  line.id = 0;
  line.from_node = 0;
  line.to_node = 1;
  line.reactance = 1.0;
  line.f0 = 0.0;
  line.k_fix = 200.0;
  line.k_var = 10.0;
  for (int j = 1; j <= 10; ++j) line.lumpy_set.push_back(3.0 * j);
  inst.network.lines = {line};
  inst.network.allocation = net::Network::postage_stamp_allocation(1, 2);
  inst.periods = {{0, 1.0}};

  // Inverse curves: zone-0 demand p = 140 - 2q, zone-0 supply p = 4(q - 10);
  // zone-1 demand p = 90 - 2q, zone-1 supply p = q - 15.
  add_ladder(inst, 0, 0, market::Side::demand, 70.0, step, 140.0, -2.0);
  add_ladder(inst, 0, 0, market::Side::supply, 35.0, step, -40.0, 4.0);
  add_ladder(inst, 1, 0, market::Side::demand, 45.0, step, 90.0, -2.0);
  add_ladder(inst, 1, 0, market::Side::supply, 115.0, step, -15.0, 1.0);
  return inst;
}

market::Instance random_loop_instance(std::uint64_t seed, int periods) {
  TestRng rng(seed);
  market::Instance inst;
  inst.network.nodes = {{0}, {1}, {2}};
  for (int m = 0; m < 3; ++m) {
    net::Line line;
    line.id = m;
    line.from_node = m == 2 ? 0 : m;
    line.to_node = m == 2 ? 2 : m + 1;
    line.reactance = rng.uniform(0.1, 1.0);
    line.f0 = rng.uniform(0.0, 2.0);
    line.k_fix = rng.uniform(0.0, 60.0);
    line.k_var = rng.uniform(0.0, 8.0);
    int opts = rng.uniform_int(1, 3);
    double base = rng.uniform(0.5, 2.0);
    for (int j = 1; j <= opts; ++j) line.lumpy_set.push_back(base * j);
    inst.network.lines.push_back(line);
  }
  inst.network.allocation = net::Network::postage_stamp_allocation(3, 3);
  for (int t = 0; t < periods; ++t) {
    inst.periods.push_back({t, rng.uniform_int(0, 1) ? 1.0 : rng.uniform(0.5, 2.0)});
  }
  int id = 0;
  for (int t = 0; t < periods; ++t) {
    for (int n = 0; n < 3; ++n) {
      int dem = rng.uniform_int(1, 3);
      int sup = rng.uniform_int(1, 3);
      for (int i = 0; i < dem; ++i) {
        inst.bids.push_back({id++, n, t, market::Side::demand,
                             rng.uniform(20.0, 90.0), rng.uniform(0.0, 5.0)});
      }
      for (int i = 0; i < sup; ++i) {
        inst.bids.push_back({id++, n, t, market::Side::supply,
                             rng.uniform(5.0, 70.0), rng.uniform(0.0, 5.0)});
      }
    }
  }
  return inst;
}

market::PlanDecision random_plan(const market::Instance& instance,
                                 std::uint64_t seed) {
  TestRng rng(seed + 0x5bd1e995);
  market::PlanDecision plan = market::PlanDecision::no_build(
      instance.network.line_count());
  const double taus[3] = {0.0, 0.4, 0.8};
  for (const net::Line& line : instance.network.lines) {
    if (rng.uniform_int(0, 1) == 0) continue;
    market::LineDecision& d = plan.lines[line.id];
    d.build = true;
    int j = rng.uniform_int(0, static_cast<int>(line.lumpy_set.size()) - 1);
    d.lumpy_index = j;
    d.added_capacity = line.lumpy_set[j];
    d.tariff = taus[rng.uniform_int(0, 2)];
  }
  return plan;
}

}  // namespace tep::test
