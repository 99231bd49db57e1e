#include "tep/io/generators.hpp"

#include <cmath>

#include "garver_topology.hpp"
#include "tep/errors.hpp"
#include "tep/io/rng.hpp"

namespace tep::io {

market::Instance generate_two_node(double step) {
  if (!(step > 0.0) || std::abs(std::remainder(30.0, step)) > 1e-9) {
    throw Error("generate_two_node: step must be positive and divide 30");
  }
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

  int id = 0;
  const int demand_steps = static_cast<int>(std::lround(60.0 / step));
  for (int i = 1; i <= demand_steps; ++i) {
    double mid = i * step - step / 2.0;
    inst.bids.push_back(
        {id++, 0, 0, market::Side::demand, 80.0 - (4.0 / 3.0) * mid, step});
  }
  const int supply_steps = static_cast<int>(std::lround(90.0 / step));
  for (int i = 1; i <= supply_steps; ++i) {
    double mid = i * step - step / 2.0;
    inst.bids.push_back(
        {id++, 1, 0, market::Side::supply, 20.0 + (2.0 / 3.0) * mid, step});
  }
  return inst;
}

market::Instance generate_garver(std::uint64_t seed, int per_node) {
  if (per_node < 1) throw Error("generate_garver: per_node must be >= 1");
  market::Instance inst;
  for (int n = 0; n < garver::kNodeCount; ++n) inst.network.nodes.push_back({n});
  int id = 0;
  for (const auto& rec : garver::kLines) {
    net::Line line;
    line.id = id++;
    line.from_node = rec.from;
    line.to_node = rec.to;
    line.reactance = rec.reactance;
    line.f0 = rec.f0;
    line.k_fix = rec.k_fix;
    line.k_var = rec.k_var;
    for (int j = 1; j <= garver::kLumpyMax; ++j) line.lumpy_set.push_back(j);
    inst.network.lines.push_back(line);
  }
  inst.network.allocation = net::Network::postage_stamp_allocation(
      inst.network.line_count(), garver::kNodeCount);
  inst.periods = {{0, 1.0}, {1, 1.0}};

  Rng rng(seed);
  int bid_id = 0;
  auto draw = [&](int node, int period, market::Side side) {
    double price = rng.normal(50.0, 10.0);
    double qmax = rng.uniform(0.0, 0.5);
    inst.bids.push_back({bid_id++, node, period, side, price, qmax});
  };
  for (int t = 0; t < 2; ++t) {
    for (int n = 0; n < garver::kNodeCount; ++n) {
      if (n != 5) {
        for (int i = 0; i < per_node; ++i) draw(n, t, market::Side::demand);
      }
      for (int i = 0; i < per_node; ++i) draw(n, t, market::Side::supply);
    }
  }
  return inst;
}

}  // namespace tep::io
