#pragma once

#include <optional>
#include <vector>

#include "tep/net/types.hpp"

namespace tep::market {

enum class Side { demand, supply };

// One step of a participant's bid ladder: up to qmax MW at the stated
// per-MWh price, before any network charges.
struct Bid {
  int id = 0;        // contiguous from 0 across the whole instance
  int node = 0;
  int period = 0;    // position in Instance::periods
  Side side = Side::demand;
  double price = 0.0;  // p~ (demand benefit / supply cost), money per MWh
  double qmax = 0.0;   // MW, >= 0
};

struct Period {
  int id = 0;
  double weight = 1.0;  // omega, > 0
};

struct Instance {
  net::Network network;
  std::vector<Period> periods;
  std::vector<Bid> bids;

  int period_count() const { return static_cast<int>(periods.size()); }
  int bid_count() const { return static_cast<int>(bids.size()); }
};

// Upper-level choice for one line. Lumpy schemes record which menu entry was
// taken; the centralized scheme sets a free-form capacity with no index.
struct LineDecision {
  bool build = false;
  double added_capacity = 0.0;          // MW, 0 when build == false
  std::optional<int> lumpy_index;       // position in Line::lumpy_set
  double tariff = 0.0;                  // money per MWh, 0 when build == false
};

struct PlanDecision {
  std::vector<LineDecision> lines;  // one per network line, by line id

  static PlanDecision no_build(int line_count) {
    PlanDecision plan;
    plan.lines.resize(line_count);
    return plan;
  }

  double capacity(const net::Line& line) const {
    const LineDecision& d = lines[line.id];
    return line.f0 + (d.build ? d.added_capacity : 0.0);
  }

  double total_investment_cost(const net::Network& network) const {
    double tc = 0.0;
    for (const net::Line& line : network.lines) {
      const LineDecision& d = lines[line.id];
      if (d.build) tc += line.k_fix + line.k_var * d.added_capacity;
    }
    return tc;
  }
};

// Primal and dual description of a cleared market, all periods concatenated.
// Bid-indexed vectors align with Instance::bids; nodal/line/loop quantities
// are stored row-major over (period, entity).
struct ClearingOutcome {
  std::vector<double> quantity;     // per bid: d (demand) or g (supply)
  std::vector<double> phi;          // per bid: dual of quantity <= qmax
  std::vector<double> eff_price;    // per bid: tariff-shifted price p
  std::vector<double> pi;           // (t, n): nodal price
  std::vector<double> gamma;        // (t, l): KVL dual
  std::vector<double> mu_max;       // (t, m): dual of f <= capacity
  std::vector<double> mu_min;       // (t, m): dual of -f <= capacity
  std::vector<double> flow;         // (t, m)
  double objective = 0.0;           // sum over periods of the clearing optimum

  double pi_at(int t, int node, int node_count) const {
    return pi[static_cast<std::size_t>(t) * node_count + node];
  }
  double flow_at(int t, int line, int line_count) const {
    return flow[static_cast<std::size_t>(t) * line_count + line];
  }
};

}  // namespace tep::market
