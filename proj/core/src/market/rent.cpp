#include "tep/market/rent.hpp"

namespace tep::market {

double congestion_rent_direct(const ClearingOutcome& outcome,
                              const Instance& instance) {
  const net::Network& nw = instance.network;
  const int nn = nw.node_count();
  const int nm = nw.line_count();
  double cr = 0.0;
  for (int t = 0; t < instance.period_count(); ++t) {
    const double w = instance.periods[t].weight;
    for (const net::Line& line : nw.lines) {
      double spread = outcome.pi_at(t, line.to_node, nn) -
                      outcome.pi_at(t, line.from_node, nn);
      cr += w * spread * outcome.flow_at(t, line.id, nm);
    }
  }
  return cr;
}

double congestion_rent_recast(const ClearingOutcome& outcome,
                              const PlanDecision& plan, const Instance& instance) {
  const int nm = instance.network.line_count();
  double cr = 0.0;
  for (int t = 0; t < instance.period_count(); ++t) {
    const double w = instance.periods[t].weight;
    for (const net::Line& line : instance.network.lines) {
      const std::size_t at = static_cast<std::size_t>(t) * nm + line.id;
      cr += w * plan.capacity(line) * (outcome.mu_max[at] + outcome.mu_min[at]);
    }
  }
  return cr;
}

double tariff_payments(const ClearingOutcome& outcome, const PlanDecision& plan,
                       const Instance& instance) {
  const net::Network& nw = instance.network;
  // Cleared volume (demand plus supply) per (t, n).
  std::vector<double> volume(instance.period_count() * nw.node_count(), 0.0);
  for (const Bid& bid : instance.bids) {
    volume[static_cast<std::size_t>(bid.period) * nw.node_count() + bid.node] +=
        outcome.quantity[bid.id];
  }
  double total = 0.0;
  for (int t = 0; t < instance.period_count(); ++t) {
    const double w = instance.periods[t].weight;
    for (const net::Line& line : nw.lines) {
      const LineDecision& d = plan.lines[line.id];
      if (!d.build || d.tariff == 0.0) continue;
      for (int n = 0; n < nw.node_count(); ++n) {
        total += w * d.tariff * nw.allocation(line.id, n) *
                 volume[static_cast<std::size_t>(t) * nw.node_count() + n];
      }
    }
  }
  return total;
}

}  // namespace tep::market
