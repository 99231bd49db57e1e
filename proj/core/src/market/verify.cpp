#include "tep/market/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tep/constants.hpp"
#include "tep/market/clearing.hpp"
#include "tep/market/rent.hpp"
#include "tep/net/types.hpp"

namespace tep::market {

std::string VerificationReport::to_string() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "[pass] " : "[FAIL] ") << c.name << " residual " << c.residual
        << " (scale " << c.scale << ")\n";
  }
  return out.str();
}

VerificationReport verify_outcome(const ClearingOutcome& outcome,
                                  const PlanDecision& plan,
                                  const Instance& instance) {
  const net::Network& nw = instance.network;
  const int nn = nw.node_count();
  const int nm = nw.line_count();
  const int nt = instance.period_count();
  net::LoopMatrix psi = net::build_loop_basis(nw);
  const int nl = psi.loop_count();
  std::vector<double> price = apply_tariff_shift(instance, plan);

  VerificationReport report;
  auto push = [&](const std::string& name, double residual, double scale) {
    bool pass = residual <= tol::verification * scale;
    report.checks.push_back({name, residual, scale, pass});
  };

  // Nodal balance (9d).
  {
    double worst = 0.0, scale = 1.0;
    for (int t = 0; t < nt; ++t) {
      std::vector<double> imbalance(nn, 0.0);
      for (const Bid& bid : instance.bids) {
        if (bid.period != t) continue;
        double q = outcome.quantity[bid.id];
        imbalance[bid.node] += bid.side == Side::demand ? q : -q;
        scale = std::max(scale, std::abs(q));
      }
      for (const net::Line& line : nw.lines) {
        double f = outcome.flow_at(t, line.id, nm);
        imbalance[line.from_node] += f;
        imbalance[line.to_node] -= f;
        scale = std::max(scale, std::abs(f));
      }
      for (int n = 0; n < nn; ++n) worst = std::max(worst, std::abs(imbalance[n]));
    }
    push("balance(9d)", worst, scale);
  }

  // Kirchhoff voltage law (9e).
  {
    double worst = 0.0, scale = 1.0;
    for (int t = 0; t < nt; ++t) {
      for (int l = 0; l < nl; ++l) {
        double acc = 0.0;
        for (int m = 0; m < nm; ++m) {
          double term = psi.entries(l, m) * outcome.flow_at(t, m, nm);
          acc += term;
          scale = std::max(scale, std::abs(term));
        }
        worst = std::max(worst, std::abs(acc));
      }
    }
    push("kvl(9e)", worst, scale);
  }

  // Variable bounds (9b), (9c) and flow limits (9f), (9g); dual signs.
  {
    double worst = 0.0, scale = 1.0;
    for (const Bid& bid : instance.bids) {
      double q = outcome.quantity[bid.id];
      worst = std::max(worst, -q);
      worst = std::max(worst, q - bid.qmax);
      worst = std::max(worst, -outcome.phi[bid.id]);
      scale = std::max(scale, bid.qmax);
    }
    for (int t = 0; t < nt; ++t) {
      for (const net::Line& line : nw.lines) {
        double cap = plan.capacity(line);
        double f = outcome.flow_at(t, line.id, nm);
        worst = std::max(worst, std::abs(f) - cap);
        const std::size_t at = static_cast<std::size_t>(t) * nm + line.id;
        worst = std::max(worst, -outcome.mu_max[at]);
        worst = std::max(worst, -outcome.mu_min[at]);
        scale = std::max(scale, cap);
      }
    }
    push("bounds(9b,9c,9f,9g)", worst, scale);
  }

  // Dual feasibility (A.1)-(A.2).
  {
    double worst_d = 0.0, worst_g = 0.0, scale = 1.0;
    for (const Bid& bid : instance.bids) {
      double pi = outcome.pi_at(bid.period, bid.node, nn);
      double phi = outcome.phi[bid.id];
      scale = std::max(scale, std::abs(price[bid.id]));
      if (bid.side == Side::demand) {
        worst_d = std::max(worst_d, price[bid.id] - phi - pi);
      } else {
        worst_g = std::max(worst_g, pi - price[bid.id] - phi);
      }
    }
    push("dual-demand(A.1)", worst_d, scale);
    push("dual-supply(A.2)", worst_g, scale);
  }

  // Dual flow stationarity (A.3).
  {
    double worst = 0.0, scale = 1.0;
    for (int t = 0; t < nt; ++t) {
      for (const net::Line& line : nw.lines) {
        const std::size_t at = static_cast<std::size_t>(t) * nm + line.id;
        double acc = outcome.pi_at(t, line.from_node, nn) -
                     outcome.pi_at(t, line.to_node, nn);
        for (int l = 0; l < nl; ++l) {
          acc += psi.entries(l, line.id) *
                 outcome.gamma[static_cast<std::size_t>(t) * nl + l];
        }
        acc += outcome.mu_max[at] - outcome.mu_min[at];
        worst = std::max(worst, std::abs(acc));
        scale = std::max(scale, std::abs(outcome.mu_max[at]) +
                                    std::abs(outcome.mu_min[at]) +
                                    std::abs(outcome.pi_at(t, line.from_node, nn)));
      }
    }
    push("dual-flow(A.3)", worst, scale);
  }

  // Strong duality (A.4), per period (periods are independent).
  {
    double worst = 0.0, scale = 1.0;
    for (int t = 0; t < nt; ++t) {
      double primal = 0.0, dual = 0.0;
      for (const Bid& bid : instance.bids) {
        if (bid.period != t) continue;
        double q = outcome.quantity[bid.id];
        primal += (bid.side == Side::demand ? 1.0 : -1.0) * price[bid.id] * q;
        dual += outcome.phi[bid.id] * bid.qmax;
      }
      for (const net::Line& line : nw.lines) {
        const std::size_t at = static_cast<std::size_t>(t) * nm + line.id;
        dual += plan.capacity(line) * (outcome.mu_max[at] + outcome.mu_min[at]);
      }
      worst = std::max(worst, std::abs(primal - dual));
      scale = std::max(scale, std::abs(primal));
    }
    push("strong-duality(A.4)", worst, scale);
  }

  // Complementarity of the flow limits (C.2)-(C.3).
  {
    double worst_max = 0.0, worst_min = 0.0, scale = 1.0;
    for (int t = 0; t < nt; ++t) {
      for (const net::Line& line : nw.lines) {
        const std::size_t at = static_cast<std::size_t>(t) * nm + line.id;
        double cap = plan.capacity(line);
        double f = outcome.flow_at(t, line.id, nm);
        worst_max = std::max(worst_max, std::abs(outcome.mu_max[at] * (cap - f)));
        worst_min = std::max(worst_min, std::abs(outcome.mu_min[at] * (cap + f)));
        scale = std::max(scale, std::abs(outcome.mu_max[at] * cap));
        scale = std::max(scale, std::abs(outcome.mu_min[at] * cap));
      }
    }
    push("complementarity(C.2)", worst_max, scale);
    push("complementarity(C.3)", worst_min, scale);
  }

  // Loop-term annihilation: gamma rows never contribute to the rent.
  {
    double worst = 0.0, scale = 1.0;
    for (int t = 0; t < nt; ++t) {
      double acc = 0.0;
      for (int l = 0; l < nl; ++l) {
        double loop_flow = 0.0;
        for (int m = 0; m < nm; ++m) {
          loop_flow += psi.entries(l, m) * outcome.flow_at(t, m, nm);
        }
        double term = outcome.gamma[static_cast<std::size_t>(t) * nl + l] * loop_flow;
        acc += term;
        scale = std::max(scale, std::abs(term));
      }
      worst = std::max(worst, std::abs(acc));
    }
    push("loop-term", worst, scale);
  }

  // Congestion rent identity (12) == (13).
  {
    double direct = congestion_rent_direct(outcome, instance);
    double recast = congestion_rent_recast(outcome, plan, instance);
    push("cr-identity(12=13)", std::abs(direct - recast), 1.0 + std::abs(direct));
  }

  return report;
}

}  // namespace tep::market
