#include "tep/market/clearing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tep/errors.hpp"
#include "tep/lp/simplex.hpp"
#include "tep/net/types.hpp"

namespace tep::market {

std::vector<double> apply_tariff_shift(const Instance& instance,
                                       const PlanDecision& plan) {
  const net::Network& nw = instance.network;
  std::vector<double> shifted(instance.bids.size(), 0.0);
  // Per-node tariff burden: sum over built lines of tau * delta(m, n).
  std::vector<double> burden(nw.node_count(), 0.0);
  for (const net::Line& line : nw.lines) {
    const LineDecision& d = plan.lines[line.id];
    if (!d.build || d.tariff == 0.0) continue;
    for (int n = 0; n < nw.node_count(); ++n) {
      burden[n] += d.tariff * nw.allocation(line.id, n);
    }
  }
  for (const Bid& bid : instance.bids) {
    shifted[bid.id] = bid.side == Side::demand ? bid.price - burden[bid.node]
                                               : bid.price + burden[bid.node];
  }
  return shifted;
}

lp::LpModel build_clearing_lp(const Instance& instance, const PlanDecision& plan,
                              const std::vector<int>& periods,
                              ClearingLpIndex* index) {
  const net::Network& nw = instance.network;
  const int nn = nw.node_count();
  const int nm = nw.line_count();
  net::LoopMatrix psi = net::build_loop_basis(nw);
  const int nl = psi.loop_count();
  std::vector<double> price = apply_tariff_shift(instance, plan);

  lp::LpModel model;
  ClearingLpIndex idx;
  idx.periods = periods;
  idx.loop_count = nl;
  idx.bid_var.assign(instance.bids.size(), -1);
  const int tcount = static_cast<int>(periods.size());
  idx.flow_var.assign(tcount * nm, -1);
  idx.balance_row.assign(tcount * nn, -1);
  idx.kvl_row.assign(tcount * nl, -1);
  idx.fmax_row.assign(tcount * nm, -1);
  idx.fmin_row.assign(tcount * nm, -1);

  for (int lt = 0; lt < tcount; ++lt) {
    const int t = periods[lt];
    const std::string ts = "t" + std::to_string(instance.periods[t].id);

    for (int n = 0; n < nn; ++n) {
      idx.balance_row[lt * nn + n] =
          model.add_row("bal_" + ts + "_n" + std::to_string(n), lp::Relation::eq, 0.0);
    }
    for (int l = 0; l < nl; ++l) {
      idx.kvl_row[lt * nl + l] =
          model.add_row("kvl_" + ts + "_l" + std::to_string(l), lp::Relation::eq, 0.0);
    }
    for (int m = 0; m < nm; ++m) {
      const double cap = plan.capacity(nw.lines[m]);
      const std::string ms = "_" + ts + "_m" + std::to_string(m);
      idx.fmax_row[lt * nm + m] = model.add_row("fmax" + ms, lp::Relation::le, cap);
      idx.fmin_row[lt * nm + m] = model.add_row("fmin" + ms, lp::Relation::le, cap);
    }

    for (const Bid& bid : instance.bids) {
      if (bid.period != t) continue;
      const bool dem = bid.side == Side::demand;
      const std::string label = (dem ? "d_" : "g_") + ts + (dem ? "_k" : "_p") +
                                std::to_string(bid.id);
      int var = model.add_var(label, 0.0, bid.qmax,
                              dem ? price[bid.id] : -price[bid.id]);
      idx.bid_var[bid.id] = var;
      model.add_coeff(idx.balance_row[lt * nn + bid.node], var, dem ? 1.0 : -1.0);
    }

    for (int m = 0; m < nm; ++m) {
      const net::Line& line = nw.lines[m];
      int var = model.add_var("f_" + ts + "_m" + std::to_string(m), -lp::kInf,
                              lp::kInf, 0.0);
      idx.flow_var[lt * nm + m] = var;
      model.add_coeff(idx.balance_row[lt * nn + line.from_node], var, 1.0);
      model.add_coeff(idx.balance_row[lt * nn + line.to_node], var, -1.0);
      for (int l = 0; l < nl; ++l) {
        if (psi.entries(l, m) != 0.0) {
          model.add_coeff(idx.kvl_row[lt * nl + l], var, psi.entries(l, m));
        }
      }
      model.add_coeff(idx.fmax_row[lt * nm + m], var, 1.0);
      model.add_coeff(idx.fmin_row[lt * nm + m], var, -1.0);
    }
  }
  if (index) *index = std::move(idx);
  return model;
}

lp::LpModel build_clearing_lp(const Instance& instance, const PlanDecision& plan) {
  std::vector<int> all(instance.period_count());
  for (int t = 0; t < instance.period_count(); ++t) all[t] = t;
  return build_clearing_lp(instance, plan, all, nullptr);
}

ClearingOutcome clear_market(const Instance& instance, const PlanDecision& plan) {
  const net::Network& nw = instance.network;
  const int nn = nw.node_count();
  const int nm = nw.line_count();
  const int nt = instance.period_count();

  ClearingOutcome out;
  out.eff_price = apply_tariff_shift(instance, plan);
  out.quantity.assign(instance.bids.size(), 0.0);
  out.phi.assign(instance.bids.size(), 0.0);
  out.pi.assign(static_cast<std::size_t>(nt) * nn, 0.0);
  out.mu_max.assign(static_cast<std::size_t>(nt) * nm, 0.0);
  out.mu_min.assign(static_cast<std::size_t>(nt) * nm, 0.0);
  out.flow.assign(static_cast<std::size_t>(nt) * nm, 0.0);
  out.objective = 0.0;

  int nl = -1;
  for (int t = 0; t < nt; ++t) {
    ClearingLpIndex idx;
    lp::LpModel model = build_clearing_lp(instance, plan, {t}, &idx);
    if (nl < 0) {
      nl = idx.loop_count;
      out.gamma.assign(static_cast<std::size_t>(nt) * nl, 0.0);
    }
    lp::LpSolution sol = lp::solve_lp(model);
    if (sol.status != lp::SolveStatus::optimal) {
      throw Error("clear_market: period " + std::to_string(t) +
                  " LP not optimal; the all-zero point is feasible, so this "
                  "indicates an internal defect");
    }
    out.objective += sol.objective;

    for (const Bid& bid : instance.bids) {
      if (bid.period != t) continue;
      int var = idx.bid_var[bid.id];
      out.quantity[bid.id] = sol.x[var];
      out.phi[bid.id] = std::max(0.0, sol.reduced_cost[var]);
    }
    for (int n = 0; n < nn; ++n) {
      out.pi[static_cast<std::size_t>(t) * nn + n] = sol.row_dual[idx.balance_row[n]];
    }
    for (int l = 0; l < nl; ++l) {
      out.gamma[static_cast<std::size_t>(t) * nl + l] = sol.row_dual[idx.kvl_row[l]];
    }
    for (int m = 0; m < nm; ++m) {
      out.flow[static_cast<std::size_t>(t) * nm + m] = sol.x[idx.flow_var[m]];
      out.mu_max[static_cast<std::size_t>(t) * nm + m] =
          std::max(0.0, sol.row_dual[idx.fmax_row[m]]);
      out.mu_min[static_cast<std::size_t>(t) * nm + m] =
          std::max(0.0, sol.row_dual[idx.fmin_row[m]]);
    }
  }
  return out;
}

}  // namespace tep::market
