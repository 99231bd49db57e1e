#include "tep/lp/duality.hpp"

#include <algorithm>
#include <cmath>

#include "tep/errors.hpp"

namespace tep::lp {

SolutionResiduals residuals(const LpModel& model, const LpSolution& sol) {
  SolutionResiduals r;
  const int n = model.var_count();
  const int m = model.row_count();

  std::vector<double> activity(m, 0.0);
  for (int i = 0; i < m; ++i) {
    for (auto [col, v] : model.row_entries(i)) activity[i] += v * sol.x[col];
  }

  for (int j = 0; j < n; ++j) {
    if (std::isfinite(model.lo(j))) r.primal = std::max(r.primal, model.lo(j) - sol.x[j]);
    if (std::isfinite(model.up(j))) r.primal = std::max(r.primal, sol.x[j] - model.up(j));
  }
  for (int i = 0; i < m; ++i) {
    double gap = activity[i] - model.rhs(i);
    switch (model.relation(i)) {
      case Relation::le: r.primal = std::max(r.primal, gap); break;
      case Relation::ge: r.primal = std::max(r.primal, -gap); break;
      case Relation::eq: r.primal = std::max(r.primal, std::abs(gap)); break;
    }
  }

  // Dual feasibility: recompute reduced costs from the row duals and check
  // their signs against the bound each variable sits on; row duals must have
  // the right sign for inequality rows, with complementary slackness.
  for (int i = 0; i < m; ++i) {
    double y = sol.row_dual[i];
    double slack = model.rhs(i) - activity[i];
    switch (model.relation(i)) {
      case Relation::le:
        r.dual = std::max(r.dual, -y);
        r.complementarity = std::max(r.complementarity, std::abs(y * slack));
        break;
      case Relation::ge:
        r.dual = std::max(r.dual, y);
        r.complementarity = std::max(r.complementarity, std::abs(y * slack));
        break;
      case Relation::eq:
        break;
    }
  }
  std::vector<double> d(n, 0.0);
  for (int j = 0; j < n; ++j) d[j] = model.obj(j);
  for (int i = 0; i < m; ++i) {
    for (auto [col, v] : model.row_entries(i)) d[col] -= sol.row_dual[i] * v;
  }
  for (int j = 0; j < n; ++j) {
    bool lo_fin = std::isfinite(model.lo(j));
    bool up_fin = std::isfinite(model.up(j));
    double dist_lo = lo_fin ? sol.x[j] - model.lo(j) : kInf;
    double dist_up = up_fin ? model.up(j) - sol.x[j] : kInf;
    // d_j > 0 is only allowed at the upper bound, d_j < 0 only at the lower.
    if (d[j] > 0.0) {
      r.complementarity = std::max(
          r.complementarity, up_fin ? d[j] * dist_up : kInf);
    } else if (d[j] < 0.0) {
      r.complementarity = std::max(
          r.complementarity, lo_fin ? -d[j] * dist_lo : kInf);
    }
  }
  return r;
}

double check_strong_duality(const LpModel& model, const LpSolution& sol) {
  if (sol.status != SolveStatus::optimal) {
    throw Error("check_strong_duality: solution is not optimal");
  }
  const int n = model.var_count();
  const int m = model.row_count();

  double primal = model.obj_constant();
  for (int j = 0; j < n; ++j) primal += model.obj(j) * sol.x[j];

  // Dual objective: y'b plus the bound multipliers implied by the reduced
  // costs, lambda_up = max(d, 0) against up and lambda_lo = max(-d, 0)
  // against lo.
  double dual = model.obj_constant();
  for (int i = 0; i < m; ++i) dual += sol.row_dual[i] * model.rhs(i);
  std::vector<double> d(n, 0.0);
  for (int j = 0; j < n; ++j) d[j] = model.obj(j);
  for (int i = 0; i < m; ++i) {
    for (auto [col, v] : model.row_entries(i)) d[col] -= sol.row_dual[i] * v;
  }
  for (int j = 0; j < n; ++j) {
    if (d[j] > 0.0 && std::isfinite(model.up(j))) {
      dual += d[j] * model.up(j);
    } else if (d[j] < 0.0 && std::isfinite(model.lo(j))) {
      dual += d[j] * model.lo(j);
    }
  }
  return std::abs(primal - dual);
}

}  // namespace tep::lp
