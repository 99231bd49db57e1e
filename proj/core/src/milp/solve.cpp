#include "tep/milp/solve.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "tep/constants.hpp"
#include "tep/errors.hpp"

namespace tep::milp {
namespace {

constexpr double kIntTol = tol::integrality;

// Numeric guard protecting pruning decisions against LP round-off; must stay
// well below every objective-agreement tolerance used by callers.
inline double guard(double reference) {
  return 1e-9 * (1.0 + std::abs(reference));
}

void check_model(const MilpModel& model) {
  for (int j : model.binaries) {
    if (j < 0 || j >= model.lp.var_count()) {
      throw Error("solve_milp: binary index out of range");
    }
    if (model.lp.lo(j) < -kIntTol || model.lp.up(j) > 1.0 + kIntTol) {
      throw Error("solve_milp: binary variable " + model.lp.var_label(j) +
                  " has bounds outside [0,1]");
    }
  }
}

bool lex_smaller(const std::vector<double>& a, const std::vector<double>& b,
                 const std::vector<int>& order) {
  for (int j : order) {
    double va = std::round(a[j]);
    double vb = std::round(b[j]);
    if (va < vb - 0.5) return true;
    if (va > vb + 0.5) return false;
  }
  return false;
}

struct Node {
  double bound = 0.0;
  int depth = 0;
  long id = 0;
  std::vector<std::pair<int, int>> fixes;  // (binary position, value)
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;   // max bound first
    if (a.depth != b.depth) return a.depth < b.depth;   // then dive deepest
    return a.id > b.id;                                 // then oldest
  }
};

}  // namespace

MilpSolution solve_milp(const MilpModel& model, const MilpOptions& options) {
  check_model(model);
  lp::LpModel lp = model.lp;  // local copy: bounds are mutated per node
  const std::vector<int>& bins = model.binaries;
  const std::vector<int>& lex =
      options.lex_order.empty() ? bins : options.lex_order;

  std::vector<std::pair<double, double>> root_bounds(bins.size());
  for (std::size_t k = 0; k < bins.size(); ++k) {
    root_bounds[k] = {lp.lo(bins[k]), lp.up(bins[k])};
  }

  MilpSolution best;
  bool have_incumbent = false;
  long nodes = 0;
  long next_id = 0;
  double sealed_bound = -lp::kInf;  // max bound over pruned subtrees and leaves

  auto cutoff = [&]() {
    if (!have_incumbent) return -lp::kInf;
    double slack = std::max(options.gap_abs,
                            options.gap_rel * std::abs(best.objective));
    return best.objective + std::max(slack, guard(best.objective));
  };

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  open.push({lp::kInf, 0, next_id++, {}});

  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    if (have_incumbent && node.bound <= cutoff()) {
      sealed_bound = std::max(sealed_bound, node.bound);
      continue;
    }
    if (++nodes > options.node_limit) {
      throw MilpError("solve_milp: node limit of " + std::to_string(options.node_limit) +
                          " exceeded",
                      have_incumbent, have_incumbent ? best.objective : 0.0);
    }
    if (options.bound_trace) options.bound_trace(node.bound);

    for (std::size_t k = 0; k < bins.size(); ++k) {
      lp.set_bounds(bins[k], root_bounds[k].first, root_bounds[k].second);
    }
    for (auto [pos, val] : node.fixes) lp.set_bounds(bins[pos], val, val);

    lp::LpSolution rel = lp::solve_lp(lp, options.lp_options);
    if (rel.status == lp::SolveStatus::unbounded) {
      throw MilpError("solve_milp: unbounded relaxation", have_incumbent,
                      have_incumbent ? best.objective : 0.0);
    }
    if (rel.status == lp::SolveStatus::infeasible) continue;

    double node_bound = std::min(node.bound, rel.objective);
    if (have_incumbent && node_bound <= cutoff()) {
      sealed_bound = std::max(sealed_bound, node_bound);
      continue;
    }

    // Most fractional binary, lowest index on ties.
    int branch_pos = -1;
    double best_frac = kIntTol;
    for (std::size_t k = 0; k < bins.size(); ++k) {
      double v = rel.x[bins[k]];
      double frac = std::min(v, 1.0 - v);
      if (frac > best_frac + 1e-12) {
        best_frac = frac;
        branch_pos = static_cast<int>(k);
      }
    }

    if (branch_pos < 0) {
      std::vector<double> x = rel.x;
      for (int j : bins) x[j] = std::round(x[j]);
      bool take = false;
      if (!have_incumbent) {
        take = true;
      } else if (rel.objective > best.objective + guard(rel.objective)) {
        take = true;
      } else if (std::abs(rel.objective - best.objective) <= guard(rel.objective) &&
                 lex_smaller(x, best.x, lex)) {
        take = true;
      }
      if (take) {
        best.x = std::move(x);
        best.objective = rel.objective;
        have_incumbent = true;
      }
      sealed_bound = std::max(sealed_bound, rel.objective);
      continue;
    }

    Node one{node_bound, node.depth + 1, next_id++, node.fixes};
    one.fixes.push_back({branch_pos, 1});
    Node zero{node_bound, node.depth + 1, next_id++, node.fixes};
    zero.fixes.push_back({branch_pos, 0});
    open.push(std::move(one));
    open.push(std::move(zero));
  }

  best.nodes_explored = nodes;
  if (!have_incumbent) {
    best.status = MilpSolution::Status::infeasible;
    return best;
  }
  best.status = MilpSolution::Status::optimal;
  best.best_bound = std::max(best.objective, sealed_bound);
  best.gap_abs = best.best_bound - best.objective;
  best.gap_rel = best.gap_abs / std::max(1.0, std::abs(best.objective));
  return best;
}

MilpSolution enumerate_oracle(const MilpModel& model,
                              const lp::SimplexOptions& lp_options) {
  check_model(model);
  const int k = static_cast<int>(model.binaries.size());
  if (k > 24) {
    throw Error("enumerate_oracle: " + std::to_string(k) +
                " binaries exceed the cap of 24");
  }
  lp::LpModel lp = model.lp;
  MilpSolution best;
  bool found = false;
  long nodes = 0;

  // Lexicographically ascending assignments: the first binary is the most
  // significant digit, so the first optimum found is the lexicographically
  // smallest one.
  const long count = 1L << k;
  for (long mask = 0; mask < count; ++mask) {
    for (int j = 0; j < k; ++j) {
      int bit = static_cast<int>((mask >> (k - 1 - j)) & 1);
      lp.set_bounds(model.binaries[j], bit, bit);
    }
    lp::LpSolution rel = lp::solve_lp(lp, lp_options);
    ++nodes;
    if (rel.status != lp::SolveStatus::optimal) continue;
    if (!found || rel.objective > best.objective + guard(rel.objective)) {
      best.objective = rel.objective;
      best.x = rel.x;
      for (int j : model.binaries) best.x[j] = std::round(best.x[j]);
      found = true;
    }
  }
  best.nodes_explored = nodes;
  if (!found) {
    best.status = MilpSolution::Status::infeasible;
    return best;
  }
  best.status = MilpSolution::Status::optimal;
  best.best_bound = best.objective;
  return best;
}

}  // namespace tep::milp
