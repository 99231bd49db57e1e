#include "tep/lp/simplex.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "tep/constants.hpp"
#include "tep/errors.hpp"

namespace tep::lp {
namespace {

constexpr double kPivotTol = tol::pivot;
constexpr double kFeasTol = tol::feasibility;
constexpr double kDualTol = 1e-9;
constexpr double kEtaDropTol = 1e-13;

// LU factorization of the current basis with product-form updates between
// refactorizations. Dense path for small bases, SparseLU above that.
class BasisLU {
 public:
  void factor(int m, const std::vector<std::vector<std::pair<int, double>>>& cols) {
    m_ = m;
    etas_.clear();
    if (m_ == 0) {
      dense_ = true;
      singular_ = false;
    } else if (m_ <= 96) {
      dense_ = true;
      Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m_, m_);
      for (int j = 0; j < m_; ++j) {
        for (auto [i, v] : cols[j]) b(i, j) = v;
      }
      dense_lu_.compute(b);
      // PartialPivLU has no rank query; probe with a solve on a sane vector.
      if (!b.allFinite()) throw LpError("simplex: non-finite basis");
      singular_ = std::abs(dense_lu_.determinant()) < 1e-300;
    } else {
      dense_ = false;
      std::vector<Eigen::Triplet<double>> trip;
      for (int j = 0; j < m_; ++j) {
        for (auto [i, v] : cols[j]) trip.push_back({i, j, v});
      }
      Eigen::SparseMatrix<double> b(m_, m_);
      b.setFromTriplets(trip.begin(), trip.end());
      b.makeCompressed();
      sparse_lu_ = std::make_unique<Eigen::SparseLU<Eigen::SparseMatrix<double>>>();
      sparse_lu_->compute(b);
      singular_ = sparse_lu_->info() != Eigen::Success;
    }
  }

  bool singular() const { return singular_; }
  int eta_count() const { return static_cast<int>(etas_.size()); }

  // x := B^{-1} x
  void ftran(Eigen::VectorXd& x) const {
    if (m_ == 0) return;
    if (dense_) {
      x = dense_lu_.solve(x);
    } else {
      x = sparse_lu_->solve(x);
    }
    for (const Eta& e : etas_) {
      double xr = x[e.row] / e.pivot;
      if (xr != 0.0) {
        for (auto [i, v] : e.entries) x[i] -= v * xr;
      }
      x[e.row] = xr;
    }
  }

  // y := B^{-T} y
  void btran(Eigen::VectorXd& y) const {
    if (m_ == 0) return;
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
      double acc = y[it->row];
      for (auto [i, v] : it->entries) acc -= v * y[i];
      y[it->row] = acc / it->pivot;
    }
    if (dense_) {
      y = dense_lu_.transpose().solve(y);
    } else {
      y = sparse_lu_->adjoint().solve(y);
    }
  }

  // Basis column at position r replaced; w = B^{-1} a_entering (already
  // ftran'd). Returns false when the update would be numerically unsafe.
  bool update(int r, const Eigen::VectorXd& w) {
    double piv = w[r];
    if (std::abs(piv) < kPivotTol) return false;
    Eta e;
    e.row = r;
    e.pivot = piv;
    for (int i = 0; i < m_; ++i) {
      if (i != r && std::abs(w[i]) > kEtaDropTol) e.entries.push_back({i, w[i]});
    }
    etas_.push_back(std::move(e));
    return true;
  }

 private:
  struct Eta {
    int row = 0;
    double pivot = 1.0;
    std::vector<std::pair<int, double>> entries;  // excludes the pivot row
  };

  int m_ = 0;
  bool dense_ = true;
  bool singular_ = false;
  Eigen::PartialPivLU<Eigen::MatrixXd> dense_lu_;
  std::unique_ptr<Eigen::SparseLU<Eigen::SparseMatrix<double>>> sparse_lu_;
  std::vector<Eta> etas_;
};

enum class NbStat { at_lower, at_upper, free_zero };

class Simplex {
 public:
  Simplex(const LpModel& model, const SimplexOptions& options)
      : model_(model), opt_(options) {
    m_ = model.row_count();
    n_ = model.var_count();
    total_ = n_ + m_;
    build_columns();
    iteration_limit_ = opt_.iteration_limit > 0
                           ? opt_.iteration_limit
                           : 200L * (m_ + n_) + 20000L;
  }

  LpSolution run() {
    init_slack_basis();
    LpSolution sol;
    if (!phase1()) {
      sol.status = SolveStatus::infeasible;
      sol.iterations = iterations_;
      sol.phase1_iterations = phase1_iterations_;
      return sol;
    }
    bool bounded = phase2();
    extract(sol, bounded);
    return sol;
  }

 private:
  // --- model data in computational form -------------------------------
  void build_columns() {
    cols_.assign(total_, {});
    cost_.assign(total_, 0.0);
    lo_.assign(total_, 0.0);
    up_.assign(total_, 0.0);
    for (int j = 0; j < n_; ++j) {
      cost_[j] = model_.obj(j);
      lo_[j] = model_.lo(j);
      up_[j] = model_.up(j);
    }
    for (int i = 0; i < m_; ++i) {
      for (auto [col, v] : model_.row_entries(i)) {
        cols_[col].push_back({i, v});
      }
      int s = n_ + i;
      cols_[s].push_back({i, 1.0});
      switch (model_.relation(i)) {
        case Relation::le: lo_[s] = 0.0; up_[s] = kInf; break;
        case Relation::eq: lo_[s] = 0.0; up_[s] = 0.0; break;
        case Relation::ge: lo_[s] = -kInf; up_[s] = 0.0; break;
      }
    }
    // Merge duplicate (row, col) entries so pivots see one coefficient.
    for (auto& col : cols_) {
      if (col.size() < 2) continue;
      std::sort(col.begin(), col.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<std::pair<int, double>> merged;
      for (auto [i, v] : col) {
        if (!merged.empty() && merged.back().first == i) {
          merged.back().second += v;
        } else {
          merged.push_back({i, v});
        }
      }
      col.swap(merged);
    }
    rhs_.resize(m_);
    infeas_scale_ = 0.0;
    for (int i = 0; i < m_; ++i) {
      rhs_[i] = model_.rhs(i);
      infeas_scale_ = std::max(infeas_scale_, std::abs(rhs_[i]));
    }
  }

  void init_slack_basis() {
    basic_.resize(m_);
    in_basis_pos_.assign(total_, -1);
    nb_stat_.assign(total_, NbStat::at_lower);
    x_.assign(total_, 0.0);
    for (int j = 0; j < total_; ++j) {
      if (std::isfinite(lo_[j])) {
        nb_stat_[j] = NbStat::at_lower;
        x_[j] = lo_[j];
      } else if (std::isfinite(up_[j])) {
        nb_stat_[j] = NbStat::at_upper;
        x_[j] = up_[j];
      } else {
        nb_stat_[j] = NbStat::free_zero;
        x_[j] = 0.0;
      }
    }
    for (int i = 0; i < m_; ++i) {
      int s = n_ + i;
      basic_[i] = s;
      in_basis_pos_[s] = i;
    }
    refactor();
  }

  void refactor() {
    std::vector<std::vector<std::pair<int, double>>> bcols(m_);
    for (int i = 0; i < m_; ++i) bcols[i] = cols_[basic_[i]];
    lu_.factor(m_, bcols);
    if (lu_.singular()) {
      throw LpError("simplex: numerically singular basis (" +
                    std::to_string(m_) + " rows)");
    }
    recompute_basic_values();
  }

  void recompute_basic_values() {
    Eigen::VectorXd r = Eigen::VectorXd::Zero(m_);
    for (int i = 0; i < m_; ++i) r[i] = rhs_[i];
    for (int j = 0; j < total_; ++j) {
      if (in_basis_pos_[j] >= 0 || x_[j] == 0.0) continue;
      for (auto [i, v] : cols_[j]) r[i] -= v * x_[j];
    }
    lu_.ftran(r);
    for (int i = 0; i < m_; ++i) x_[basic_[i]] = r[i];
  }

  double infeasibility() const {
    double sum = 0.0;
    for (int i = 0; i < m_; ++i) {
      double v = x_[basic_[i]];
      if (v < lo_[basic_[i]]) sum += lo_[basic_[i]] - v;
      if (v > up_[basic_[i]]) sum += v - up_[basic_[i]];
    }
    return sum;
  }

  // Reduced costs for the given basic cost vector (zero on nonbasics in
  // phase 1, model costs in phase 2).
  Eigen::VectorXd duals(const Eigen::VectorXd& cb) const {
    Eigen::VectorXd y = cb;
    lu_.btran(y);
    return y;
  }

  double reduced_cost(int j, const Eigen::VectorXd& y, bool phase2) const {
    double d = phase2 ? cost_[j] : 0.0;
    for (auto [i, v] : cols_[j]) d -= y[i] * v;
    return d;
  }

  // Entering candidate: (column, direction). Direction +1 increases the
  // variable, -1 decreases it.
  struct Candidate {
    int col = -1;
    int dir = 0;
    double score = 0.0;
  };

  Candidate price(const Eigen::VectorXd& y, bool phase2, bool bland) const {
    Candidate best;
    for (int j = 0; j < total_; ++j) {
      if (in_basis_pos_[j] >= 0) continue;
      if (up_[j] - lo_[j] < kPivotTol && nb_stat_[j] != NbStat::free_zero) continue;
      double d = reduced_cost(j, y, phase2);
      int dir = 0;
      if (nb_stat_[j] == NbStat::at_lower) {
        if (d > kDualTol) dir = 1;
      } else if (nb_stat_[j] == NbStat::at_upper) {
        if (d < -kDualTol) dir = -1;
      } else {  // free at zero
        if (d > kDualTol) dir = 1;
        else if (d < -kDualTol) dir = -1;
      }
      if (dir == 0) continue;
      if (bland) return {j, dir, std::abs(d)};
      if (std::abs(d) > best.score) best = {j, dir, std::abs(d)};
    }
    return best;
  }

  struct RatioResult {
    double step = kInf;
    int leaving_pos = -1;     // -1: entering hits its own opposite bound
    int leaving_bound = 0;    // -1 leaves at lower, +1 leaves at upper
  };

  // Minimum-ratio test. In phase 1 a basic variable that is currently outside
  // a bound blocks when it reaches the violated bound (short-step rule); a
  // variable whose violation worsens never blocks, its cost drives pricing.
  RatioResult ratio_test(int q, int dir, const Eigen::VectorXd& w, bool bland) const {
    RatioResult r;
    double own_range = up_[q] - lo_[q];
    if (std::isfinite(own_range)) r.step = own_range;

    double best_pivot = 0.0;
    const double tie = 1e-9;
    for (int i = 0; i < m_; ++i) {
      double wi = w[i];
      if (std::abs(wi) < kPivotTol) continue;
      int b = basic_[i];
      double rate = -dir * wi;  // d x_b / d t
      double xb = x_[b];
      double limit = kInf;
      int bound = 0;
      if (rate > 0) {
        if (xb < lo_[b] - kFeasTol) {
          limit = (lo_[b] - xb) / rate;        // entering feasibility from below
          bound = -1;
        } else if (xb > up_[b] + kFeasTol) {
          continue;                            // violation worsens, no block
        } else if (std::isfinite(up_[b])) {
          limit = (up_[b] - xb) / rate;
          bound = +1;
        }
      } else {
        if (xb > up_[b] + kFeasTol) {
          limit = (xb - up_[b]) / (-rate);     // entering feasibility from above
          bound = +1;
        } else if (xb < lo_[b] - kFeasTol) {
          continue;
        } else if (std::isfinite(lo_[b])) {
          limit = (xb - lo_[b]) / (-rate);
          bound = -1;
        }
      }
      if (limit == kInf) continue;
      limit = std::max(limit, 0.0);  // absorb tolerance-level overshoot
      bool better;
      if (limit < r.step - tie) {
        better = true;
      } else if (limit <= r.step + tie && r.leaving_pos >= 0) {
        better = bland ? basic_[i] < basic_[r.leaving_pos]
                       : std::abs(wi) > best_pivot;
      } else {
        better = limit < r.step;
      }
      if (better) {
        r.step = std::min(limit, r.step);
        r.leaving_pos = i;
        r.leaving_bound = bound;
        best_pivot = std::abs(wi);
      }
    }
    return r;
  }

  // Applies a step of size t along entering column q (direction dir) with
  // ftran'd column w, updating basic values.
  void apply_step(int q, int dir, double t, const Eigen::VectorXd& w) {
    if (t == 0.0) return;
    for (int i = 0; i < m_; ++i) {
      if (w[i] != 0.0) x_[basic_[i]] -= dir * w[i] * t;
    }
    x_[q] += dir * t;
  }

  bool pivot(int q, int dir, const RatioResult& r, Eigen::VectorXd& w) {
    apply_step(q, dir, r.step, w);
    if (r.leaving_pos < 0) {
      // Bound flip: no basis change.
      nb_stat_[q] = (dir > 0) ? NbStat::at_upper : NbStat::at_lower;
      return true;
    }
    int leaving = basic_[r.leaving_pos];
    // Pin the leaving variable exactly on its bound to stop drift.
    x_[leaving] = (r.leaving_bound > 0) ? up_[leaving] : lo_[leaving];
    nb_stat_[leaving] = (r.leaving_bound > 0) ? NbStat::at_upper : NbStat::at_lower;
    if (!std::isfinite(x_[leaving])) {
      x_[leaving] = 0.0;
      nb_stat_[leaving] = NbStat::free_zero;
    }
    basic_[r.leaving_pos] = q;
    in_basis_pos_[q] = r.leaving_pos;
    in_basis_pos_[leaving] = -1;
    if (!lu_.update(r.leaving_pos, w)) {
      refactor();
    } else if (lu_.eta_count() >= opt_.refactor_interval) {
      refactor();
    }
    return true;
  }

  void bump_iteration(bool degenerate) {
    ++iterations_;
    if (iterations_ > iteration_limit_) {
      throw LpError("simplex: iteration limit (" + std::to_string(iteration_limit_) +
                    ") exceeded");
    }
    if (degenerate) {
      if (++stall_count_ >= opt_.stall_threshold) bland_ = true;
    } else {
      stall_count_ = 0;
      bland_ = false;
    }
  }

  bool phase1() {
    while (true) {
      double infeas = infeasibility();
      if (infeas <= kFeasTol * (1.0 + std::abs(infeas_scale_))) return true;
      // Gradient of -infeasibility w.r.t. basic values.
      Eigen::VectorXd cb = Eigen::VectorXd::Zero(m_);
      for (int i = 0; i < m_; ++i) {
        int b = basic_[i];
        if (x_[b] < lo_[b] - kFeasTol) cb[i] = 1.0;
        else if (x_[b] > up_[b] + kFeasTol) cb[i] = -1.0;
      }
      Eigen::VectorXd y = duals(cb);
      Candidate cand = price(y, /*phase2=*/false, bland_);
      if (cand.col < 0) return false;  // stuck infeasible
      Eigen::VectorXd w = column_vector(cand.col);
      lu_.ftran(w);
      RatioResult r = ratio_test(cand.col, cand.dir, w, bland_);
      if (r.step == kInf) {
        // Infeasibility would decrease forever; cannot happen for a bounded
        // measure, so treat as numerical trouble.
        throw LpError("simplex: unbounded phase-1 direction");
      }
      ++phase1_iterations_;
      bump_iteration(r.step <= kFeasTol);
      pivot(cand.col, cand.dir, r, w);
    }
  }

  bool phase2() {
    while (true) {
      Eigen::VectorXd cb(m_);
      for (int i = 0; i < m_; ++i) cb[i] = cost_[basic_[i]];
      Eigen::VectorXd y = duals(cb);
      Candidate cand = price(y, /*phase2=*/true, bland_);
      if (cand.col < 0) return true;  // optimal
      Eigen::VectorXd w = column_vector(cand.col);
      lu_.ftran(w);
      RatioResult r = ratio_test(cand.col, cand.dir, w, bland_);
      if (r.step == kInf) return false;  // unbounded
      bump_iteration(r.step <= kFeasTol);
      pivot(cand.col, cand.dir, r, w);
      if (iterations_ % 997 == 0) recompute_basic_values();
    }
  }

  Eigen::VectorXd column_vector(int j) const {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(m_);
    for (auto [i, v] : cols_[j]) w[i] = v;
    return w;
  }

  void extract(LpSolution& sol, bool bounded) {
    if (!bounded) {
      sol.status = SolveStatus::unbounded;
      sol.iterations = iterations_;
      sol.phase1_iterations = phase1_iterations_;
      return;
    }
    recompute_basic_values();
    sol.status = SolveStatus::optimal;
    sol.iterations = iterations_;
    sol.phase1_iterations = phase1_iterations_;
    sol.x.assign(n_, 0.0);
    for (int j = 0; j < n_; ++j) sol.x[j] = x_[j];

    Eigen::VectorXd cb(m_);
    for (int i = 0; i < m_; ++i) cb[i] = cost_[basic_[i]];
    Eigen::VectorXd y = duals(cb);
    sol.row_dual.assign(m_, 0.0);
    for (int i = 0; i < m_; ++i) sol.row_dual[i] = y[i];
    sol.reduced_cost.assign(n_, 0.0);
    for (int j = 0; j < n_; ++j) {
      sol.reduced_cost[j] = in_basis_pos_[j] >= 0 ? 0.0 : reduced_cost(j, y, true);
    }
    sol.row_activity.assign(m_, 0.0);
    for (int i = 0; i < m_; ++i) sol.row_activity[i] = rhs_[i] - x_[n_ + i];
    double obj = model_.obj_constant();
    for (int j = 0; j < n_; ++j) obj += cost_[j] * x_[j];
    sol.objective = obj;
  }

  const LpModel& model_;
  SimplexOptions opt_;
  int m_ = 0, n_ = 0, total_ = 0;
  long iterations_ = 0, phase1_iterations_ = 0, iteration_limit_ = 0;
  int stall_count_ = 0;
  bool bland_ = false;
  double infeas_scale_ = 0.0;

  std::vector<std::vector<std::pair<int, double>>> cols_;
  std::vector<double> cost_, lo_, up_, rhs_;
  std::vector<int> basic_, in_basis_pos_;
  std::vector<NbStat> nb_stat_;
  std::vector<double> x_;
  BasisLU lu_;
};

}  // namespace

LpSolution solve_lp(const LpModel& model, const SimplexOptions& options) {
  model.check_consistent();
  Simplex solver(model, options);
  return solver.run();
}

}  // namespace tep::lp
