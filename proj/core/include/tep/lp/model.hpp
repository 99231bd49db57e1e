#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace tep::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Relation { le, eq, ge };

// Sparse maximization LP built row by row. Variable and row labels carry the
// model's bookkeeping (symbol, period, entity index) and survive untouched
// into LP-file dumps.
class LpModel {
 public:
  int add_var(std::string label, double lo, double up, double obj = 0.0);
  int add_row(std::string label, Relation rel, double rhs);
  void add_coeff(int row, int col, double value);

  void set_obj(int col, double obj) { obj_[col] = obj; }
  void set_bounds(int col, double lo, double up);
  void set_rhs(int row, double rhs) { rhs_[row] = rhs; }
  void add_objective_constant(double c) { obj_constant_ += c; }

  int var_count() const { return static_cast<int>(obj_.size()); }
  int row_count() const { return static_cast<int>(rhs_.size()); }

  double obj(int col) const { return obj_[col]; }
  double lo(int col) const { return lo_[col]; }
  double up(int col) const { return up_[col]; }
  double rhs(int row) const { return rhs_[row]; }
  double obj_constant() const { return obj_constant_; }
  Relation relation(int row) const { return rel_[row]; }
  const std::string& var_label(int col) const { return var_label_[col]; }
  const std::string& row_label(int row) const { return row_label_[row]; }
  const std::vector<std::pair<int, double>>& row_entries(int row) const {
    return entries_[row];
  }

  // Throws tep::Error when any entry, bound, cost or rhs is non-finite where
  // finiteness is required, or when a bound pair is inverted.
  void check_consistent() const;

 private:
  std::vector<double> obj_, lo_, up_;
  std::vector<std::string> var_label_;
  std::vector<Relation> rel_;
  std::vector<double> rhs_;
  std::vector<std::string> row_label_;
  std::vector<std::vector<std::pair<int, double>>> entries_;
  double obj_constant_ = 0.0;
};

}  // namespace tep::lp
