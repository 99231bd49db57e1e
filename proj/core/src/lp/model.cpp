#include "tep/lp/model.hpp"

#include <cmath>

#include "tep/errors.hpp"

namespace tep::lp {

int LpModel::add_var(std::string label, double lo, double up, double obj) {
  obj_.push_back(obj);
  lo_.push_back(lo);
  up_.push_back(up);
  var_label_.push_back(std::move(label));
  return var_count() - 1;
}

int LpModel::add_row(std::string label, Relation rel, double rhs) {
  rel_.push_back(rel);
  rhs_.push_back(rhs);
  row_label_.push_back(std::move(label));
  entries_.emplace_back();
  return row_count() - 1;
}

void LpModel::add_coeff(int row, int col, double value) {
  if (value == 0.0) return;
  entries_[row].push_back({col, value});
}

void LpModel::set_bounds(int col, double lo, double up) {
  lo_[col] = lo;
  up_[col] = up;
}

void LpModel::check_consistent() const {
  for (int j = 0; j < var_count(); ++j) {
    if (std::isnan(lo_[j]) || std::isnan(up_[j]) || lo_[j] > up_[j]) {
      throw Error("LpModel: bad bounds on variable " + var_label_[j]);
    }
    if (!std::isfinite(obj_[j])) {
      throw Error("LpModel: non-finite objective on variable " + var_label_[j]);
    }
  }
  for (int i = 0; i < row_count(); ++i) {
    if (!std::isfinite(rhs_[i])) {
      throw Error("LpModel: non-finite rhs on row " + row_label_[i]);
    }
    for (auto [col, v] : entries_[i]) {
      if (col < 0 || col >= var_count() || !std::isfinite(v)) {
        throw Error("LpModel: bad coefficient in row " + row_label_[i]);
      }
    }
  }
}

}  // namespace tep::lp
