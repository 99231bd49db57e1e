#include "tep/lp/write_lp.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace tep::lp {
namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_linear(std::ostream& out, const std::vector<std::pair<int, double>>& terms,
                  const LpModel& model) {
  bool first = true;
  for (auto [col, v] : terms) {
    if (v == 0.0) continue;
    if (first) {
      if (v < 0) out << "- ";
      first = false;
    } else {
      out << (v < 0 ? " - " : " + ");
    }
    double a = std::abs(v);
    if (a != 1.0) out << num(a) << " ";
    out << model.var_label(col);
  }
  if (first) out << "0 " << model.var_label(0);
}

}  // namespace

void write_lp_file(const LpModel& model, std::ostream& out,
                   const std::vector<int>& binary_vars) {
  out << "\\ tepkit model: " << model.var_count() << " vars, "
      << model.row_count() << " rows\n";
  out << "Maximize\n obj: ";
  std::vector<std::pair<int, double>> obj_terms;
  for (int j = 0; j < model.var_count(); ++j) {
    if (model.obj(j) != 0.0) obj_terms.push_back({j, model.obj(j)});
  }
  write_linear(out, obj_terms, model);
  out << "\nSubject To\n";
  for (int i = 0; i < model.row_count(); ++i) {
    out << " " << model.row_label(i) << ": ";
    write_linear(out, model.row_entries(i), model);
    switch (model.relation(i)) {
      case Relation::le: out << " <= "; break;
      case Relation::eq: out << " = "; break;
      case Relation::ge: out << " >= "; break;
    }
    out << num(model.rhs(i)) << "\n";
  }
  out << "Bounds\n";
  for (int j = 0; j < model.var_count(); ++j) {
    double lo = model.lo(j), up = model.up(j);
    const std::string& name = model.var_label(j);
    if (!std::isfinite(lo) && !std::isfinite(up)) {
      out << " " << name << " free\n";
    } else if (!std::isfinite(lo)) {
      out << " -inf <= " << name << " <= " << num(up) << "\n";
    } else if (!std::isfinite(up)) {
      out << " " << name << " >= " << num(lo) << "\n";
    } else {
      out << " " << num(lo) << " <= " << name << " <= " << num(up) << "\n";
    }
  }
  if (!binary_vars.empty()) {
    out << "Binaries\n";
    for (int j : binary_vars) out << " " << model.var_label(j) << "\n";
  }
  out << "End\n";
}

}  // namespace tep::lp
