#pragma once

#include <iosfwd>
#include <vector>

#include "tep/lp/model.hpp"

namespace tep::lp {

// CPLEX-LP text format with variable and row labels emitted verbatim, so a
// model can be cross-checked against an external solver. binary_vars, when
// non-empty, adds a Binaries section.
void write_lp_file(const LpModel& model, std::ostream& out,
                   const std::vector<int>& binary_vars = {});

}  // namespace tep::lp
