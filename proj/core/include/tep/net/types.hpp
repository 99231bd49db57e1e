#pragma once

#include <Eigen/Dense>
#include <vector>

namespace tep::net {

struct Node {
  int id = 0;  // contiguous from 0
};

// A transmission line, existing (f0 > 0) or candidate (f0 == 0), with its
// investment cost structure and the finite menu of capacity additions.
struct Line {
  int id = 0;
  int from_node = 0;  // positive flow exits here
  int to_node = 0;    // positive flow enters here
  double reactance = 1.0;           // per unit, > 0
  double f0 = 0.0;                  // existing capacity, MW
  double k_fix = 0.0;               // fixed build cost, money/period
  double k_var = 0.0;               // variable cost, money per MW-period
  std::vector<double> lumpy_set;    // candidate added capacities, ascending, MW
};

struct Network {
  std::vector<Node> nodes;
  std::vector<Line> lines;
  // Allocation factors delta(m, n) distributing tariff burden; one row per
  // line. Negative entries mean a credit is collected. Defaults to all-ones
  // (postage stamp) when constructed through the instance loader/generators.
  Eigen::MatrixXd allocation;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int line_count() const { return static_cast<int>(lines.size()); }

  // All-ones allocation matrix matching this network's shape.
  static Eigen::MatrixXd postage_stamp_allocation(int lines, int nodes) {
    return Eigen::MatrixXd::Ones(lines, nodes);
  }
};

// Entries in {-1, 0, +1}: +1 where positive flow exits the node, -1 where it
// enters. One row per line.
struct IncidenceMatrix {
  Eigen::MatrixXd entries;
};

// Fundamental-cycle matrix: entry (l, m) is the signed reactance of line m in
// loop l, zero when the line is not part of the loop. Feasible flows satisfy
// entries * f = 0.
struct LoopMatrix {
  Eigen::MatrixXd entries;

  int loop_count() const { return static_cast<int>(entries.rows()); }
};

IncidenceMatrix build_incidence(const Network& network);

// Spanning-tree construction: one row per chord. Throws tep::Error on an
// empty network. Works per connected component.
LoopMatrix build_loop_basis(const Network& network);

// Number of connected components of the undirected line graph.
int connected_components(const Network& network);

}  // namespace tep::net
