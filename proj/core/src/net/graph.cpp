#include "tep/net/types.hpp"

#include <queue>

#include "tep/errors.hpp"

namespace tep::net {

IncidenceMatrix build_incidence(const Network& network) {
  IncidenceMatrix a;
  a.entries = Eigen::MatrixXd::Zero(network.line_count(), network.node_count());
  for (const Line& line : network.lines) {
    a.entries(line.id, line.from_node) = 1.0;
    a.entries(line.id, line.to_node) = -1.0;
  }
  return a;
}

namespace {

struct TreeInfo {
  std::vector<int> parent_node;   // -1 at roots
  std::vector<int> parent_line;   // line id reaching this node from parent
  std::vector<int> depth;
  std::vector<int> chords;        // line ids not in the spanning forest
};

TreeInfo spanning_forest(const Network& network) {
  const int n = network.node_count();
  TreeInfo t;
  t.parent_node.assign(n, -1);
  t.parent_line.assign(n, -1);
  t.depth.assign(n, 0);

  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, line)
  for (const Line& line : network.lines) {
    adj[line.from_node].push_back({line.to_node, line.id});
    adj[line.to_node].push_back({line.from_node, line.id});
  }

  std::vector<bool> visited(n, false);
  std::vector<bool> in_tree(network.line_count(), false);
  for (int root = 0; root < n; ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      for (auto [v, line] : adj[u]) {
        if (visited[v]) continue;
        visited[v] = true;
        t.parent_node[v] = u;
        t.parent_line[v] = line;
        t.depth[v] = t.depth[u] + 1;
        in_tree[line] = true;
        frontier.push(v);
      }
    }
  }
  for (const Line& line : network.lines) {
    if (!in_tree[line.id]) t.chords.push_back(line.id);
  }
  return t;
}

}  // namespace

int connected_components(const Network& network) {
  if (network.node_count() == 0) return 0;
  TreeInfo t = spanning_forest(network);
  int roots = 0;
  for (int v = 0; v < network.node_count(); ++v) {
    if (t.parent_node[v] < 0) ++roots;
  }
  return roots;
}

LoopMatrix build_loop_basis(const Network& network) {
  if (network.node_count() == 0) {
    throw Error("build_loop_basis: empty network");
  }
  TreeInfo t = spanning_forest(network);

  LoopMatrix psi;
  psi.entries = Eigen::MatrixXd::Zero(static_cast<int>(t.chords.size()),
                                      network.line_count());

  // Each chord closes exactly one fundamental cycle: the chord plus the tree
  // path between its endpoints. The cycle is traversed in the chord's
  // from->to direction; a line contributes +reactance when traversed along
  // its own orientation and -reactance otherwise.
  int row = 0;
  for (int chord : t.chords) {
    const Line& c = network.lines[chord];
    psi.entries(row, chord) = c.reactance;

    // Walk both endpoints up to their lowest common ancestor. Moving from
    // c.to_node up toward the root follows the cycle direction; moving from
    // c.from_node up runs against it.
    int a = c.to_node;
    int b = c.from_node;
    auto step = [&](int v, double sign) {
      const Line& e = network.lines[t.parent_line[v]];
      // Tree edge traversed child->parent: along orientation iff the child is
      // the edge's from-node.
      double along = (e.from_node == v) ? 1.0 : -1.0;
      psi.entries(row, e.id) += sign * along * e.reactance;
      return t.parent_node[v];
    };
    while (t.depth[a] > t.depth[b]) a = step(a, 1.0);
    while (t.depth[b] > t.depth[a]) b = step(b, -1.0);
    while (a != b) {
      a = step(a, 1.0);
      b = step(b, -1.0);
    }
    ++row;
  }
  return psi;
}

}  // namespace tep::net
