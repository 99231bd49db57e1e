#include "tep/net/validate.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace tep::net {

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const Violation& v : violations) {
    out << v.code << ": " << v.message << "\n";
  }
  return out.str();
}

ValidationReport validate_instance(const market::Instance& instance) {
  ValidationReport report;
  auto add = [&](const std::string& code, const std::string& message) {
    report.violations.push_back({code, message});
  };
  const net::Network& nw = instance.network;
  const int n = nw.node_count();
  const int m = nw.line_count();

  std::set<int> node_ids;
  for (int i = 0; i < n; ++i) {
    if (nw.nodes[i].id != i) {
      add("node id", "node ids must be contiguous from 0, found id " +
                         std::to_string(nw.nodes[i].id) + " at position " +
                         std::to_string(i));
    }
    if (!node_ids.insert(nw.nodes[i].id).second) {
      add("duplicate node", "duplicate node id " + std::to_string(nw.nodes[i].id));
    }
  }

  std::set<int> line_ids;
  for (int i = 0; i < m; ++i) {
    const Line& line = nw.lines[i];
    std::string tag = "line " + std::to_string(line.id);
    if (line.id != i) add("line id", tag + " not contiguous at position " + std::to_string(i));
    if (!line_ids.insert(line.id).second) add("duplicate line", "duplicate " + tag);
    if (line.from_node < 0 || line.from_node >= n || line.to_node < 0 || line.to_node >= n) {
      add("line endpoint", tag + " references an unknown node");
      continue;
    }
    if (line.from_node == line.to_node) add("self loop", tag + " connects a node to itself");
    if (!(line.reactance > 0.0) || !std::isfinite(line.reactance)) {
      add("nonpositive reactance", tag + " has reactance " + std::to_string(line.reactance));
    }
    if (line.f0 < 0.0 || !std::isfinite(line.f0)) add("negative capacity", tag + " has f0 < 0");
    if (line.k_fix < 0.0 || line.k_var < 0.0) add("negative cost", tag + " has a negative cost");
    if (line.lumpy_set.empty()) {
      add("empty lumpy set", tag + " is a candidate line with no capacity options");
    }
    double prev = 0.0;
    for (double cap : line.lumpy_set) {
      if (!(cap > prev) || !std::isfinite(cap)) {
        add("lumpy set order", tag + " lumpy set must be strictly increasing and positive");
        break;
      }
      prev = cap;
    }
  }

  if (nw.allocation.rows() != m || nw.allocation.cols() != n) {
    add("allocation shape", "allocation matrix is " + std::to_string(nw.allocation.rows()) +
                                "x" + std::to_string(nw.allocation.cols()) + ", expected " +
                                std::to_string(m) + "x" + std::to_string(n));
  } else if (!nw.allocation.allFinite()) {
    add("allocation value", "allocation matrix contains non-finite entries");
  }

  if (instance.periods.empty()) add("no periods", "instance defines no periods");
  std::set<int> period_ids;
  for (const market::Period& p : instance.periods) {
    if (!period_ids.insert(p.id).second) {
      add("duplicate period", "duplicate period id " + std::to_string(p.id));
    }
    if (!(p.weight > 0.0) || !std::isfinite(p.weight)) {
      add("period weight", "period " + std::to_string(p.id) + " has non-positive weight");
    }
  }

  for (int i = 0; i < instance.bid_count(); ++i) {
    const market::Bid& bid = instance.bids[i];
    std::string tag = "bid " + std::to_string(bid.id);
    if (bid.id != i) add("bid id", tag + " not contiguous at position " + std::to_string(i));
    if (bid.node < 0 || bid.node >= n) add("bid node", tag + " references an unknown node");
    if (bid.period < 0 || bid.period >= instance.period_count()) {
      add("bid period", tag + " references an unknown period");
    }
    if (bid.qmax < 0.0 || !std::isfinite(bid.qmax)) add("negative qmax", tag + " has qmax < 0");
    if (!std::isfinite(bid.price)) add("bid price", tag + " has a non-finite price");
  }

  // One synchronous system: reject disconnected networks outright.
  if (n > 0 && connected_components(nw) != 1) {
    add("disconnected", "network is not connected");
  }

  return report;
}

}  // namespace tep::net
