#include <Eigen/Dense>

#include "doctest.h"
#include "tep/errors.hpp"
#include "tep/net/types.hpp"
#include "tep/net/validate.hpp"

using namespace tep;

namespace {

net::Network two_node_net() {
  net::Network nw;
  nw.nodes = {{0}, {1}};
  nw.lines = {{0, 0, 1, 1.0, 0.0, 200.0, 10.0, {3, 6, 9}}};
  nw.allocation = net::Network::postage_stamp_allocation(1, 2);
  return nw;
}

net::Network triangle_net() {
  net::Network nw;
  nw.nodes = {{0}, {1}, {2}};
  nw.lines = {
      {0, 0, 1, 1.0, 5.0, 1.0, 1.0, {1}},
      {1, 1, 2, 1.0, 5.0, 1.0, 1.0, {1}},
      {2, 0, 2, 1.0, 5.0, 1.0, 1.0, {1}},
  };
  nw.allocation = net::Network::postage_stamp_allocation(3, 3);
  return nw;
}

market::Instance minimal_instance(net::Network nw) {
  market::Instance inst;
  inst.network = std::move(nw);
  inst.periods = {{0, 1.0}};
  inst.bids = {{0, 0, 0, market::Side::demand, 10.0, 1.0}};
  return inst;
}

}  // namespace

TEST_CASE("incidence matrix follows the exit/enter sign convention") {
  net::IncidenceMatrix a = net::build_incidence(two_node_net());
  CHECK(a.entries(0, 0) == 1.0);
  CHECK(a.entries(0, 1) == -1.0);

  net::IncidenceMatrix t = net::build_incidence(triangle_net());
  Eigen::MatrixXd expect(3, 3);
  expect << 1, -1, 0, 0, 1, -1, 1, 0, -1;
  CHECK((t.entries - expect).norm() == doctest::Approx(0.0));
}

TEST_CASE("incidence rows sum to zero with absolute sum two") {
  for (const auto& nw : {two_node_net(), triangle_net()}) {
    net::IncidenceMatrix a = net::build_incidence(nw);
    for (int m = 0; m < a.entries.rows(); ++m) {
      CHECK(a.entries.row(m).sum() == doctest::Approx(0.0));
      CHECK(a.entries.row(m).cwiseAbs().sum() == doctest::Approx(2.0));
    }
  }
}

TEST_CASE("loop basis: radial has none, triangle has one") {
  net::LoopMatrix radial = net::build_loop_basis(two_node_net());
  CHECK(radial.loop_count() == 0);

  net::LoopMatrix tri = net::build_loop_basis(triangle_net());
  REQUIRE(tri.loop_count() == 1);
  // One cycle with unit reactances: [1, 1, -1] up to global sign.
  Eigen::RowVector3d row = tri.entries.row(0);
  if (row[0] < 0) row = -row;
  CHECK(row[0] == doctest::Approx(1.0));
  CHECK(row[1] == doctest::Approx(1.0));
  CHECK(row[2] == doctest::Approx(-1.0));
}

TEST_CASE("adding one chord adds exactly one loop row") {
  net::Network nw;
  nw.nodes = {{0}, {1}, {2}, {3}};
  nw.lines = {
      {0, 0, 1, 0.5, 1.0, 1.0, 1.0, {1}},
      {1, 1, 2, 0.4, 1.0, 1.0, 1.0, {1}},
      {2, 2, 3, 0.3, 1.0, 1.0, 1.0, {1}},
  };
  nw.allocation = net::Network::postage_stamp_allocation(3, 4);
  CHECK(net::build_loop_basis(nw).loop_count() == 0);

  nw.lines.push_back({3, 0, 3, 0.7, 1.0, 1.0, 1.0, {1}});
  nw.allocation = net::Network::postage_stamp_allocation(4, 4);
  CHECK(net::build_loop_basis(nw).loop_count() == 1);
}

TEST_CASE("loop rows annihilate angle-induced flows") {
  net::Network nw = triangle_net();
  net::LoopMatrix psi = net::build_loop_basis(nw);
  // DC flows from arbitrary angles satisfy every loop row by construction.
  Eigen::Vector3d theta(0.3, -0.8, 0.45);
  Eigen::VectorXd f(3);
  for (const net::Line& line : nw.lines) {
    f[line.id] = (theta[line.from_node] - theta[line.to_node]) / line.reactance;
  }
  CHECK((psi.entries * f).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("empty network is rejected by the loop builder") {
  net::Network empty;
  CHECK_THROWS_AS(net::build_loop_basis(empty), Error);
}

TEST_CASE("validation accepts a well-formed instance") {
  market::Instance inst = minimal_instance(two_node_net());
  CHECK(net::validate_instance(inst).ok());
}

TEST_CASE("validation flags structural defects") {
  SUBCASE("nonpositive reactance") {
    market::Instance inst = minimal_instance(two_node_net());
    inst.network.lines[0].reactance = 0.0;
    auto report = net::validate_instance(inst);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations[0].code == "nonpositive reactance");
  }
  SUBCASE("allocation shape mismatch") {
    market::Instance inst = minimal_instance(two_node_net());
    inst.network.allocation = Eigen::MatrixXd::Ones(1, 1);
    auto report = net::validate_instance(inst);
    REQUIRE_FALSE(report.ok());
    bool found = false;
    for (const auto& v : report.violations) found |= v.code == "allocation shape";
    CHECK(found);
  }
  SUBCASE("bid referencing an unknown node") {
    market::Instance inst = minimal_instance(two_node_net());
    inst.bids[0].node = 7;
    auto report = net::validate_instance(inst);
    REQUIRE_FALSE(report.ok());
  }
  SUBCASE("negative qmax") {
    market::Instance inst = minimal_instance(two_node_net());
    inst.bids[0].qmax = -1.0;
    CHECK_FALSE(net::validate_instance(inst).ok());
  }
  SUBCASE("disconnected network") {
    market::Instance inst = minimal_instance(two_node_net());
    inst.network.nodes.push_back({2});
    inst.network.allocation = net::Network::postage_stamp_allocation(1, 3);
    CHECK_FALSE(net::validate_instance(inst).ok());
  }
  SUBCASE("empty lumpy set") {
    market::Instance inst = minimal_instance(two_node_net());
    inst.network.lines[0].lumpy_set.clear();
    CHECK_FALSE(net::validate_instance(inst).ok());
  }
}
