#include <cmath>
#include <vector>

#include "doctest.h"
#include "support/lp_oracle.hpp"
#include "tep/errors.hpp"
#include "tep/milp/solve.hpp"

using namespace tep;

namespace {

// Random MILP with a guaranteed feasible integral point: rows are anchored on
// a random 0/1 assignment of the binaries plus an interior continuous point.
milp::MilpModel random_milp(std::uint64_t seed, int max_bins = 8) {
  test::TestRng rng(seed);
  const int nb = rng.uniform_int(1, max_bins);
  const int nc = rng.uniform_int(0, 3);
  const int m = rng.uniform_int(1, 5);

  milp::MilpModel model;
  std::vector<double> anchor;
  for (int j = 0; j < nb; ++j) {
    model.binaries.push_back(
        model.lp.add_var("b" + std::to_string(j), 0.0, 1.0, rng.uniform(-4.0, 4.0)));
    anchor.push_back(rng.uniform_int(0, 1));
  }
  for (int j = 0; j < nc; ++j) {
    double up = rng.uniform(0.5, 2.0);
    model.lp.add_var("x" + std::to_string(j), 0.0, up, rng.uniform(-4.0, 4.0));
    anchor.push_back(rng.uniform(0.2, 0.8) * up);
  }
  const int total = nb + nc;
  for (int i = 0; i < m; ++i) {
    double act = 0.0;
    std::vector<std::pair<int, double>> entries;
    for (int j = 0; j < total; ++j) {
      if (rng.uniform(0.0, 1.0) < 0.7) {
        double v = rng.uniform(-2.0, 2.0);
        entries.push_back({j, v});
        act += v * anchor[j];
      }
    }
    lp::Relation rel = lp::Relation::le;
    double rhs = act + rng.uniform(0.0, 1.0);
    if (rng.uniform_int(0, 4) == 0) {
      rel = lp::Relation::ge;
      rhs = act - rng.uniform(0.0, 1.0);
    }
    int row = model.lp.add_row("r" + std::to_string(i), rel, rhs);
    for (auto [col, v] : entries) model.lp.add_coeff(row, col, v);
  }
  return model;
}

}  // namespace

TEST_CASE("binary knapsack picks the heavier item") {
  milp::MilpModel model;
  int a = model.lp.add_var("a", 0.0, 1.0, 3.0);
  int b = model.lp.add_var("b", 0.0, 1.0, 2.0);
  model.binaries = {a, b};
  int r = model.lp.add_row("cap", lp::Relation::le, 1.0);
  model.lp.add_coeff(r, a, 1.0);
  model.lp.add_coeff(r, b, 1.0);

  milp::MilpSolution sol = milp::solve_milp(model);
  REQUIRE(sol.status == milp::MilpSolution::Status::optimal);
  CHECK(sol.objective == doctest::Approx(3.0));
  CHECK(sol.x[a] == doctest::Approx(1.0));
  CHECK(sol.x[b] == doctest::Approx(0.0));

  milp::MilpSolution oracle = milp::enumerate_oracle(model);
  CHECK(oracle.objective == doctest::Approx(3.0));
}

TEST_CASE("integral relaxation terminates in one node") {
  milp::MilpModel model;
  int a = model.lp.add_var("a", 0.0, 1.0, 1.0);
  model.binaries = {a};
  // No constraint pulls a to the interior: relaxation lands on a bound.
  milp::MilpSolution sol = milp::solve_milp(model);
  REQUIRE(sol.status == milp::MilpSolution::Status::optimal);
  CHECK(sol.nodes_explored == 1);
  CHECK(sol.objective == doctest::Approx(1.0));
}

TEST_CASE("infeasible binary model reports infeasible") {
  milp::MilpModel model;
  int a = model.lp.add_var("a", 0.0, 1.0, 1.0);
  model.binaries = {a};
  int r = model.lp.add_row("impossible", lp::Relation::ge, 2.0);
  model.lp.add_coeff(r, a, 1.0);
  CHECK(milp::solve_milp(model).status == milp::MilpSolution::Status::infeasible);
  CHECK(milp::enumerate_oracle(model).status == milp::MilpSolution::Status::infeasible);
}

TEST_CASE("oracle refuses more than 24 binaries") {
  milp::MilpModel model;
  for (int j = 0; j < 25; ++j) {
    model.binaries.push_back(model.lp.add_var("b" + std::to_string(j), 0.0, 1.0, 1.0));
  }
  CHECK_THROWS_AS(milp::enumerate_oracle(model), Error);
}

TEST_CASE("100 random models agree with the enumeration oracle") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    milp::MilpModel model = random_milp(seed);
    milp::MilpSolution oracle = milp::enumerate_oracle(model);

    std::vector<double> bounds;
    milp::MilpOptions opt;
    opt.bound_trace = [&](double b) { bounds.push_back(b); };
    milp::MilpSolution sol = milp::solve_milp(model, opt);

    REQUIRE_MESSAGE(sol.status == oracle.status, "status mismatch at seed ", seed);
    if (sol.status != milp::MilpSolution::Status::optimal) continue;
    double scale = 1.0 + std::abs(oracle.objective);
    REQUIRE_MESSAGE(std::abs(sol.objective - oracle.objective) <= 1e-6 * scale,
                    "objective mismatch at seed ", seed, ": ", sol.objective,
                    " vs ", oracle.objective);
    CHECK(sol.best_bound >= sol.objective - 1e-9 * scale);

    // Monotone bound over node processing order (ignoring the +inf root).
    for (std::size_t i = 1; i < bounds.size(); ++i) {
      CHECK(bounds[i] <= bounds[i - 1] + 1e-9 * scale);
    }

    // Incumbent feasibility at the rounded solution.
    for (int i = 0; i < model.lp.row_count(); ++i) {
      double act = 0.0;
      for (auto [col, v] : model.lp.row_entries(i)) act += v * sol.x[col];
      double gap = act - model.lp.rhs(i);
      switch (model.lp.relation(i)) {
        case lp::Relation::le: CHECK(gap <= 1e-6 * scale); break;
        case lp::Relation::ge: CHECK(gap >= -1e-6 * scale); break;
        case lp::Relation::eq: CHECK(std::abs(gap) <= 1e-6 * scale); break;
      }
    }
  }
}
