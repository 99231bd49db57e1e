#pragma once

#include <cstdint>
#include <optional>

#include "tep/lp/model.hpp"

namespace tep::test {

// Brute-force LP oracle: enumerates every choice of n active constraints
// among rows and finite bounds, solves the square system and keeps the best
// feasible vertex. Returns nullopt when no feasible vertex exists. Intended
// for tiny models only.
std::optional<double> vertex_enumeration_max(const lp::LpModel& model);

// Deterministic splitmix64 stream for test data.
struct TestRng {
  std::uint64_t state;
  explicit TestRng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  // inclusive
};

// Random LP that is feasible and bounded by construction: box-bounded
// variables and rows anchored on a random interior point.
lp::LpModel random_feasible_bounded_lp(std::uint64_t seed, int max_vars = 6,
                                       int max_rows = 5);

}  // namespace tep::test
