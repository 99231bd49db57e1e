#pragma once

// Central tolerance table. Every numeric gate in the library refers to one of
// these constants; tests pin against the same values.
namespace tep::tol {

// Primal/dual feasibility of an LP solution (absolute, on unit-scaled data).
inline constexpr double feasibility = 1e-7;

// Strong-duality gap accepted at an optimal LP solution,
// relative to 1 + |objective|.
inline constexpr double duality_gap = 1e-6;

// A binary variable counts as integral when within this distance of 0/1.
inline constexpr double integrality = 1e-6;

// Residual gate used by outcome verification, relative to the check's scale.
inline constexpr double verification = 1e-6;

// Agreement required between a MILP's embedded clearing block and an
// independent re-clearing of the market at the chosen plan.
inline constexpr double post_solve_agreement = 1e-5;

// Pivot magnitudes below this are treated as zero inside the simplex.
inline constexpr double pivot = 1e-9;

}  // namespace tep::tol
