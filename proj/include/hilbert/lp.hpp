#pragma once

#include <vector>

#include "hilbert/linalg.hpp"

namespace hilbert {

// Exact phase-1 simplex (Bland's rule) for small feasibility problems:
// salience of vertex cones, vertex irredundancy, and brute-force hull
// membership in tests. Problem sizes here are a few dozen variables.

struct LpFeasibility {
  bool feasible = false;
  VecQ solution;  // x >= 0 with A x = b, when feasible
  VecQ farkas;    // y with y^T A <= 0 and y^T b > 0, when infeasible
};

// Decides {x >= 0 : A x = b} != {}.
LpFeasibility lp_equality_feasible(const MatQ& a, const VecQ& b);

// Is target in the cone spanned by the generators?
LpFeasibility in_cone(const std::vector<VecQ>& generators, const VecQ& target);

// Is target a convex combination of the points?
LpFeasibility in_convex_hull(const std::vector<VecQ>& points, const VecQ& target);

// A covector eta with eta(v) >= 1 for every v, when one exists; otherwise a
// nonnegative combination of the vectors summing to zero (the witness that
// the cone is not salient).
struct SeparatingFunctional {
  bool exists = false;
  VecQ eta;
  VecQ combination;
};
SeparatingFunctional positive_functional(const std::vector<VecQ>& vectors);

}  // namespace hilbert
