#pragma once

#include "hilbert/domain.hpp"
#include "hilbert/flats.hpp"

namespace hilbert::stock {

// Standard simplex: vertices e_1, ..., e_{d+1}.
ConvexDomain simplex(int d);

// Hypercube with affine vertices {-1,1}^d in the last-coordinate chart.
ConvexDomain cube(int d);

// Cross-polytope with affine vertices +-e_i.
ConvexDomain cross_polytope(int d);

// Unit ball: form diag(1,...,1,-1).
ConvexDomain ball(int d);

// The interval (-1,1) as a 1-dimensional polytope.
ConvexDomain interval();

// Deterministic random polytope: rational points sprinkled near the unit
// sphere until the hull has the requested number of vertices.
ConvexDomain random_polytope(int d, int vertex_count, uint64_t seed);

// Corner-flat family of the standard simplex: vertices (1-s) e_corner + s e_j
// for j != corner. s = 1/2 is the midpoint flat, s = 1/4 the quarter-point
// variant; every member has pseudo-dual e_corner.
std::vector<PointQ> corner_flat_vertices(int d, int corner, const Rat& s);

// A random invertible rational map close to the identity (condition number
// stays small).
ProjMapQ random_projective_map(int d, uint64_t seed, const Rat& spread = Rat(1, 8));

}  // namespace hilbert::stock
