#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "hilbert/linalg.hpp"

namespace hilbert {

using VecD = Eigen::VectorXd;
using MatD = Eigen::MatrixXd;

// A point of RP^d: a nonzero (d+1)-vector up to scale.
struct PointQ {
  VecQ coords;

  PointQ() = default;
  explicit PointQ(VecQ c);  // rejects the zero vector
  int dim() const { return static_cast<int>(coords.size()) - 1; }
};

// A hyperplane of RP^d: a nonzero covector up to scale.
struct HyperplaneQ {
  VecQ covector;

  HyperplaneQ() = default;
  explicit HyperplaneQ(VecQ c);
  int dim() const { return static_cast<int>(covector.size()) - 1; }
};

// An element of PGL(d+1, Q). The inverse is kept alongside; construction
// rejects singular matrices.
struct ProjMapQ {
  MatQ matrix;
  MatQ inv;

  ProjMapQ() = default;
  explicit ProjMapQ(MatQ m);
  int dim() const { return matrix.rows - 1; }
};

Rat incidence(const PointQ& p, const HyperplaneQ& h);

// Scale canonicalization: divide by the largest-magnitude coordinate, then
// fix the sign of the first nonzero coordinate positive. Idempotent, and two
// representatives of the same point normalize identically.
PointQ normalized(const PointQ& p);
HyperplaneQ normalized(const HyperplaneQ& h);

bool same_point(const PointQ& a, const PointQ& b);
bool same_hyperplane(const HyperplaneQ& a, const HyperplaneQ& b);

// Lexicographic order on normalized coordinates; used for deterministic
// dedup and canonical orderings.
bool point_less(const PointQ& a, const PointQ& b);

PointQ apply(const ProjMapQ& g, const PointQ& p);

// Dual action h -> h o g^{-1}; keeps incidence equivariant.
HyperplaneQ apply_dual(const ProjMapQ& g, const HyperplaneQ& h);

ProjMapQ compose(const ProjMapQ& g, const ProjMapQ& h);  // g after h
ProjMapQ inverse_map(const ProjMapQ& g);

// True iff the coordinate vectors of k <= d+1 points are linearly
// independent.
bool general_position(const std::vector<PointQ>& points);

// Projective cross-ratio [z1, x, y, z2] of four collinear points, via rank-2
// coordinates on the common line. With boundary-ordered arguments the value
// is >= 1. Throws NotCollinear / DegenerateConfiguration.
Rat cross_ratio(const PointQ& z1, const PointQ& x, const PointQ& y, const PointQ& z2);

// Affine chart A_eta = {v : eta(v) = 1} with a deterministic basis of
// ker(eta) and base point.
struct AffineChartQ {
  HyperplaneQ eta;
  VecQ base_point;              // eta(base_point) = 1
  std::vector<VecQ> basis;      // d vectors spanning ker(eta)
  int pivot = 0;                // coordinate used for the base point

  explicit AffineChartQ(HyperplaneQ h);
  int dim() const { return eta.dim(); }

  // Coordinates of p in this chart; throws PointAtInfinity when eta(p) = 0.
  VecQ coords(const PointQ& p) const;
  PointQ lift(const VecQ& chart_coords) const;
  // Homogeneous representative of a chart tangent direction (eta = 0).
  VecQ direction(const VecQ& tangent) const;
};

// ---- binary64 layer -------------------------------------------------------
//
// Float mode carries an explicit tolerance in every comparison. It is used
// for metric quantities and sampled checks only, never for face
// combinatorics.

VecD to_double(const VecQ& v);
MatD to_double(const MatQ& m);
VecD to_double(const PointQ& p);

VecD normalized_d(const VecD& v);
bool same_point_d(const VecD& a, const VecD& b, double tol);
VecD apply_d(const MatD& g, const VecD& p);
int rank_d(const MatD& m, double tol);
bool general_position_d(const std::vector<VecD>& points, double tol);
double cross_ratio_d(const VecD& z1, const VecD& x, const VecD& y, const VecD& z2, double tol);

}  // namespace hilbert
