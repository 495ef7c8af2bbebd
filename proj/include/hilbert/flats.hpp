#pragma once

#include <vector>

#include "hilbert/domain.hpp"

namespace hilbert {

// A properly embedded codimension-1 simplex: d vertices on the boundary in
// general position, open hull inside the domain, every proper face of the
// simplex inside a face of the domain. The carrier is the hyperplane through
// the vertices; the pseudo-dual is the common point of the supporting
// hyperplanes of the (d-2)-faces.
struct Flat {
  std::vector<PointQ> vertices;  // chart-normalized lifts
  HyperplaneQ carrier;
  PointQ pseudo_dual;
  // support_facets[i] = domain facet supporting the face that omits vertex i
  // (-1 when the flat was produced by dualization and supports were resolved
  // through the pseudo-dual instead).
  std::vector<int> support_facets;
  enum class PseudoDualPosition { OutsideClosure, OnBoundary };
  PseudoDualPosition pd_position = PseudoDualPosition::OutsideClosure;
  // Interior/face checks passed against the hosting domain. Duals of flats
  // in reducible domains (the simplex family) land on the dual boundary and
  // carry false here.
  bool properly_embedded = true;

  int simplex_dim() const { return static_cast<int>(vertices.size()) - 1; }
};

// Exact validation for polytope domains. Throws NotGeneralPosition,
// VertexNotOnBoundary, InteriorEscapes, FaceNotInBoundary, NonUniqueSupport,
// NoCommonPoint. Strictly convex domains admit no flats; the check is
// polytope-only and rejects other kinds.
Flat validate_flat(const ConvexDomain& domain, std::vector<PointQ> vertices);

// Sampled interior check (float mode) over a deterministic barycentric grid;
// used when exact facet data is unavailable.
bool flat_interior_sample_check(const ConvexDomain& domain, const std::vector<PointQ>& vertices,
                                int grid_points = 1000, double tol = 1e-9);

// The common point of the unique supporting hyperplanes of the (d-2)-faces.
PointQ pseudo_dual_point(const ConvexDomain& domain, const std::vector<PointQ>& flat_vertices);

// Float-mode certification of the same intersection: the stacked support
// system must have smallest/largest singular value ratio below tol.
struct PseudoDualFloatReport {
  VecD point;
  double consistency = 0;  // sigma_min / sigma_max of the stacked system
  bool accepted = false;
};
PseudoDualFloatReport pseudo_dual_float(const ConvexDomain& domain,
                                        const std::vector<PointQ>& flat_vertices,
                                        double tol = 1e-10);

struct LineQ {
  PointQ a, b;  // the line is span(a, b)
};

// Normal line at x in F: span(pseudo-dual, x).
LineQ normal_line(const Flat& flat, const PointQ& x);

// Distance non-increasing projection onto the flat along normal lines.
PointQ normal_project(const ConvexDomain& domain, const Flat& flat, const PointQ& y);

// Log coordinates on the open simplex: componentwise log recentred to the
// sum-zero hyperplane (enforces the product-1 normalization).
VecD phi_map(const VecD& positive_coords);

// Hilbert distance on the open simplex in positive coordinates:
// (1/2)(max_i - min_i) of log(x_i / y_i).
double simplex_distance(const VecD& x, const VecD& y);

// The flat of the dual domain spanned by the supporting hyperplanes of the
// (d-2)-faces. Supports are resolved through the flat's pseudo-dual, which
// makes the construction involutive; vertices are scaled by the same
// convention as dual().vertices().
Flat flat_dual(const ConvexDomain& domain, const ConvexDomain& dual_domain, const Flat& flat);

// Open region carved by the level set of the H_F-invariant through x: in
// frame coordinates (u_1..u_d, t) it is {t > 0, u_i > 0, prod(u)/t^d > c}
// intersected with the domain; equivalently the interior of the convex hull
// of F and the H_F-orbit of x.
class StandardNeighborhood {
 public:
  StandardNeighborhood(Flat flat, MatQ frame, MatQ frame_inv, Rat level);

  const Flat& flat() const { return flat_; }
  const MatQ& frame() const { return frame_; }
  const Rat& level() const { return level_; }

  // Frame coordinates (u_1..u_d, t) of a representative of y.
  VecQ frame_coords(const PointQ& y) const;
  // Scale-invariant H_F level prod(u)/t^d; throws PointOnCarrier at t = 0.
  Rat level_of(const PointQ& y) const;
  bool contains(const ConvexDomain& domain, const PointQ& y) const;

  // The diagonal map diag(entries, 1) in the frame basis; entries with
  // product 1 give elements of H_F.
  ProjMapQ frame_diagonal(const VecQ& entries) const;

 private:
  Flat flat_;
  MatQ frame_, frame_inv_;
  Rat level_;
};

StandardNeighborhood standard_neighborhood(const ConvexDomain& domain, const Flat& flat,
                                           const PointQ& x);

struct EpsilonProjectionReport {
  uint64_t seed = 0;
  int samples = 0;
  double epsilon = 0;
  int eligible = 0;    // samples with estimated d(x, F') < epsilon
  int crossing = 0;    // eligible samples whose normal line meets F'
  bool vacuous = true; // no eligible samples
  double fraction = 0; // crossing / eligible when not vacuous
  double min_distance_seen = 0;
};

// Monte-Carlo estimate of how often normal lines from F hit F' among points
// within trial distance epsilon. Estimates a configuration-specific epsilon;
// it does not certify the underlying statement.
EpsilonProjectionReport epsilon_projection_check(const ConvexDomain& domain, const Flat& f,
                                                 const Flat& fprime, double epsilon, int samples,
                                                 uint64_t seed);

}  // namespace hilbert
