#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hilbert/projective.hpp"
#include "hilbert/rng.hpp"

namespace hilbert {

struct ValidationIssue {
  Errc code;
  std::string detail;
};

struct ValidationReport {
  bool valid = false;
  std::vector<ValidationIssue> issues;
  HyperplaneQ chart;  // witness covector, positive on the closure, when valid
  std::optional<std::pair<PointQ, PointQ>> witness_line;  // spans a line in the closure
  std::string summary() const;
};

enum class PointLocation { Interior, Boundary, Outside };

// The two boundary points cut by the line through interior points x, y,
// ordered z1, x, y, z2. The affine parameters certify the order: x sits at
// t = 0, y at t = 1, and t1 < 0 <= 1 < t2.
struct BoundaryPair {
  VecD z1, z2;
  double t1 = 0, t2 = 0;
  int facet1 = -1, facet2 = -1;  // supporting facets, polytope domains only
};

struct BoundaryPairQ {
  PointQ z1, z2;
  Rat t1, t2;
  int facet1 = -1, facet2 = -1;
};

// A properly convex open domain: a polytope given by its vertex cone, or an
// ellipsoid given by a quadratic form of signature (d,1). Immutable after
// construction; construction validates (salient full-dimensional cone,
// irredundant vertices / correct signature) and derives the exact facet
// H-representation, a chart covector positive on the closure, and cached
// binary64 copies for metric work.
class ConvexDomain {
 public:
  enum class Kind { Polytope, Ellipsoid };

  static ConvexDomain polytope(int dim, std::vector<PointQ> vertices);
  static ConvexDomain ellipsoid(int dim, MatQ form);

  static ValidationReport validate_polytope_data(int dim, const std::vector<PointQ>& vertices);
  static ValidationReport validate_ellipsoid_data(int dim, const MatQ& form);
  ValidationReport validate() const;

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  bool is_polytope() const { return kind_ == Kind::Polytope; }

  const std::vector<PointQ>& vertices() const { return vertices_; }
  const std::vector<HyperplaneQ>& facets() const { return facets_; }
  bool vertex_on_facet(int vertex, int facet) const;
  const MatQ& form() const { return form_; }

  const HyperplaneQ& chart() const { return chart_; }
  const AffineChartQ& affine_chart() const { return *affine_chart_; }
  const PointQ& center() const { return center_; }

  PointLocation classify_point(const PointQ& p) const;
  bool contains(const PointQ& p) const { return classify_point(p) == PointLocation::Interior; }
  bool on_boundary(const PointQ& p) const { return classify_point(p) == PointLocation::Boundary; }
  bool contains_d(const VecD& p, double tol = 1e-9) const;

  // Facet incidences h_j(p) scaled to the chart representative; exact.
  VecQ facet_values(const PointQ& p) const;

  BoundaryPair boundary_intersections(const PointQ& x, const PointQ& y) const;
  BoundaryPairQ boundary_intersections_exact(const PointQ& x, const PointQ& y) const;  // polytope only

  // Hilbert distance (1/2) log [z1,x,y,z2]. Exact affine parameters feed a
  // binary64 log for polytopes; ellipsoids run the quadratic in binary64.
  double hilbert_distance(const PointQ& x, const PointQ& y) const;
  double hilbert_distance_d(const VecD& x, const VecD& y) const;

  // Finsler norm: (1/2)(1/t+ + 1/t-) with t+- the chart-affine reach to the
  // boundary along +-v. v is a tangent d-vector in the canonical chart basis.
  double finsler_norm(const PointQ& x, const VecQ& v) const;

  // Polar dual in the cone normalization: facet covectors become the dual
  // vertex cone (scaled against the canonical interior point) and vice versa.
  ConvexDomain dual() const;

  // Deterministic interior sample; margin in (0, 1/2) bounds the distance to
  // the boundary away from zero.
  PointQ sample_interior(Rng& rng, const Rat& margin = Rat(1, 20)) const;

  const MatD& facet_matrix_d() const { return facets_d_; }
  const MatD& form_d() const { return form_d_; }

 private:
  ConvexDomain() = default;

  Kind kind_ = Kind::Polytope;
  int dim_ = 0;
  std::vector<PointQ> vertices_;
  std::vector<HyperplaneQ> facets_;
  std::vector<std::vector<bool>> incidence_;  // vertex x facet
  MatQ form_;
  HyperplaneQ chart_;
  std::shared_ptr<const AffineChartQ> affine_chart_;
  PointQ center_;
  MatD facets_d_;
  MatD form_d_;
  MatD vertices_d_;
};

}  // namespace hilbert
