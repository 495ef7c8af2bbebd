#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilbert/domain.hpp"

namespace hilbert {

// An exposed face of a polytope domain: the intersection of the boundary
// with all facets through it. Identified by its (sorted) vertex and facet
// index sets; ids are canonical (sorted by dimension, then vertex set).
struct Face {
  int id = -1;
  int dim = -1;
  std::vector<int> vertex_ids;
  std::vector<int> facet_ids;
};

// The face of the dual domain formed by the supporting hyperplanes of a
// face: its vertices in the dual polytope are the facets of the primal
// containing the face.
struct DualFace {
  int dim = -1;
  std::vector<int> support_facet_ids;  // vertex set in the dual polytope
  std::vector<int> dual_facet_ids;     // = primal vertex set of the face
};

struct PairClassification {
  enum class Kind { Equal, Disjoint, BoundaryInclusion, ProperMeeting };
  Kind kind;
  int meet_id = -1;          // ProperMeeting: the face L intersect K
  bool first_in_second = false;  // BoundaryInclusion: L subset of boundary(K)?
  std::string name() const;
};

// All proper exposed faces of a polytope domain, closed under intersection,
// built exactly from vertex-facet incidence.
class FaceLattice {
 public:
  static FaceLattice build(const ConvexDomain& polytope);

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_.at(static_cast<size_t>(id)); }
  int size() const { return static_cast<int>(faces_.size()); }

  std::optional<int> find_by_vertex_set(std::vector<int> sorted_vertices) const;

  // The unique face whose relative interior contains p; p must lie on the
  // boundary (throws NotOnBoundary otherwise).
  int face_of_point(const ConvexDomain& polytope, const PointQ& p) const;

  DualFace dual_face(const ConvexDomain& polytope, const Face& k) const;

  // dim K + dim K* >= d-1; equivalently the supporting subspace equals the
  // cosupport. Every proper face of a polytope is angular.
  bool is_angular(const ConvexDomain& polytope, const Face& k) const;

  // Exact cosupport dimension (intersection of all supporting hyperplanes).
  int cosupport_dim(const ConvexDomain& polytope, const Face& k) const;

  PairClassification classify_pair(const Face& l, const Face& k) const;

 private:
  std::vector<Face> faces_;
};

// Strictly convex domains carry no lattice: every boundary point is a
// 0-face with a unique supporting hyperplane (the polar of the point).
struct EllipsoidBoundaryFace {
  PointQ point;
  HyperplaneQ support;
  int dim = 0;
  int dual_dim = 0;
};
EllipsoidBoundaryFace ellipsoid_face_of_point(const ConvexDomain& ellipsoid, const PointQ& p);
bool ellipsoid_face_is_angular(const ConvexDomain& ellipsoid);

}  // namespace hilbert
