#include "hilbert/face_lattice.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace hilbert {

std::string PairClassification::name() const {
  switch (kind) {
    case Kind::Equal: return "Equal";
    case Kind::Disjoint: return "Disjoint";
    case Kind::BoundaryInclusion: return "BoundaryInclusion";
    case Kind::ProperMeeting: return "ProperMeeting";
  }
  return "?";
}

namespace {

int span_dim(const ConvexDomain& dom, const std::vector<int>& vertex_ids) {
  std::vector<VecQ> rows;
  rows.reserve(vertex_ids.size());
  for (int i : vertex_ids) rows.push_back(dom.vertices()[static_cast<size_t>(i)].coords);
  return rank(MatQ::from_rows(rows)) - 1;
}

}  // namespace

FaceLattice FaceLattice::build(const ConvexDomain& dom) {
  assert(dom.is_polytope());
  const int nv = static_cast<int>(dom.vertices().size());
  const int nf = static_cast<int>(dom.facets().size());

  // Vertex sets of the facets, then close under intersection.
  std::set<std::vector<int>> closed;
  std::vector<std::vector<int>> queue;
  for (int j = 0; j < nf; ++j) {
    std::vector<int> vs;
    for (int i = 0; i < nv; ++i)
      if (dom.vertex_on_facet(i, j)) vs.push_back(i);
    if (!vs.empty() && closed.insert(vs).second) queue.push_back(vs);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    std::vector<int> current = queue[head];
    std::vector<std::vector<int>> snapshot(closed.begin(), closed.end());
    for (const std::vector<int>& other : snapshot) {
      std::vector<int> meet;
      std::set_intersection(current.begin(), current.end(), other.begin(), other.end(),
                            std::back_inserter(meet));
      if (!meet.empty() && closed.insert(meet).second) queue.push_back(meet);
    }
  }

  FaceLattice lattice;
  for (const std::vector<int>& vs : closed) {
    Face f;
    f.vertex_ids = vs;
    for (int j = 0; j < nf; ++j) {
      bool all = true;
      for (int i : vs)
        if (!dom.vertex_on_facet(i, j)) {
          all = false;
          break;
        }
      if (all) f.facet_ids.push_back(j);
    }
    f.dim = span_dim(dom, vs);
    lattice.faces_.push_back(std::move(f));
  }
  std::sort(lattice.faces_.begin(), lattice.faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_ids < b.vertex_ids;
  });
  for (size_t i = 0; i < lattice.faces_.size(); ++i) lattice.faces_[i].id = static_cast<int>(i);
  return lattice;
}

std::optional<int> FaceLattice::find_by_vertex_set(std::vector<int> sorted_vertices) const {
  for (const Face& f : faces_)
    if (f.vertex_ids == sorted_vertices) return f.id;
  return std::nullopt;
}

int FaceLattice::face_of_point(const ConvexDomain& dom, const PointQ& p) const {
  if (dom.classify_point(p) != PointLocation::Boundary)
    fail(Errc::NotOnBoundary, "point is not on the boundary");
  std::vector<int> through;
  for (size_t j = 0; j < dom.facets().size(); ++j)
    if (dot(dom.facets()[j].covector, p.coords) == 0) through.push_back(static_cast<int>(j));
  // The face with exactly these facets: its vertex set collects the vertices
  // on all of them.
  std::vector<int> vs;
  for (size_t i = 0; i < dom.vertices().size(); ++i) {
    bool all = true;
    for (int j : through)
      if (!dom.vertex_on_facet(static_cast<int>(i), j)) {
        all = false;
        break;
      }
    if (all) vs.push_back(static_cast<int>(i));
  }
  auto id = find_by_vertex_set(vs);
  assert(id.has_value());
  return *id;
}

DualFace FaceLattice::dual_face(const ConvexDomain& dom, const Face& k) const {
  DualFace d;
  d.support_facet_ids = k.facet_ids;
  d.dual_facet_ids = k.vertex_ids;
  std::vector<VecQ> rows;
  for (int j : k.facet_ids) rows.push_back(dom.facets()[static_cast<size_t>(j)].covector);
  d.dim = rank(MatQ::from_rows(rows)) - 1;
  return d;
}

int FaceLattice::cosupport_dim(const ConvexDomain& dom, const Face& k) const {
  std::vector<VecQ> rows;
  for (int j : k.facet_ids) rows.push_back(dom.facets()[static_cast<size_t>(j)].covector);
  int r = rank(MatQ::from_rows(rows));
  return static_cast<int>(dom.vertices()[0].coords.size()) - r - 1;  // projective dim of the kernel
}

bool FaceLattice::is_angular(const ConvexDomain& dom, const Face& k) const {
  return k.dim + dual_face(dom, k).dim >= dom.dim() - 1;
}

PairClassification FaceLattice::classify_pair(const Face& l, const Face& k) const {
  PairClassification out{PairClassification::Kind::Equal};
  if (l.vertex_ids == k.vertex_ids) {
    out.kind = PairClassification::Kind::Equal;
    return out;
  }
  std::vector<int> meet;
  std::set_intersection(l.vertex_ids.begin(), l.vertex_ids.end(), k.vertex_ids.begin(),
                        k.vertex_ids.end(), std::back_inserter(meet));
  if (meet.empty()) {
    out.kind = PairClassification::Kind::Disjoint;
    return out;
  }
  if (meet == l.vertex_ids) {  // L strictly inside K: a proper face lies in the boundary
    out.kind = PairClassification::Kind::BoundaryInclusion;
    out.first_in_second = true;
    return out;
  }
  if (meet == k.vertex_ids) {
    out.kind = PairClassification::Kind::BoundaryInclusion;
    out.first_in_second = false;
    return out;
  }
  out.kind = PairClassification::Kind::ProperMeeting;
  auto id = find_by_vertex_set(meet);
  assert(id.has_value());  // polytope faces are closed under intersection
  out.meet_id = *id;
  return out;
}

EllipsoidBoundaryFace ellipsoid_face_of_point(const ConvexDomain& dom, const PointQ& p) {
  assert(dom.kind() == ConvexDomain::Kind::Ellipsoid);
  if (dom.classify_point(p) != PointLocation::Boundary)
    fail(Errc::NotOnBoundary, "point is not on the boundary");
  EllipsoidBoundaryFace f;
  f.point = normalized(p);
  f.support = normalized(HyperplaneQ(mul(dom.form(), p.coords)));
  return f;
}

bool ellipsoid_face_is_angular(const ConvexDomain& dom) {
  // dim K + dim K* = 0 for every boundary point; angular only when d <= 1.
  return dom.dim() <= 1;
}

}  // namespace hilbert
