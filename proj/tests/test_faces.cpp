#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "hilbert/face_lattice.hpp"
#include "hilbert/stock_domains.hpp"
#include "test_support.hpp"

using namespace hilbert;
using namespace hilbert::testing;

namespace {

std::map<int, int> count_by_dim(const FaceLattice& lat) {
  std::map<int, int> counts;
  for (const Face& f : lat.faces()) counts[f.dim]++;
  return counts;
}

// Brute-force classification oracle on vertex sets.
PairClassification::Kind oracle_kind(const Face& l, const Face& k) {
  std::set<int> vl(l.vertex_ids.begin(), l.vertex_ids.end());
  std::set<int> vk(k.vertex_ids.begin(), k.vertex_ids.end());
  if (vl == vk) return PairClassification::Kind::Equal;
  std::set<int> meet;
  for (int v : vl)
    if (vk.count(v)) meet.insert(v);
  if (meet.empty()) return PairClassification::Kind::Disjoint;
  if (meet == vl || meet == vk) return PairClassification::Kind::BoundaryInclusion;
  return PairClassification::Kind::ProperMeeting;
}

}  // namespace

TEST_CASE("face counts: simplex, cube, cross-polytope, segment") {
  FaceLattice s3 = FaceLattice::build(stock::simplex(3));
  auto c = count_by_dim(s3);
  CHECK(c[0] == 4);
  CHECK(c[1] == 6);
  CHECK(c[2] == 4);
  CHECK(s3.size() == 14);

  FaceLattice cube = FaceLattice::build(stock::cube(3));
  auto cc = count_by_dim(cube);
  CHECK(cc[0] == 8);
  CHECK(cc[1] == 12);
  CHECK(cc[2] == 6);
  CHECK(cube.size() == 26);

  FaceLattice cross = FaceLattice::build(stock::cross_polytope(3));
  auto xc = count_by_dim(cross);
  CHECK(xc[0] == 6);
  CHECK(xc[1] == 12);
  CHECK(xc[2] == 8);

  FaceLattice seg = FaceLattice::build(stock::interval());
  CHECK(seg.size() == 2);
  for (const Face& f : seg.faces()) CHECK(f.dim == 0);
}

TEST_CASE("face of a boundary point") {
  ConvexDomain cube = stock::cube(3);
  FaceLattice lat = FaceLattice::build(cube);

  // Facet centroid: affine (1, 0, 0).
  int f = lat.face_of_point(cube, pt({1, 0, 0, 1}));
  CHECK(lat.face(f).dim == 2);
  // Vertex.
  int v = lat.face_of_point(cube, pt({1, 1, 1, 1}));
  CHECK(lat.face(v).dim == 0);
  CHECK(lat.face(v).vertex_ids.size() == 1);
  // Generic edge point: x = 1, y = 1, z = 1/3.
  int e = lat.face_of_point(cube, ptr({"1", "1", "1/3", "1"}));
  CHECK(lat.face(e).dim == 1);

  CHECK_THROWS_AS(lat.face_of_point(cube, pt({0, 0, 0, 1})), Error);  // interior
  CHECK_THROWS_AS(lat.face_of_point(cube, pt({3, 0, 0, 1})), Error);  // outside
}

TEST_CASE("dual faces: dimensions flip across the lattice") {
  ConvexDomain cube = stock::cube(3);
  FaceLattice lat = FaceLattice::build(cube);
  for (const Face& f : lat.faces()) {
    DualFace df = lat.dual_face(cube, f);
    CHECK(df.dim == cube.dim() - 1 - f.dim);
    CHECK(df.dual_facet_ids == f.vertex_ids);
  }

  // Simplex edges are dual to edges (self-dual combinatorics).
  ConvexDomain s3 = stock::simplex(3);
  FaceLattice slat = FaceLattice::build(s3);
  for (const Face& f : slat.faces())
    if (f.dim == 1) CHECK(slat.dual_face(s3, f).dim == 1);
}

TEST_CASE("dual faces are faces of the dual polytope, inclusion-reversing, involutive") {
  for (const ConvexDomain& dom : {stock::simplex(3), stock::cube(3), stock::cross_polytope(3)}) {
    ConvexDomain dual = dom.dual();
    FaceLattice lat = FaceLattice::build(dom);
    FaceLattice dual_lat = FaceLattice::build(dual);

    // dual() lists dual vertices in facet order, so primal facet j is dual
    // vertex j. Dual facets are matched to primal vertices projectively.
    std::vector<int> facet_of_vertex(dom.vertices().size(), -1);
    for (size_t k = 0; k < dual.facets().size(); ++k) {
      PointQ as_point(dual.facets()[k].covector);
      for (size_t i = 0; i < dom.vertices().size(); ++i)
        if (same_point(as_point, dom.vertices()[i])) facet_of_vertex[i] = static_cast<int>(k);
    }
    for (int f : facet_of_vertex) CHECK(f >= 0);

    for (const Face& f : lat.faces()) {
      DualFace df = lat.dual_face(dom, f);
      auto id = dual_lat.find_by_vertex_set(df.support_facet_ids);
      REQUIRE(id.has_value());  // the dual face is a face of the dual domain
      const Face& dual_face_in_lattice = dual_lat.face(*id);
      CHECK(dual_face_in_lattice.dim == df.dim);
      // Its facet set corresponds to the primal vertex set.
      std::vector<int> expected;
      for (int v : f.vertex_ids) expected.push_back(facet_of_vertex[static_cast<size_t>(v)]);
      std::sort(expected.begin(), expected.end());
      CHECK(dual_face_in_lattice.facet_ids == expected);
      // Double dual returns the original vertex set (read through the
      // dual-facet <-> primal-vertex matching).
      DualFace ddf = dual_lat.dual_face(dual, dual_face_in_lattice);
      CHECK(ddf.support_facet_ids == expected);
    }

    // Inclusion reversal, exhaustively.
    for (const Face& a : lat.faces())
      for (const Face& b : lat.faces()) {
        bool a_in_b = std::includes(b.vertex_ids.begin(), b.vertex_ids.end(), a.vertex_ids.begin(),
                                    a.vertex_ids.end());
        if (!a_in_b) continue;
        DualFace da = lat.dual_face(dom, a);
        DualFace db = lat.dual_face(dom, b);
        CHECK(std::includes(da.support_facet_ids.begin(), da.support_facet_ids.end(),
                            db.support_facet_ids.begin(), db.support_facet_ids.end()));
      }
  }
}

TEST_CASE("angularity: every proper polytope face is angular with equality") {
  for (const ConvexDomain& dom : {stock::simplex(2), stock::simplex(3), stock::cube(3)}) {
    FaceLattice lat = FaceLattice::build(dom);
    for (const Face& f : lat.faces()) {
      CHECK(lat.is_angular(dom, f));
      DualFace df = lat.dual_face(dom, f);
      CHECK(f.dim + df.dim == dom.dim() - 1);
      // Supporting subspace equals the cosupport exactly at equality.
      CHECK(lat.cosupport_dim(dom, f) == f.dim);
    }
  }
  // Strictly convex boundary points are never angular for d >= 2.
  CHECK_FALSE(ellipsoid_face_is_angular(stock::ball(2)));
  CHECK_FALSE(ellipsoid_face_is_angular(stock::ball(3)));

  EllipsoidBoundaryFace bf = ellipsoid_face_of_point(stock::ball(2), pt({1, 0, 1}));
  CHECK(bf.dim == 0);
  CHECK(incidence(bf.point, bf.support) == 0);
  CHECK_THROWS_AS(ellipsoid_face_of_point(stock::ball(2), pt({0, 0, 1})), Error);
}

TEST_CASE("4-chotomy: named examples") {
  ConvexDomain cube = stock::cube(3);
  FaceLattice lat = FaceLattice::build(cube);

  auto facet_by_covector = [&](std::initializer_list<long> cv) {
    HyperplaneQ h = cov(cv);
    for (size_t j = 0; j < cube.facets().size(); ++j)
      if (same_hyperplane(cube.facets()[j], h)) {
        std::vector<int> vs;
        for (size_t i = 0; i < cube.vertices().size(); ++i)
          if (cube.vertex_on_facet(static_cast<int>(i), static_cast<int>(j))) vs.push_back(static_cast<int>(i));
        return lat.face(*lat.find_by_vertex_set(vs));
      }
    REQUIRE(false);
    return lat.face(0);
  };

  Face xpos = facet_by_covector({-1, 0, 0, 1});  // x <= 1 side
  Face xneg = facet_by_covector({1, 0, 0, 1});
  Face ypos = facet_by_covector({0, -1, 0, 1});

  CHECK(lat.classify_pair(xpos, xpos).kind == PairClassification::Kind::Equal);
  CHECK(lat.classify_pair(xpos, xneg).kind == PairClassification::Kind::Disjoint);

  PairClassification meet = lat.classify_pair(xpos, ypos);
  REQUIRE(meet.kind == PairClassification::Kind::ProperMeeting);
  CHECK(lat.face(meet.meet_id).dim == 1);  // shared edge

  int edge = meet.meet_id;
  PairClassification incl = lat.classify_pair(lat.face(edge), xpos);
  CHECK(incl.kind == PairClassification::Kind::BoundaryInclusion);
  CHECK(incl.first_in_second);
}

TEST_CASE("4-chotomy: exhaustive against the brute-force oracle") {
  for (const ConvexDomain& dom : {stock::simplex(3), stock::cube(3), stock::cross_polytope(3)}) {
    FaceLattice lat = FaceLattice::build(dom);
    for (const Face& l : lat.faces())
      for (const Face& k : lat.faces()) {
        PairClassification got = lat.classify_pair(l, k);
        CHECK(got.kind == oracle_kind(l, k));
        if (got.kind == PairClassification::Kind::ProperMeeting) {
          std::vector<int> meet;
          std::set_intersection(l.vertex_ids.begin(), l.vertex_ids.end(), k.vertex_ids.begin(),
                                k.vertex_ids.end(), std::back_inserter(meet));
          CHECK(lat.face(got.meet_id).vertex_ids == meet);
        }
      }
  }
}
