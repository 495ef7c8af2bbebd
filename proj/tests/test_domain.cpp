#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hilbert/domain.hpp"
#include "hilbert/flats.hpp"
#include "hilbert/json_io.hpp"
#include "hilbert/stock_domains.hpp"
#include "test_support.hpp"

using namespace hilbert;
using namespace hilbert::testing;

namespace {

// Membership-only bisection for the boundary parameter window; independent
// of the interval-intersection path used by boundary_intersections.
double sweep_boundary_param(const ConvexDomain& dom, const PointQ& x, const PointQ& y, bool forward) {
  VecQ rx = vec_scale(1 / incidence(x, dom.chart()), x.coords);
  VecQ ry = vec_scale(1 / incidence(y, dom.chart()), y.coords);
  VecQ dir = vec_sub(ry, rx);
  auto inside = [&](const Rat& t) {
    return dom.contains(PointQ(vec_add(rx, vec_scale(t, dir))));
  };
  Rat lo = forward ? Rat(1) : Rat(0);
  Rat hi = forward ? Rat(1) : Rat(0);
  Rat step = forward ? Rat(1) : Rat(-1);
  while (inside(hi + step)) {
    hi += step;
    step *= 2;
  }
  lo = hi;
  hi = hi + step;
  for (int i = 0; i < 60; ++i) {
    Rat mid = (lo + hi) / 2;
    if (inside(mid))
      lo = mid;
    else
      hi = mid;
  }
  return to_double((lo + hi) / 2);
}

}  // namespace

TEST_CASE("validation: stock domains pass, degenerate data fails with witnesses") {
  ConvexDomain s3 = stock::simplex(3);
  ValidationReport rep = s3.validate();
  CHECK(rep.valid);
  for (const PointQ& v : s3.vertices()) CHECK(incidence(v, rep.chart) > 0);

  // Antipodal pair: the projective hull contains a whole line.
  std::vector<PointQ> bad{pt({1, 0, 0}), pt({-1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})};
  ValidationReport bad_rep = ConvexDomain::validate_polytope_data(2, bad);
  CHECK_FALSE(bad_rep.valid);
  REQUIRE_FALSE(bad_rep.issues.empty());
  CHECK(bad_rep.issues[0].code == Errc::NotProperlyConvex);
  CHECK(bad_rep.witness_line.has_value());
  CHECK_THROWS_AS(ConvexDomain::polytope(2, bad), Error);

  CHECK(stock::ball(2).validate().valid);
  CHECK(stock::ball(3).validate().valid);

  // Redundant vertex.
  std::vector<PointQ> red{pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 1})};
  CHECK_FALSE(ConvexDomain::validate_polytope_data(2, red).valid);

  // Wrong ellipsoid signature.
  CHECK_FALSE(ConvexDomain::validate_ellipsoid_data(2, mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).valid);
  CHECK_FALSE(ConvexDomain::validate_ellipsoid_data(2, mat({{1, 0, 0}, {0, 1, 0}, {0, 1, -1}})).valid);
  // Signature (1,d) is the same domain with the form negated.
  CHECK(ConvexDomain::validate_ellipsoid_data(2, mat({{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}})).valid);
}

TEST_CASE("membership") {
  ConvexDomain s2 = stock::simplex(2);
  CHECK(s2.contains(pt({1, 1, 1})));
  CHECK_FALSE(s2.contains(pt({1, 0, 0})));  // vertex: boundary
  CHECK(s2.on_boundary(pt({1, 0, 0})));
  CHECK_FALSE(s2.contains(pt({1, -1, 1})));
  CHECK(s2.classify_point(pt({1, -1, 1})) == PointLocation::Outside);
  // Negative-sheet representative of an interior point is still inside.
  CHECK(s2.contains(pt({-1, -1, -1})));

  ConvexDomain b2 = stock::ball(2);
  CHECK(b2.contains(pt({0, 0, 1})));
  CHECK(b2.on_boundary(pt({1, 0, 1})));
  CHECK_FALSE(b2.contains(pt({2, 0, 1})));
}

TEST_CASE("boundary intersections: interval, disk, simplex sweep oracle") {
  ConvexDomain iv = stock::interval();
  BoundaryPairQ bp = iv.boundary_intersections_exact(pt({0, 1}), ptr({"1/2", "1"}));
  CHECK(same_point(bp.z1, pt({-1, 1})));
  CHECK(same_point(bp.z2, pt({1, 1})));
  CHECK(bp.t1 == Rat(-2));
  CHECK(bp.t2 == Rat(2));

  ConvexDomain b2 = stock::ball(2);
  BoundaryPair bd = b2.boundary_intersections(pt({0, 0, 1}), ptr({"1/2", "0", "1"}));
  CHECK(std::abs(to_double(bd.z1[0] / bd.z1[2]) + 1.0) < 1e-12);
  CHECK(std::abs(to_double(bd.z2[0] / bd.z2[2]) - 1.0) < 1e-12);

  ConvexDomain s2 = stock::simplex(2);
  PointQ x = pt({1, 1, 1}), y = pt({2, 1, 1});
  BoundaryPairQ sb = s2.boundary_intersections_exact(x, y);
  CHECK(std::abs(sweep_boundary_param(s2, x, y, false) - to_double(sb.t1)) < 1e-5);
  CHECK(std::abs(sweep_boundary_param(s2, x, y, true) - to_double(sb.t2)) < 1e-5);
  CHECK_THROWS_AS(s2.boundary_intersections_exact(x, pt({2, 2, 2})), Error);  // same point
}

TEST_CASE("hilbert distance: interval closed form and zero at coincidence") {
  ConvexDomain iv = stock::interval();
  double d = iv.hilbert_distance(pt({0, 1}), ptr({"1/2", "1"}));
  CHECK(std::abs(d - 0.5493061443340548) < 1e-12);  // (1/2) ln 3 = artanh(1/2)
  CHECK(iv.hilbert_distance(pt({0, 1}), pt({0, 3})) == 0.0);
}

TEST_CASE("Klein model: ball distances match artanh") {
  for (int dim : {2, 3}) {
    ConvexDomain ball = stock::ball(dim);
    for (int r = 1; r <= 9; ++r) {
      VecQ c(static_cast<size_t>(dim + 1), Rat(0));
      c[0] = Rat(r, 10);
      c[static_cast<size_t>(dim)] = 1;
      VecQ origin(static_cast<size_t>(dim + 1), Rat(0));
      origin[static_cast<size_t>(dim)] = 1;
      double d = ball.hilbert_distance(PointQ(origin), PointQ(c));
      CHECK(std::abs(d - std::atanh(r / 10.0)) < 1e-10);
    }
  }
}

TEST_CASE("simplex closed form: pipeline equals the positive-cone oracle") {
  Rng rng(20250810);
  for (int dim : {2, 3}) {
    ConvexDomain s = stock::simplex(dim);
    for (int trial = 0; trial < 500; ++trial) {
      VecQ xc(static_cast<size_t>(dim + 1)), yc(static_cast<size_t>(dim + 1));
      for (int i = 0; i <= dim; ++i) {
        xc[static_cast<size_t>(i)] = rng.next_rat() + Rat(1, 16);
        yc[static_cast<size_t>(i)] = rng.next_rat() + Rat(1, 16);
      }
      PointQ x(xc), y(yc);
      double oracle = simplex_distance(to_double(xc), to_double(yc));
      CHECK(std::abs(s.hilbert_distance(x, y) - oracle) <= 1e-10);
    }
  }
}

TEST_CASE("metric axioms and projective invariance (spot check)") {
  Rng rng(77);
  ConvexDomain s3 = stock::simplex(3);
  ProjMapQ g = stock::random_projective_map(3, 4242);
  std::vector<PointQ> gverts;
  for (const PointQ& v : s3.vertices()) gverts.push_back(apply(g, v));
  ConvexDomain gs3 = ConvexDomain::polytope(3, gverts);

  for (int trial = 0; trial < 100; ++trial) {
    PointQ x = s3.sample_interior(rng);
    PointQ y = s3.sample_interior(rng);
    PointQ z = s3.sample_interior(rng);
    double dxy = s3.hilbert_distance(x, y);
    CHECK(std::abs(dxy - s3.hilbert_distance(y, x)) <= 1e-9);
    CHECK(s3.hilbert_distance(x, z) <= dxy + s3.hilbert_distance(y, z) + 1e-9);
    CHECK(std::abs(gs3.hilbert_distance(apply(g, x), apply(g, y)) - dxy) <= 1e-9);
  }
}

TEST_CASE("finsler norm: interval, homogeneity, disk symmetry, consistency") {
  ConvexDomain iv = stock::interval();
  CHECK(iv.finsler_norm(pt({0, 1}), VecQ{Rat(1)}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(iv.finsler_norm(pt({0, 1}), VecQ{Rat(2)}) == doctest::Approx(2.0).epsilon(1e-12));

  ConvexDomain b2 = stock::ball(2);
  VecQ v{Rat(3), Rat(4)};
  // Center of the ball: every direction has unit reach after normalization.
  double n = b2.finsler_norm(pt({0, 0, 1}), v);
  CHECK(n == doctest::Approx(5.0).epsilon(1e-10));  // |v| = 5

  // Finite differences against the norm.
  Rng rng(31);
  ConvexDomain s2 = stock::simplex(2);
  for (int trial = 0; trial < 50; ++trial) {
    PointQ x = s2.sample_interior(rng);
    VecQ dir{rng.next_rat() - Rat(1, 2), rng.next_rat() - Rat(1, 2)};
    if (is_zero(dir)) continue;
    double f = s2.finsler_norm(x, dir);
    Rat h(1, 1000000);
    VecQ xc = s2.affine_chart().coords(PointQ(vec_scale(1 / incidence(x, s2.chart()), x.coords)));
    PointQ xh = s2.affine_chart().lift(vec_add(xc, vec_scale(h, dir)));
    double q = s2.hilbert_distance(x, xh) / to_double(h);
    CHECK(std::abs(q - f) <= 1e-4);
  }
  CHECK_THROWS_AS(s2.finsler_norm(pt({1, 1, 1}), VecQ{Rat(0), Rat(0)}), Error);
}

TEST_CASE("polar duality: simplex, ball, square, cube, involution") {
  ConvexDomain s3 = stock::simplex(3);
  ConvexDomain s3d = s3.dual();
  REQUIRE(s3d.vertices().size() == 4);
  // Standard simplex is self-dual on the nose in these coordinates.
  for (const PointQ& v : s3.vertices()) {
    bool found = false;
    for (const PointQ& w : s3d.vertices())
      if (same_point(v, w)) found = true;
    CHECK(found);
  }

  ConvexDomain b3 = stock::ball(3);
  CHECK(b3.dual().form() == b3.form());

  // Square: polar dual has vertices (+-1, 0), (0, +-1).
  ConvexDomain square = stock::cube(2);
  ConvexDomain squared = square.dual();
  REQUIRE(squared.vertices().size() == 4);
  std::vector<PointQ> expect{pt({1, 0, 1}), pt({-1, 0, 1}), pt({0, 1, 1}), pt({0, -1, 1})};
  for (const PointQ& e : expect) {
    bool found = false;
    for (const PointQ& w : squared.vertices())
      if (same_point(e, w)) found = true;
    CHECK(found);
  }

  ConvexDomain cube = stock::cube(3);
  ConvexDomain octa = cube.dual();
  CHECK(octa.vertices().size() == 6);
  CHECK(octa.facets().size() == 8);

  // Involution: (Omega*)* has the same projective vertex set.
  for (const ConvexDomain* dom : {&s3, &cube, &squared}) {
    ConvexDomain dd = dom->dual().dual();
    REQUIRE(dd.vertices().size() == dom->vertices().size());
    for (const PointQ& v : dom->vertices()) {
      bool found = false;
      for (const PointQ& w : dd.vertices())
        if (same_point(v, w)) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("domain JSON round-trip and float rejection") {
  ConvexDomain cube = stock::cube(3);
  Json j = domain_to_json(cube);
  ConvexDomain back = domain_from_json(j);
  CHECK(back.vertices().size() == cube.vertices().size());
  CHECK(back.facets().size() == cube.facets().size());

  ConvexDomain ball = stock::ball(2);
  CHECK(domain_from_json(domain_to_json(ball)).form() == ball.form());

  Json bad = Json::parse(R"({"type":"polytope","dim":1,"vertices":[[0.5,1],[1,1]]})");
  CHECK_THROWS_AS(domain_from_json(bad), Error);
  Json bad2 = Json::parse(R"({"type":"polytope","dim":1})");
  CHECK_THROWS_AS(domain_from_json(bad2), Error);
}

TEST_CASE("interior sampling respects membership everywhere") {
  Rng rng(8);
  for (const ConvexDomain& dom : {stock::simplex(2), stock::cube(3), stock::ball(3)}) {
    for (int i = 0; i < 50; ++i) CHECK(dom.contains(dom.sample_interior(rng)));
  }
}
