#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbert/projective.hpp"
#include "hilbert/rng.hpp"
#include "hilbert/stock_domains.hpp"
#include "test_support.hpp"

using namespace hilbert;
using namespace hilbert::testing;

TEST_CASE("cross-ratio on the affine line: [-1, 0, 1/2, 1] = 3") {
  // Affine parameters t: ((t_y - t_z1)(t_z2 - t_x)) / ((t_x - t_z1)(t_z2 - t_y))
  // = ((3/2)(1)) / ((1)(1/2)) = 3.
  PointQ z1 = pt({-1, 1}), x = pt({0, 1}), z2 = pt({1, 1});
  PointQ y = ptr({"1/2", "1"});
  CHECK(cross_ratio(z1, x, y, z2) == Rat(3));
}

TEST_CASE("cross-ratio with coincident middle points is 1") {
  PointQ z1 = pt({-1, 1}), x = pt({2, 7}), z2 = pt({1, 1});
  CHECK(cross_ratio(z1, x, x, z2) == Rat(1));
}

TEST_CASE("cross-ratio is invariant under projective maps (exact)") {
  PointQ z1 = pt({-1, 1}), x = pt({0, 1}), z2 = pt({1, 1});
  PointQ y = ptr({"1/2", "1"});
  for (uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    ProjMapQ g = stock::random_projective_map(1, seed);
    CHECK(cross_ratio(apply(g, z1), apply(g, x), apply(g, y), apply(g, z2)) == Rat(3));
  }
}

TEST_CASE("swapping the middle arguments inverts the cross-ratio") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    // Four distinct points on a random line in RP^3.
    VecQ u(4), v(4);
    for (int i = 0; i < 4; ++i) {
      u[i] = rng.next_rat() - Rat(1, 2);
      v[i] = rng.next_rat() - Rat(1, 2);
    }
    if (rank(MatQ::from_rows({u, v})) != 2) continue;
    auto combo = [&](long a, long b) { return PointQ(vec_add(vec_scale(Rat(a), u), vec_scale(Rat(b), v))); };
    PointQ z1 = combo(1, 0), x = combo(1, 1), y = combo(1, 2), z2 = combo(1, 5);
    Rat c = cross_ratio(z1, x, y, z2);
    CHECK(c * cross_ratio(z1, y, x, z2) == Rat(1));
  }
}

TEST_CASE("cross-ratio rejects non-collinear and degenerate input") {
  PointQ a = pt({1, 0, 0}), b = pt({0, 1, 0}), c = pt({0, 0, 1}), d = pt({1, 1, 1});
  CHECK_THROWS_AS(cross_ratio(a, b, c, d), Error);
  PointQ z1 = pt({1, 0}), x = pt({2, 0});  // z1 == x projectively
  CHECK_THROWS_AS(cross_ratio(z1, x, pt({1, 1}), pt({0, 1})), Error);
}

TEST_CASE("float cross-ratio tracks the exact value to 1e-10 relative") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    VecQ u(3), v(3);
    for (int i = 0; i < 3; ++i) {
      u[i] = rng.next_rat() - Rat(1, 2);
      v[i] = rng.next_rat() - Rat(1, 2);
    }
    if (rank(MatQ::from_rows({u, v})) != 2) continue;
    auto combo = [&](long a, long b) { return PointQ(vec_add(vec_scale(Rat(a), u), vec_scale(Rat(b), v))); };
    PointQ z1 = combo(1, 0), x = combo(2, 1), y = combo(1, 2), z2 = combo(1, 7);
    Rat exact = cross_ratio(z1, x, y, z2);
    if (abs(exact) < Rat(1, 100)) continue;
    double approx = cross_ratio_d(to_double(z1), to_double(x), to_double(y), to_double(z2), 1e-9);
    CHECK(std::abs(approx - to_double(exact)) <= 1e-10 * std::abs(to_double(exact)));
  }
}

TEST_CASE("apply: identity, inverse round-trip, diagonal scaling") {
  PointQ p = pt({1, 1});
  ProjMapQ id(MatQ::identity(2));
  CHECK(same_point(apply(id, p), p));

  ProjMapQ g = stock::random_projective_map(1, 42);
  CHECK(same_point(apply(inverse_map(g), apply(g, p)), p));

  ProjMapQ diag(mat({{2, 0}, {0, 1}}));
  CHECK(same_point(apply(diag, p), pt({2, 1})));
}

TEST_CASE("apply_dual keeps incidence equivariant") {
  ProjMapQ diag(mat({{2, 0}, {0, 1}}));
  HyperplaneQ h = cov({1, 0});
  CHECK(same_hyperplane(apply_dual(diag, h), cov({1, 0})));  // (1/2, 0) up to scale

  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    VecQ pc(4);
    for (int i = 0; i < 4; ++i) pc[i] = rng.next_rat() - Rat(1, 2);
    if (is_zero(pc)) continue;
    PointQ p(pc);
    // A hyperplane through p.
    std::vector<VecQ> kernel = nullspace(MatQ::from_rows({pc}));
    HyperplaneQ hp(kernel[static_cast<size_t>(trial) % kernel.size()]);
    REQUIRE(incidence(p, hp) == 0);
    ProjMapQ g = stock::random_projective_map(3, 1000 + static_cast<uint64_t>(trial));
    CHECK(incidence(apply(g, p), apply_dual(g, hp)) == 0);
    // And a hyperplane off p stays off.
    HyperplaneQ off(VecQ{pc[0] + 1, pc[1], pc[2], pc[3] + 1});
    if (incidence(p, off) != 0) CHECK(incidence(apply(g, p), apply_dual(g, off)) != 0);
  }
}

TEST_CASE("general position") {
  CHECK(general_position({pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}));
  CHECK_FALSE(general_position({pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0})}));
  // Corner-flat vertices of the 3-simplex (midpoints of the edges at e1).
  auto flat = stock::corner_flat_vertices(3, 0, Rat(1, 2));
  CHECK(general_position(flat));
}

TEST_CASE("chart coordinates") {
  AffineChartQ chart(cov({0, 1}));  // x2 = 1
  CHECK(chart.coords(pt({2, 2})) == VecQ{Rat(1)});
  CHECK(chart.coords(pt({1, 1})) == VecQ{Rat(1)});  // scale invariance
  PointQ q = ptr({"3/7", "1"});
  CHECK(chart.coords(q) == VecQ{rat_from_string("3/7")});
  CHECK_THROWS_AS(chart.coords(pt({1, 0})), Error);  // on ker(eta)

  AffineChartQ chart3(cov({1, 1, 1}));
  PointQ p = pt({2, 3, 5});
  CHECK(same_point(chart3.lift(chart3.coords(p)), p));
}

TEST_CASE("normalization is idempotent and respects projective equality") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    VecQ c(4);
    for (int i = 0; i < 4; ++i) c[i] = rng.next_rat() - Rat(1, 2);
    if (is_zero(c)) continue;
    PointQ p(c);
    PointQ n = normalized(p);
    CHECK(normalized(n).coords == n.coords);
    Rat k = rng.next_rat() + Rat(1, 3);
    CHECK(same_point(p, PointQ(vec_scale(-k, c))));
    CHECK(normalized(PointQ(vec_scale(-k, c))).coords == n.coords);
  }
}
