#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "hilbert/group.hpp"
#include "hilbert/stock_domains.hpp"
#include "test_support.hpp"

using namespace hilbert;
using namespace hilbert::testing;

namespace {

ProjMapQ permutation_map(const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  MatQ m(n, n);
  for (int j = 0; j < n; ++j) m.at(sigma[static_cast<size_t>(j)], j) = 1;
  return ProjMapQ(std::move(m));
}

}  // namespace

TEST_CASE("exact certification: permutations, diagonals, rotations") {
  ConvexDomain s3 = stock::simplex(3);
  GroupElement perm = certify_preserves(s3, permutation_map({1, 0, 2, 3}));
  CHECK(perm.certificate == GroupElement::Certificate::Exact);
  CHECK(perm.vertex_permutation == std::vector<int>{1, 0, 2, 3});

  GroupElement diag = certify_preserves(s3, ProjMapQ(mat({{4, 0, 0, 0},
                                                          {0, 1, 0, 0},
                                                          {0, 0, 1, 0},
                                                          {0, 0, 0, 1}})));
  CHECK(diag.certificate == GroupElement::Certificate::Exact);

  // Rational rotation (3-4-5 triangle) preserves the disk form exactly.
  ConvexDomain b2 = stock::ball(2);
  MatQ rot(3, 3);
  rot.at(0, 0) = Rat(3, 5);
  rot.at(0, 1) = Rat(-4, 5);
  rot.at(1, 0) = Rat(4, 5);
  rot.at(1, 1) = Rat(3, 5);
  rot.at(2, 2) = 1;
  GroupElement r = certify_preserves(b2, ProjMapQ(rot));
  CHECK(r.certificate == GroupElement::Certificate::Exact);

  // A shear is not an automorphism of the simplex.
  CHECK_THROWS_AS(certify_preserves(s3, ProjMapQ(mat({{1, 1, 0, 0},
                                                      {0, 1, 0, 0},
                                                      {0, 0, 1, 0},
                                                      {0, 0, 0, 1}}))),
                  Error);
  // Nor is a stretch of the disk.
  CHECK_THROWS_AS(certify_preserves(b2, ProjMapQ(mat({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}))), Error);
}

TEST_CASE("sampled certification") {
  ConvexDomain s2 = stock::simplex(2);
  GroupElement g = certify_preserves_sampled(s2, permutation_map({2, 0, 1}), 128, 9);
  CHECK(g.certificate == GroupElement::Certificate::Sampled);
  CHECK(g.samples == 128);
  // A contraction maps the domain inside itself, but its inverse escapes.
  ProjMapQ contraction(mat({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}));
  CHECK_THROWS_AS(certify_preserves_sampled(s2, contraction, 128, 9), Error);
}

TEST_CASE("isometry check: certified maps move nothing, distortions flagged") {
  ConvexDomain s3 = stock::simplex(3);
  IsometryReport id = isometry_check(s3, ProjMapQ(MatQ::identity(4)), 200, 5);
  CHECK(id.max_deviation == 0.0);
  CHECK(id.pass);

  IsometryReport perm = isometry_check(s3, permutation_map({3, 2, 1, 0}), 200, 5);
  CHECK(perm.pass);
  CHECK(perm.max_deviation <= 1e-9);

  GroupElement diag = certify_preserves(
      s3, ProjMapQ(mat({{9, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})));
  CHECK(isometry_check(s3, diag.map, 200, 5).pass);

  // The contraction toward the barycenter shrinks distances measurably.
  IsometryReport bad = isometry_check(s3, ProjMapQ(mat({{2, 1, 1, 1},
                                                        {1, 2, 1, 1},
                                                        {1, 1, 2, 1},
                                                        {1, 1, 1, 2}})),
                                      200, 5);
  CHECK_FALSE(bad.pass);
  CHECK(bad.max_deviation > 1e-3);
}

TEST_CASE("flat stabilizers") {
  ConvexDomain s3 = stock::simplex(3);
  Flat f = validate_flat(s3, stock::corner_flat_vertices(3, 0, Rat(1, 2)));

  // Permuting the non-corner coordinates permutes the flat's vertices.
  GroupElement swap23 = certify_preserves(s3, permutation_map({0, 2, 1, 3}));
  CHECK(stabilizes_flat(swap23, f));
  CHECK(same_point(apply(swap23.map, f.pseudo_dual), f.pseudo_dual));

  // Swapping corners 0 and 1 exchanges two different corner flats.
  GroupElement swap01 = certify_preserves(s3, permutation_map({1, 0, 2, 3}));
  CHECK_FALSE(stabilizes_flat(swap01, f));

  GroupElement id = certify_preserves(s3, ProjMapQ(MatQ::identity(4)));
  CHECK(stabilizes_flat(id, f));

  // Frame diagonals of a standard neighborhood fix every flat vertex.
  StandardNeighborhood nbhd = standard_neighborhood(s3, f, pt({9, 1, 1, 1}));
  GroupElement hf{nbhd.frame_diagonal({Rat(2), Rat(1, 2), Rat(1)}),
                  GroupElement::Certificate::Exact, 0, 0, {}};
  CHECK(stabilizes_flat(hf, f));
  CHECK(same_point(apply(hf.map, f.pseudo_dual), f.pseudo_dual));
}

TEST_CASE("translation length: identity, 1-simplex, diagonal closed form vs numeric") {
  ConvexDomain s1 = stock::simplex(1);

  GroupElement id = certify_preserves(s1, ProjMapQ(MatQ::identity(2)));
  TranslationLength tid = translation_length(s1, id);
  CHECK(tid.closed_form);
  CHECK(tid.value == 0.0);

  // diag(4, 1) on the 1-simplex: displacement is (1/2) log 4 = log 2
  // everywhere on the axis; the fixed-point cross-ratio gives the same
  // value.
  GroupElement g = certify_preserves(s1, ProjMapQ(mat({{4, 0}, {0, 1}})));
  TranslationLength t = translation_length(s1, g);
  CHECK(t.closed_form);
  CHECK(std::abs(t.value - std::log(2.0)) < 1e-14);
  {
    PointQ x = pt({1, 2});  // interior of the vertex cone segment
    PointQ gx = apply(g.map, x);
    Rat cr = cross_ratio(pt({1, 0}), x, gx, pt({0, 1}));
    CHECK(std::abs(std::abs(0.5 * std::log(to_double(cr))) - t.value) < 1e-14);
  }
  TranslationLength tn = translation_length(s1, g, 8, 5000, 1, /*use_closed_form=*/false);
  CHECK_FALSE(tn.closed_form);
  CHECK(std::abs(tn.value - t.value) <= 1e-6);

  // diag exponents (log 4, 0, 0) on the 2-simplex: value log 2.
  ConvexDomain s2 = stock::simplex(2);
  GroupElement d2 = certify_preserves(s2, ProjMapQ(mat({{4, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  TranslationLength c2 = translation_length(s2, d2);
  CHECK(c2.closed_form);
  CHECK(std::abs(c2.value - std::log(2.0)) < 1e-14);
  TranslationLength n2 = translation_length(s2, d2, 8, 5000, 2, false);
  CHECK(std::abs(n2.value - c2.value) <= 1e-6);

  // A pure permutation has fixed points: length 0 found numerically.
  GroupElement rot = certify_preserves(s2, permutation_map({1, 2, 0}));
  TranslationLength tr = translation_length(s2, rot);
  CHECK_FALSE(tr.closed_form);
  CHECK(tr.value <= 1e-6);
}

TEST_CASE("orbits: identity, powers of a diagonal, commuting pair") {
  ConvexDomain s2 = stock::simplex(2);
  PointQ x = pt({2, 3, 5});

  GeneratorSet only_id = GeneratorSet::close_under_inverses(
      {certify_preserves(s2, ProjMapQ(MatQ::identity(3)))}, {"e"});
  CHECK(orbit(only_id, x, 4).size() == 1);

  // One diagonal generator: words of length <= 3 give the 7 powers
  // g^-3 ... g^3, which line up in log coordinates.
  GroupElement g = certify_preserves(s2, ProjMapQ(mat({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  GeneratorSet gen = GeneratorSet::close_under_inverses({g}, {"a"});
  CHECK(gen.elements.size() == 2);
  auto pts = orbit(gen, x, 3);
  CHECK(pts.size() == 7);
  std::vector<VecD> logs;
  for (const OrbitPoint& p : pts) {
    VecD v = to_double(p.point);
    logs.push_back(phi_map(v.cwiseAbs()));
  }
  for (size_t i = 2; i < logs.size(); ++i) {
    VecD u = logs[1] - logs[0], w = logs[i] - logs[0];
    double cross = (u * w.norm() - w * u.norm()).norm();
    CHECK(std::min(cross, (u * w.norm() + w * u.norm()).norm()) < 1e-9);
  }

  // Commuting diagonal pair: words of length <= L reach the lattice diamond
  // |i| + |j| <= L. Independent count by integer enumeration.
  GroupElement h = certify_preserves(s2, ProjMapQ(mat({{1, 0, 0}, {0, 3, 0}, {0, 0, 1}})));
  GeneratorSet two = GeneratorSet::close_under_inverses({g, h}, {"a", "b"});
  const int L = 2;
  auto pts2 = orbit(two, x, L);
  std::set<std::pair<int, int>> diamond;
  for (int i = -L; i <= L; ++i)
    for (int j = -L; j <= L; ++j)
      if (std::abs(i) + std::abs(j) <= L) diamond.insert({i, j});
  CHECK(pts2.size() == diamond.size());  // 2L^2 + 2L + 1 = 13
}

TEST_CASE("precise invariance: lattice preserves, swap moves off, stretch straddles") {
  ConvexDomain s3 = stock::simplex(3);
  Flat f = validate_flat(s3, stock::corner_flat_vertices(3, 0, Rat(1, 4)));
  // Base point close to the flat keeps the neighborhood thin.
  PointQ base = pt({17, 2, 2, 2});
  REQUIRE(s3.contains(base));
  StandardNeighborhood nbhd = standard_neighborhood(s3, f, base);

  auto member = [&](const PointQ& y) { return nbhd.contains(s3, y); };
  auto sampler = [&](Rng& rng) {
    // Convex combination of the flat and the base orbit; lambda spans the
    // full depth of the region so the level values spread widely.
    for (;;) {
      VecQ acc(4, Rat(0));
      for (const PointQ& v : f.vertices)
        acc = vec_add(acc, vec_scale(Rat(1, 8) + rng.next_rat(), v.coords));
      PointQ on_flat{acc};
      Rat lam = Rat(1, 16) + rng.next_rat(8) * Rat(7, 8);  // in [1/16, 15/16]
      VecQ mix = vec_add(vec_scale((1 - lam) / incidence(on_flat, s3.chart()), on_flat.coords),
                         vec_scale(lam / incidence(base, s3.chart()), base.coords));
      PointQ y{mix};
      if (nbhd.contains(s3, y)) return y;
    }
  };

  // H_F lattice words: the level is preserved exactly, no violations.
  GeneratorSet lattice = GeneratorSet::close_under_inverses(
      {GroupElement{nbhd.frame_diagonal({Rat(2), Rat(1, 2), Rat(1)}),
                    GroupElement::Certificate::Exact, 0, 0, {}},
       GroupElement{nbhd.frame_diagonal({Rat(1), Rat(2), Rat(1, 2)}),
                    GroupElement::Certificate::Exact, 0, 0, {}}},
      {"a", "b"});
  PreciseInvarianceReport ok = precise_invariance_check(member, sampler, lattice, 2, 40, 11);
  CHECK_FALSE(ok.violation_found);
  for (const auto& w : ok.words)
    CHECK(w.verdict == PreciseInvarianceReport::WordStatus::Verdict::Preserved);

  // Swapping corners 0 and 1 moves the thin neighborhood clean off itself.
  GeneratorSet mover = GeneratorSet::close_under_inverses(
      {certify_preserves(s3, permutation_map({1, 0, 2, 3}))}, {"s"});
  PreciseInvarianceReport off = precise_invariance_check(member, sampler, mover, 1, 40, 11);
  CHECK_FALSE(off.violation_found);
  for (const auto& w : off.words)
    CHECK(w.verdict == PreciseInvarianceReport::WordStatus::Verdict::MovedOff);

  // A diagonal stretch in Aut(simplex) maps the flat to a nearby flat whose
  // neighborhood straddles ours: definite violation witness.
  GeneratorSet stretch = GeneratorSet::close_under_inverses(
      {certify_preserves(s3, ProjMapQ(mat({{2, 0, 0, 0},
                                           {0, 1, 0, 0},
                                           {0, 0, 1, 0},
                                           {0, 0, 0, 1}})))},
      {"t"});
  PreciseInvarianceReport bad = precise_invariance_check(member, sampler, stretch, 1, 60, 11);
  CHECK(bad.violation_found);
}
