#include "hilbert/stock_domains.hpp"

#include <cassert>
#include <cmath>

#include "hilbert/rng.hpp"

namespace hilbert::stock {

ConvexDomain simplex(int d) {
  std::vector<PointQ> verts;
  for (int i = 0; i <= d; ++i) {
    VecQ v(d + 1, Rat(0));
    v[static_cast<size_t>(i)] = 1;
    verts.emplace_back(std::move(v));
  }
  return ConvexDomain::polytope(d, std::move(verts));
}

ConvexDomain cube(int d) {
  std::vector<PointQ> verts;
  for (int mask = 0; mask < (1 << d); ++mask) {
    VecQ v(d + 1, Rat(1));
    for (int i = 0; i < d; ++i) v[static_cast<size_t>(i)] = (mask >> i & 1) ? Rat(1) : Rat(-1);
    verts.emplace_back(std::move(v));
  }
  return ConvexDomain::polytope(d, std::move(verts));
}

ConvexDomain cross_polytope(int d) {
  std::vector<PointQ> verts;
  for (int i = 0; i < d; ++i)
    for (int s : {1, -1}) {
      VecQ v(d + 1, Rat(0));
      v[static_cast<size_t>(i)] = s;
      v[static_cast<size_t>(d)] = 1;
      verts.emplace_back(std::move(v));
    }
  return ConvexDomain::polytope(d, std::move(verts));
}

ConvexDomain ball(int d) {
  MatQ q(d + 1, d + 1);
  for (int i = 0; i < d; ++i) q.at(i, i) = 1;
  q.at(d, d) = -1;
  return ConvexDomain::ellipsoid(d, q);
}

ConvexDomain interval() {
  std::vector<PointQ> verts;
  verts.emplace_back(VecQ{Rat(-1), Rat(1)});
  verts.emplace_back(VecQ{Rat(1), Rat(1)});
  return ConvexDomain::polytope(1, std::move(verts));
}

ConvexDomain random_polytope(int d, int vertex_count, uint64_t seed) {
  for (uint64_t attempt = 0; attempt < 64; ++attempt) {
    Rng rng(seed, 0xd0e + attempt);
    std::vector<PointQ> verts;
    while (static_cast<int>(verts.size()) < vertex_count) {
      // Rational point near the unit sphere: normalize a cube sample in
      // binary64, then snap to denominator 1024.
      VecD dir(d);
      for (int i = 0; i < d; ++i) dir[i] = rng.next_double(-1.0, 1.0);
      double n = dir.norm();
      if (n < 0.2) continue;
      VecQ v(d + 1, Rat(1));
      bool ok = true;
      for (int i = 0; i < d; ++i) {
        long num = std::lround(1024.0 * dir[i] / n);
        if (num == 0) num = 1;
        v[static_cast<size_t>(i)] = Rat(num, 1024);
        v[static_cast<size_t>(i)].canonicalize();
        if (abs(v[static_cast<size_t>(i)]) > 1) ok = false;
      }
      if (!ok) continue;
      verts.emplace_back(std::move(v));
    }
    ValidationReport rep = ConvexDomain::validate_polytope_data(d, verts);
    if (rep.valid) return ConvexDomain::polytope(d, std::move(verts));
  }
  fail(Errc::InvalidDomain, "random polytope generation failed to reach convex position");
}

std::vector<PointQ> corner_flat_vertices(int d, int corner, const Rat& s) {
  assert(corner >= 0 && corner <= d);
  std::vector<PointQ> out;
  for (int j = 0; j <= d; ++j) {
    if (j == corner) continue;
    VecQ v(d + 1, Rat(0));
    v[static_cast<size_t>(corner)] = 1 - s;
    v[static_cast<size_t>(j)] = s;
    out.emplace_back(std::move(v));
  }
  return out;
}

ProjMapQ random_projective_map(int d, uint64_t seed, const Rat& spread) {
  for (uint64_t attempt = 0; attempt < 32; ++attempt) {
    Rng rng(seed, 0xa11 + attempt);
    MatQ m = MatQ::identity(d + 1);
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j) m.at(i, j) += spread * (rng.next_rat() - Rat(1, 2)) * 2;
    if (det(m) != 0) return ProjMapQ(std::move(m));
  }
  fail(Errc::DegenerateConfiguration, "random map generation kept hitting singular matrices");
}

}  // namespace hilbert::stock
