#include "hilbert/flats.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "hilbert/rng.hpp"

namespace hilbert {

namespace {

std::vector<PointQ> chart_normalized(const ConvexDomain& dom, std::vector<PointQ> pts) {
  for (PointQ& p : pts) {
    Rat s = incidence(p, dom.chart());
    if (s == 0) fail(Errc::PointAtInfinity, "no chart representative for flat vertex");
    if (s != 1) p = PointQ(vec_scale(1 / s, p.coords));
  }
  return pts;
}

HyperplaneQ carrier_of(const std::vector<PointQ>& verts) {
  std::vector<VecQ> rows;
  rows.reserve(verts.size());
  for (const PointQ& p : verts) rows.push_back(p.coords);
  std::vector<VecQ> kernel = nullspace(MatQ::from_rows(rows));
  if (kernel.size() != 1) fail(Errc::NotGeneralPosition, "flat vertices do not span a hyperplane");
  return HyperplaneQ(primitive_integer_scale(kernel[0], true));
}

// The unique supporting hyperplane of the face omitting vertex `drop`,
// resolved through the pseudo-dual when it is supplied: the covector must
// vanish on the remaining vertices (and on the pseudo-dual) and be
// single-signed on the domain's vertex cone.
HyperplaneQ face_support(const ConvexDomain& dom, const std::vector<PointQ>& verts, int drop,
                         const PointQ* pseudo_dual) {
  std::vector<VecQ> rows;
  for (size_t k = 0; k < verts.size(); ++k)
    if (static_cast<int>(k) != drop) rows.push_back(verts[k].coords);
  if (pseudo_dual) rows.push_back(pseudo_dual->coords);
  std::vector<VecQ> kernel = nullspace(MatQ::from_rows(rows));
  if (kernel.empty())
    fail(Errc::NoCommonPoint, "support system for flat face " + std::to_string(drop) + " is inconsistent");
  if (kernel.size() != 1)
    fail(Errc::NonUniqueSupport,
         "flat face " + std::to_string(drop) + " admits a support family of dimension " +
             std::to_string(kernel.size() - 1));
  VecQ h = kernel[0];
  int pos = 0, neg = 0;
  for (const PointQ& v : dom.vertices()) {
    int s = sgn(dot(h, v.coords));
    if (s > 0) ++pos;
    if (s < 0) ++neg;
  }
  if (pos > 0 && neg > 0)
    fail(Errc::NonUniqueSupport,
         "candidate support of flat face " + std::to_string(drop) + " cuts the domain");
  if (neg > 0)
    for (Rat& c : h) c = -c;
  return HyperplaneQ(primitive_integer_scale(h, false));
}

}  // namespace

Flat validate_flat(const ConvexDomain& dom, std::vector<PointQ> vertices) {
  if (!dom.is_polytope())
    fail(Errc::InvalidDomain,
         "flat validation is polytope-only (strictly convex domains admit no flats)");
  const int d = dom.dim();
  if (static_cast<int>(vertices.size()) != d)
    fail(Errc::NotGeneralPosition, "a codimension-1 flat needs exactly d vertices");
  for (const PointQ& v : vertices)
    if (static_cast<int>(v.coords.size()) != d + 1)
      fail(Errc::NotGeneralPosition, "flat vertex has wrong coordinate count");
  if (!general_position(vertices)) fail(Errc::NotGeneralPosition, "flat vertices are dependent");

  for (size_t i = 0; i < vertices.size(); ++i) {
    PointLocation loc = dom.classify_point(vertices[i]);
    if (loc != PointLocation::Boundary)
      fail(Errc::VertexNotOnBoundary, "flat vertex " + std::to_string(i) +
                                          (loc == PointLocation::Interior ? " is interior"
                                                                          : " is outside the domain"));
  }

  Flat flat;
  flat.vertices = chart_normalized(dom, std::move(vertices));

  // Facet incidence of each flat vertex. Vertices are on the positive sheet,
  // so facet values are >= 0 and a face of the flat lies in the boundary iff
  // a single facet annihilates all its vertices.
  const int nf = static_cast<int>(dom.facets().size());
  std::vector<std::vector<bool>> on(flat.vertices.size(), std::vector<bool>(nf, false));
  for (size_t i = 0; i < flat.vertices.size(); ++i) {
    VecQ vals = dom.facet_values(flat.vertices[i]);
    for (int j = 0; j < nf; ++j) on[i][j] = (vals[static_cast<size_t>(j)] == 0);
  }

  // Open hull inside the domain: no facet contains every vertex.
  for (int j = 0; j < nf; ++j) {
    bool all = true;
    for (size_t i = 0; i < flat.vertices.size(); ++i)
      if (!on[i][j]) {
        all = false;
        break;
      }
    if (all)
      fail(Errc::InteriorEscapes,
           "hull interior lies in the boundary (all vertices on facet " + std::to_string(j) + ")");
  }

  // Every proper face of the simplex inside a face of the domain; the
  // maximal ones (omit one vertex) suffice.
  flat.support_facets.assign(flat.vertices.size(), -1);
  for (size_t i = 0; i < flat.vertices.size(); ++i) {
    std::vector<int> common;
    for (int j = 0; j < nf; ++j) {
      bool all = true;
      for (size_t k = 0; k < flat.vertices.size(); ++k) {
        if (k == i) continue;
        if (!on[k][j]) {
          all = false;
          break;
        }
      }
      if (all) common.push_back(j);
    }
    if (common.empty())
      fail(Errc::FaceNotInBoundary,
           "flat face omitting vertex " + std::to_string(i) + " is not inside a domain face");
    if (common.size() != 1)
      fail(Errc::NonUniqueSupport, "flat face omitting vertex " + std::to_string(i) +
                                       " lies in " + std::to_string(common.size()) + " facets");
    flat.support_facets[i] = common[0];
  }

  // Pseudo-dual: the supports intersect in a single point.
  {
    std::vector<VecQ> rows;
    for (int j : flat.support_facets) rows.push_back(dom.facets()[static_cast<size_t>(j)].covector);
    std::vector<VecQ> kernel = nullspace(MatQ::from_rows(rows));
    if (kernel.size() != 1)
      fail(Errc::NoCommonPoint, "supporting hyperplanes do not meet in a unique point");
    flat.pseudo_dual = PointQ(primitive_integer_scale(kernel[0], true));
  }
  PointLocation pd = dom.classify_point(flat.pseudo_dual);
  assert(pd != PointLocation::Interior);
  flat.pd_position = (pd == PointLocation::Boundary) ? Flat::PseudoDualPosition::OnBoundary
                                                     : Flat::PseudoDualPosition::OutsideClosure;
  flat.carrier = carrier_of(flat.vertices);
  flat.properly_embedded = true;
  return flat;
}

bool flat_interior_sample_check(const ConvexDomain& dom, const std::vector<PointQ>& vertices,
                                int grid_points, double tol) {
  std::vector<VecD> vd;
  vd.reserve(vertices.size());
  for (const PointQ& v : vertices) vd.push_back(to_double(v));
  Rng rng(0xF1A7u);
  for (int s = 0; s < grid_points; ++s) {
    VecD p = VecD::Zero(vd[0].size());
    for (const VecD& v : vd) p += (0.05 + rng.next_double()) * normalized_d(v);
    if (!dom.contains_d(p, tol)) return false;
  }
  return true;
}

PointQ pseudo_dual_point(const ConvexDomain& dom, const std::vector<PointQ>& flat_vertices) {
  Flat f = validate_flat(dom, flat_vertices);
  return f.pseudo_dual;
}

PseudoDualFloatReport pseudo_dual_float(const ConvexDomain& dom,
                                        const std::vector<PointQ>& flat_vertices, double tol) {
  // Stack every facet incident (at tolerance) to some (d-2)-face of the
  // flat. With more rows than d, a consistent common point needs effective
  // rank d: sigma_{d+1}/sigma_1 below tol. Uniqueness needs sigma_d above.
  std::vector<PointQ> verts;
  {
    Flat probe = validate_flat(dom, flat_vertices);  // reuse the exact preconditions
    verts = probe.vertices;
  }
  const int d = dom.dim();
  std::vector<VecD> rows;
  for (size_t i = 0; i < verts.size(); ++i) {
    for (size_t j = 0; j < dom.facets().size(); ++j) {
      VecD h = normalized_d(to_double(dom.facets()[j].covector));
      bool incident = true;
      for (size_t k = 0; k < verts.size(); ++k) {
        if (k == i) continue;
        if (std::abs(h.dot(normalized_d(to_double(verts[k])))) > tol) {
          incident = false;
          break;
        }
      }
      if (incident) rows.push_back(h);
    }
  }
  MatD stacked(static_cast<Eigen::Index>(rows.size()), d + 1);
  for (size_t i = 0; i < rows.size(); ++i) stacked.row(static_cast<Eigen::Index>(i)) = rows[i];
  Eigen::JacobiSVD<MatD> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  PseudoDualFloatReport rep;
  rep.point = svd.matrixV().col(d);
  bool unique = sv.size() >= d && sv[d - 1] > tol * sv[0];
  rep.consistency = (sv.size() > d) ? sv[d] / sv[0] : 0.0;
  rep.accepted = unique && rep.consistency < tol;
  return rep;
}

LineQ normal_line(const Flat& flat, const PointQ& x) {
  if (incidence(x, flat.carrier) != 0)
    fail(Errc::ProjectionUndefined, "normal line base point is off the flat's carrier");
  return LineQ{x, flat.pseudo_dual};
}

PointQ normal_project(const ConvexDomain& dom, const Flat& flat, const PointQ& y) {
  if (!dom.contains(y)) fail(Errc::MembershipFailure, "projection needs an interior point");
  Rat ey = incidence(y, flat.carrier);
  Rat ef = incidence(flat.pseudo_dual, flat.carrier);
  if (ef == 0) fail(Errc::ProjectionUndefined, "pseudo-dual lies on the carrier");
  VecQ p = vec_sub(vec_scale(ef, y.coords), vec_scale(ey, flat.pseudo_dual.coords));
  if (is_zero(p)) fail(Errc::ProjectionUndefined, "point is projectively the pseudo-dual");

  // Barycentric coordinates with respect to the flat's vertices must be
  // single-signed; this certifies the landing point lies in the open flat.
  MatQ w(static_cast<int>(p.size()), flat.simplex_dim() + 1);
  for (int c = 0; c < w.cols; ++c)
    for (int r = 0; r < w.rows; ++r) w.at(r, c) = flat.vertices[static_cast<size_t>(c)].coords[static_cast<size_t>(r)];
  auto mu = solve(w, p);
  if (!mu) fail(Errc::ProjectionUndefined, "projection left the carrier span");
  int pos = 0, neg = 0;
  for (const Rat& m : *mu) {
    if (m > 0) ++pos;
    if (m < 0) ++neg;
  }
  if (pos && neg) fail(Errc::ProjectionUndefined, "projection lands outside the flat");
  return PointQ(p);
}

VecD phi_map(const VecD& positive_coords) {
  VecD logs(positive_coords.size());
  for (Eigen::Index i = 0; i < positive_coords.size(); ++i) {
    if (!(positive_coords[i] > 0)) fail(Errc::NonPositiveCoordinate, "phi needs positive coordinates");
    logs[i] = std::log(positive_coords[i]);
  }
  return logs.array() - logs.mean();
}

double simplex_distance(const VecD& x, const VecD& y) {
  assert(x.size() == y.size());
  double lo = 0, hi = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0))
      fail(Errc::NonPositiveCoordinate, "simplex distance needs positive coordinates");
    double r = std::log(x[i] / y[i]);
    if (i == 0) {
      lo = hi = r;
    } else {
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
  }
  return 0.5 * (hi - lo);
}

Flat flat_dual(const ConvexDomain& dom, const ConvexDomain& dual_dom, const Flat& flat) {
  Flat out;
  const Rat one(1);
  for (size_t i = 0; i < flat.vertices.size(); ++i) {
    HyperplaneQ h = face_support(dom, flat.vertices, static_cast<int>(i), &flat.pseudo_dual);
    Rat s = dot(h.covector, dom.center().coords);
    assert(s != 0);
    if (s < 0) h = HyperplaneQ(vec_scale(Rat(-1), h.covector));
    s = abs(s);
    out.vertices.emplace_back(vec_scale(one / s, h.covector));
  }
  out.support_facets.assign(out.vertices.size(), -1);
  // Duality swaps carrier and pseudo-dual.
  out.carrier = HyperplaneQ(flat.pseudo_dual.coords);
  out.pseudo_dual = PointQ(flat.carrier.covector);

  if (!general_position(out.vertices))
    fail(Errc::NotGeneralPosition, "dual flat vertices are dependent");
  for (const PointQ& v : out.vertices)
    if (incidence(v, out.carrier) != 0) fail(Errc::NoCommonPoint, "dual flat vertex off its carrier");

  out.pd_position = dual_dom.classify_point(out.pseudo_dual) == PointLocation::Boundary
                        ? Flat::PseudoDualPosition::OnBoundary
                        : Flat::PseudoDualPosition::OutsideClosure;

  // Embeddedness of the dual flat in the dual domain: holds in the strictly
  // supported setting, fails for the corner-flat families of reducible test
  // domains (the dual triangle lies in the dual boundary). Recorded, not
  // thrown.
  out.properly_embedded = true;
  for (const PointQ& v : out.vertices)
    if (dual_dom.classify_point(v) != PointLocation::Boundary) out.properly_embedded = false;
  if (out.properly_embedded) {
    VecQ acc(out.vertices[0].coords.size(), Rat(0));
    for (const PointQ& v : out.vertices) acc = vec_add(acc, v.coords);
    if (!dual_dom.contains(PointQ(acc))) out.properly_embedded = false;
  }
  return out;
}

StandardNeighborhood::StandardNeighborhood(Flat flat, MatQ frame, MatQ frame_inv, Rat level)
    : flat_(std::move(flat)), frame_(std::move(frame)), frame_inv_(std::move(frame_inv)),
      level_(std::move(level)) {}

VecQ StandardNeighborhood::frame_coords(const PointQ& y) const { return mul(frame_inv_, y.coords); }

Rat StandardNeighborhood::level_of(const PointQ& y) const {
  VecQ u = frame_coords(y);
  int d = static_cast<int>(u.size()) - 1;
  Rat t = u[static_cast<size_t>(d)];
  if (t == 0) fail(Errc::PointOnCarrier, "H_F level is undefined on the carrier");
  Rat prod(1);
  for (int i = 0; i < d; ++i) prod *= u[static_cast<size_t>(i)];
  Rat td(1);
  for (int i = 0; i < d; ++i) td *= t;
  return prod / td;
}

bool StandardNeighborhood::contains(const ConvexDomain& dom, const PointQ& y) const {
  VecQ u = frame_coords(y);
  int d = static_cast<int>(u.size()) - 1;
  Rat t = u[static_cast<size_t>(d)];
  // Pick the representative with t >= 0 (coordinates are scale-ambiguous).
  bool flip = t < 0;
  if (flip)
    for (Rat& c : u) c = -c;
  t = u[static_cast<size_t>(d)];
  if (t == 0) return false;  // carrier points, including the flat, bound the region
  Rat prod(1);
  for (int i = 0; i < d; ++i) {
    if (u[static_cast<size_t>(i)] <= 0) return false;
    prod *= u[static_cast<size_t>(i)];
  }
  Rat td(1);
  for (int i = 0; i < d; ++i) td *= t;
  if (prod <= level_ * td) return false;
  return dom.contains(y);
}

ProjMapQ StandardNeighborhood::frame_diagonal(const VecQ& entries) const {
  assert(static_cast<int>(entries.size()) == frame_.rows - 1);
  MatQ diag = MatQ::identity(frame_.rows);
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] == 0) fail(Errc::DegenerateConfiguration, "frame diagonal entry is zero");
    diag.at(static_cast<int>(i), static_cast<int>(i)) = entries[i];
  }
  return ProjMapQ(frame_ * diag * frame_inv_);
}

StandardNeighborhood standard_neighborhood(const ConvexDomain& dom, const Flat& flat,
                                           const PointQ& x) {
  if (!dom.contains(x)) fail(Errc::MembershipFailure, "base point must be interior");
  // Positive-sheet representative: the u-coordinates of interior points are
  // then guaranteed positive (each is a scaled support-facet value).
  PointQ base = x;
  if (incidence(base, dom.chart()) < 0) base = PointQ(vec_scale(Rat(-1), base.coords));
  const int n = dom.dim() + 1;
  MatQ frame(n, n);
  for (int c = 0; c < n - 1; ++c)
    for (int r = 0; r < n; ++r) frame.at(r, c) = flat.vertices[static_cast<size_t>(c)].coords[static_cast<size_t>(r)];
  for (int r = 0; r < n; ++r) frame.at(r, n - 1) = flat.pseudo_dual.coords[static_cast<size_t>(r)];
  auto inv = inverse(frame);
  if (!inv) fail(Errc::FrameDegenerate, "flat vertices and pseudo-dual do not form a basis");

  VecQ coords = mul(*inv, base.coords);
  Rat t = coords[static_cast<size_t>(n - 1)];
  if (t == 0) fail(Errc::PointOnCarrier, "base point lies on the flat's carrier");
  if (t < 0) {
    // Orient the pseudo-dual column so the base point has t > 0.
    for (int r = 0; r < n; ++r) frame.at(r, n - 1) = -frame.at(r, n - 1);
    inv = inverse(frame);
    assert(inv);
    coords = mul(*inv, base.coords);
    t = coords[static_cast<size_t>(n - 1)];
  }
  Rat prod(1);
  for (int i = 0; i < n - 1; ++i) {
    if (coords[static_cast<size_t>(i)] <= 0)
      fail(Errc::FrameDegenerate, "base point has non-positive frame coordinate");
    prod *= coords[static_cast<size_t>(i)];
  }
  Rat td(1);
  for (int i = 0; i < n - 1; ++i) td *= t;
  return StandardNeighborhood(flat, frame, *inv, prod / td);
}

namespace {

// Coarse estimate of the Hilbert distance from x to the flat: best of a
// random scatter refined by shrinking jitter around the incumbent.
double distance_to_flat_estimate(const ConvexDomain& dom, const Flat& flat, const PointQ& x,
                                 Rng& rng) {
  const size_t k = flat.vertices.size();
  std::vector<VecD> vd(k);
  for (size_t i = 0; i < k; ++i) vd[i] = to_double(flat.vertices[i]);
  VecD xd = to_double(x);
  auto point_at = [&](const std::vector<double>& w) {
    VecD p = VecD::Zero(xd.size());
    for (size_t i = 0; i < k; ++i) p += w[i] * vd[i];
    return p;
  };
  std::vector<double> best_w(k, 1.0);
  double best = dom.hilbert_distance_d(xd, point_at(best_w));
  for (int s = 0; s < 64; ++s) {
    std::vector<double> w(k);
    for (size_t i = 0; i < k; ++i) w[i] = 0.02 + rng.next_double();
    double d = dom.hilbert_distance_d(xd, point_at(w));
    if (d < best) {
      best = d;
      best_w = w;
    }
  }
  double step = 0.5;
  for (int round = 0; round < 60; ++round) {
    std::vector<double> w = best_w;
    for (size_t i = 0; i < k; ++i)
      w[i] = std::max(1e-6, w[i] * std::exp(step * (rng.next_double() - 0.5)));
    double d = dom.hilbert_distance_d(xd, point_at(w));
    if (d < best) {
      best = d;
      best_w = w;
    }
    step *= 0.95;
  }
  return best;
}

}  // namespace

EpsilonProjectionReport epsilon_projection_check(const ConvexDomain& dom, const Flat& f,
                                                 const Flat& fprime, double epsilon, int samples,
                                                 uint64_t seed) {
  EpsilonProjectionReport rep;
  rep.seed = seed;
  rep.samples = samples;
  rep.epsilon = epsilon;
  rep.min_distance_seen = std::numeric_limits<double>::infinity();
  Rng rng(seed, 0x5e9);

  MatQ w(static_cast<int>(fprime.vertices[0].coords.size()),
         static_cast<int>(fprime.vertices.size()));
  for (int c = 0; c < w.cols; ++c)
    for (int r = 0; r < w.rows; ++r)
      w.at(r, c) = fprime.vertices[static_cast<size_t>(c)].coords[static_cast<size_t>(r)];

  for (int s = 0; s < samples; ++s) {
    VecQ acc(f.vertices[0].coords.size(), Rat(0));
    for (const PointQ& v : f.vertices) acc = vec_add(acc, vec_scale(Rat(1, 50) + rng.next_rat(), v.coords));
    PointQ x(acc);

    double dist = distance_to_flat_estimate(dom, fprime, x, rng);
    rep.min_distance_seen = std::min(rep.min_distance_seen, dist);
    if (dist >= epsilon) continue;
    ++rep.eligible;

    // Intersection of the normal line span(x, f.pseudo_dual) with the
    // carrier of F', then a barycentric sign check against F'.
    Rat ef = incidence(f.pseudo_dual, fprime.carrier);
    Rat ex = incidence(x, fprime.carrier);
    VecQ p = vec_sub(vec_scale(ef, x.coords), vec_scale(ex, f.pseudo_dual.coords));
    if (is_zero(p)) continue;
    auto mu = solve(w, p);
    if (!mu) continue;
    int pos = 0, neg = 0;
    for (const Rat& m : *mu) {
      if (m > 0) ++pos;
      if (m < 0) ++neg;
    }
    if (!(pos && neg)) ++rep.crossing;
  }
  rep.vacuous = rep.eligible == 0;
  rep.fraction = rep.vacuous ? 0.0 : static_cast<double>(rep.crossing) / rep.eligible;
  return rep;
}

}  // namespace hilbert
