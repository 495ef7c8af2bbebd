#include "hilbert/domain.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "hilbert/lp.hpp"

namespace hilbert {

std::string ValidationReport::summary() const {
  if (valid) return "valid";
  std::ostringstream os;
  for (size_t i = 0; i < issues.size(); ++i) {
    if (i) os << "; ";
    os << errc_name(issues[i].code) << ": " << issues[i].detail;
  }
  return os.str();
}

namespace {

// Enumerates the facets of the salient full-dimensional cone spanned by the
// vertex representatives: every d-subset spanning a hyperplane whose kernel
// covector is single-signed on all vertices. Exact, brute force; domains
// here are desk scale.
std::vector<HyperplaneQ> enumerate_facets(int dim, const std::vector<PointQ>& verts) {
  const int n = static_cast<int>(verts.size());
  const int k = dim;  // subset size spanning a candidate facet hyperplane
  std::set<VecQ> found;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  auto advance = [&]() {
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  if (k > n) return {};
  do {
    std::vector<VecQ> rows;
    rows.reserve(k);
    for (int i : idx) rows.push_back(verts[i].coords);
    MatQ m = MatQ::from_rows(rows);
    std::vector<VecQ> kernel = nullspace(std::move(m));
    if (kernel.size() != 1) continue;  // subset does not span a hyperplane
    VecQ h = kernel[0];
    int pos = 0, neg = 0;
    for (const PointQ& v : verts) {
      int s = sgn(dot(h, v.coords));
      if (s > 0) ++pos;
      if (s < 0) ++neg;
    }
    if (pos > 0 && neg > 0) continue;
    if (neg > 0)
      for (Rat& c : h) c = -c;
    found.insert(primitive_integer_scale(h, false));
  } while (advance());
  std::vector<HyperplaneQ> out;
  out.reserve(found.size());
  for (const VecQ& h : found) out.emplace_back(h);
  return out;
}

struct PolytopeData {
  ValidationReport report;
  std::vector<HyperplaneQ> facets;
  std::vector<std::vector<bool>> incidence;
  HyperplaneQ chart;
  PointQ center;
};

PolytopeData build_polytope(int dim, const std::vector<PointQ>& verts) {
  PolytopeData data;
  ValidationReport& rep = data.report;
  const int n = static_cast<int>(verts.size());

  if (n < dim + 1) {
    rep.issues.push_back({Errc::InvalidDomain, "a d-dimensional polytope needs at least d+1 vertices"});
    return data;
  }
  for (const PointQ& v : verts)
    if (static_cast<int>(v.coords.size()) != dim + 1) {
      rep.issues.push_back({Errc::InvalidDomain, "vertex has wrong coordinate count"});
      return data;
    }

  {
    std::vector<VecQ> rows;
    for (const PointQ& v : verts) rows.push_back(v.coords);
    if (rank(MatQ::from_rows(rows)) != dim + 1) {
      rep.issues.push_back({Errc::InvalidDomain, "vertex cone is not full-dimensional"});
      return data;
    }
  }

  // Proper convexity of the cone the given representatives span: a covector
  // strictly positive on every representative. The Farkas certificate of
  // failure is a nonnegative combination summing to zero, which yields a
  // whole line inside the closure.
  {
    std::vector<VecQ> vecs;
    for (const PointQ& v : verts) vecs.push_back(v.coords);
    SeparatingFunctional sep = positive_functional(vecs);
    if (!sep.exists) {
      rep.issues.push_back(
          {Errc::NotProperlyConvex, "no covector is positive on all vertex representatives"});
      int j = -1, k = -1;
      for (int i = 0; i < n; ++i)
        if (sep.combination[i] > 0) {
          j = i;
          break;
        }
      if (j >= 0) {
        for (int i = 0; i < n && k < 0; ++i) {
          if (i == j) continue;
          if (!general_position({verts[j], verts[i]})) continue;
          k = i;
        }
      }
      if (j >= 0 && k >= 0) rep.witness_line = std::make_pair(verts[j], verts[k]);
      return data;
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (same_point(verts[i], verts[j])) {
        rep.issues.push_back({Errc::InvalidDomain,
                              "vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                  " coincide projectively"});
        return data;
      }

  // Irredundancy: no representative is a nonnegative combination of the rest.
  for (int i = 0; i < n; ++i) {
    std::vector<VecQ> others;
    for (int j = 0; j < n; ++j)
      if (j != i) others.push_back(verts[j].coords);
    if (in_cone(others, verts[i].coords).feasible) {
      rep.issues.push_back(
          {Errc::InvalidDomain, "vertex " + std::to_string(i) + " is redundant (inside the hull)"});
      return data;
    }
  }

  data.facets = enumerate_facets(dim, verts);
  if (static_cast<int>(data.facets.size()) < dim + 1) {
    rep.issues.push_back({Errc::InvalidDomain, "facet enumeration found too few facets"});
    return data;
  }

  data.incidence.assign(n, std::vector<bool>(data.facets.size(), false));
  for (int i = 0; i < n; ++i)
    for (size_t j = 0; j < data.facets.size(); ++j)
      data.incidence[i][j] = (dot(data.facets[j].covector, verts[i].coords) == 0);

  // Canonical chart: the sum of the facet covectors is strictly positive on
  // every vertex (each vertex misses at least one facet).
  VecQ chart(dim + 1, Rat(0));
  for (const HyperplaneQ& h : data.facets) chart = vec_add(chart, h.covector);
  data.chart = HyperplaneQ(primitive_integer_scale(chart, false));
  VecQ center(dim + 1, Rat(0));
  for (const PointQ& v : verts) center = vec_add(center, v.coords);
  data.center = PointQ(center);
  for (const PointQ& v : verts) assert(dot(data.chart.covector, v.coords) > 0);

  rep.valid = true;
  rep.chart = data.chart;
  return data;
}

struct EllipsoidData {
  ValidationReport report;
  MatQ form;  // canonical: primitive integer entries, signature (d,1)
  HyperplaneQ chart;
  PointQ center;
};

EllipsoidData build_ellipsoid(int dim, const MatQ& form_in) {
  EllipsoidData data;
  ValidationReport& rep = data.report;
  if (form_in.rows != dim + 1 || form_in.cols != dim + 1) {
    rep.issues.push_back({Errc::InvalidDomain, "form has wrong dimensions"});
    return data;
  }
  for (int i = 0; i < form_in.rows; ++i)
    for (int j = i + 1; j < form_in.cols; ++j)
      if (form_in.at(i, j) != form_in.at(j, i)) {
        rep.issues.push_back({Errc::InvalidDomain, "form is not symmetric"});
        return data;
      }

  MatQ form(form_in.rows, form_in.cols);
  {
    VecQ flat = form_in.a;
    VecQ prim = primitive_integer_scale(flat, false);
    form.a = prim;
  }
  Inertia in = inertia(form);
  if (in.zeros > 0) {
    rep.issues.push_back({Errc::InvalidDomain, "form is degenerate"});
    return data;
  }
  if (in.negatives == dim && in.positives == 1) {
    for (Rat& c : form.a) c = -c;
    in = inertia(form);
  }
  if (!(in.positives == dim && in.negatives == 1)) {
    rep.issues.push_back({Errc::NotProperlyConvex, "form does not have signature (d,1)"});
    return data;
  }
  data.form = form;
  for (const auto& [s, v] : in.diagonal)
    if (s < 0) data.center = PointQ(v);
  // Polar hyperplane of the interior point: misses the closed ellipsoid.
  VecQ eta = vec_scale(Rat(-1), mul(form, data.center.coords));
  if (dot(eta, data.center.coords) < 0) eta = vec_scale(Rat(-1), eta);
  data.chart = HyperplaneQ(primitive_integer_scale(eta, false));
  if (dot(data.chart.covector, data.center.coords) < 0)
    data.chart = HyperplaneQ(vec_scale(Rat(-1), data.chart.covector));

  rep.valid = true;
  rep.chart = data.chart;
  return data;
}

[[noreturn]] void throw_report(const ValidationReport& rep) {
  Errc code = Errc::InvalidDomain;
  for (const ValidationIssue& issue : rep.issues)
    if (issue.code == Errc::NotProperlyConvex) code = Errc::NotProperlyConvex;
  throw Error(code, rep.summary());
}

}  // namespace

ConvexDomain ConvexDomain::polytope(int dim, std::vector<PointQ> vertices) {
  PolytopeData data = build_polytope(dim, vertices);
  if (!data.report.valid) throw_report(data.report);
  ConvexDomain dom;
  dom.kind_ = Kind::Polytope;
  dom.dim_ = dim;
  dom.vertices_ = std::move(vertices);
  dom.facets_ = std::move(data.facets);
  dom.incidence_ = std::move(data.incidence);
  dom.chart_ = data.chart;
  dom.center_ = data.center;
  dom.affine_chart_ = std::make_shared<AffineChartQ>(dom.chart_);
  dom.facets_d_.resize(static_cast<Eigen::Index>(dom.facets_.size()), dim + 1);
  for (size_t j = 0; j < dom.facets_.size(); ++j)
    dom.facets_d_.row(static_cast<Eigen::Index>(j)) = to_double(dom.facets_[j].covector).transpose();
  dom.vertices_d_.resize(static_cast<Eigen::Index>(dom.vertices_.size()), dim + 1);
  for (size_t i = 0; i < dom.vertices_.size(); ++i)
    dom.vertices_d_.row(static_cast<Eigen::Index>(i)) = to_double(dom.vertices_[i].coords).transpose();
  return dom;
}

ConvexDomain ConvexDomain::ellipsoid(int dim, MatQ form) {
  EllipsoidData data = build_ellipsoid(dim, form);
  if (!data.report.valid) throw_report(data.report);
  ConvexDomain dom;
  dom.kind_ = Kind::Ellipsoid;
  dom.dim_ = dim;
  dom.form_ = std::move(data.form);
  dom.chart_ = data.chart;
  dom.center_ = data.center;
  dom.affine_chart_ = std::make_shared<AffineChartQ>(dom.chart_);
  dom.form_d_ = to_double(dom.form_);
  return dom;
}

ValidationReport ConvexDomain::validate_polytope_data(int dim, const std::vector<PointQ>& vertices) {
  return build_polytope(dim, vertices).report;
}

ValidationReport ConvexDomain::validate_ellipsoid_data(int dim, const MatQ& form) {
  return build_ellipsoid(dim, form).report;
}

ValidationReport ConvexDomain::validate() const {
  if (kind_ == Kind::Polytope) return build_polytope(dim_, vertices_).report;
  return build_ellipsoid(dim_, form_).report;
}

bool ConvexDomain::vertex_on_facet(int vertex, int facet) const {
  return incidence_[static_cast<size_t>(vertex)][static_cast<size_t>(facet)];
}

VecQ ConvexDomain::facet_values(const PointQ& p) const {
  assert(kind_ == Kind::Polytope);
  Rat s = incidence(p, chart_);
  if (s == 0) {
    VecQ out;
    out.reserve(facets_.size());
    for (const HyperplaneQ& h : facets_) out.push_back(dot(h.covector, p.coords));
    return out;
  }
  VecQ rep = vec_scale(1 / s, p.coords);
  VecQ out;
  out.reserve(facets_.size());
  for (const HyperplaneQ& h : facets_) out.push_back(dot(h.covector, rep));
  return out;
}

PointLocation ConvexDomain::classify_point(const PointQ& p) const {
  if (static_cast<int>(p.coords.size()) != dim_ + 1)
    fail(Errc::DegenerateConfiguration, "point has wrong coordinate count");
  if (kind_ == Kind::Ellipsoid) {
    Rat q = dot(p.coords, mul(form_, p.coords));
    if (q < 0) return PointLocation::Interior;
    if (q == 0) return PointLocation::Boundary;
    return PointLocation::Outside;
  }
  int pos = 0, neg = 0, zero = 0;
  for (const HyperplaneQ& h : facets_) {
    int s = sgn(dot(h.covector, p.coords));
    if (s > 0) ++pos;
    else if (s < 0) ++neg;
    else ++zero;
  }
  if (pos > 0 && neg > 0) return PointLocation::Outside;
  if (zero == 0) return PointLocation::Interior;
  return PointLocation::Boundary;
}

bool ConvexDomain::contains_d(const VecD& p, double tol) const {
  VecD pn = normalized_d(p);
  if (kind_ == Kind::Ellipsoid) return pn.dot(form_d_ * pn) < -tol;
  VecD vals = facets_d_ * pn;
  return (vals.array() > tol).all() || (vals.array() < -tol).all();
}

namespace {

struct Segment1D {
  Rat t1, t2;
  int facet1 = -1, facet2 = -1;
};

// Feasible parameter window of the line rep_x + t (rep_y - rep_x) against the
// facet inequalities: a one-dimensional linear program solved by interval
// intersection.
Segment1D clip_to_facets(const std::vector<HyperplaneQ>& facets, const VecQ& x, const VecQ& dir) {
  Segment1D seg;
  bool have_lo = false, have_hi = false;
  for (size_t j = 0; j < facets.size(); ++j) {
    Rat a = dot(facets[j].covector, x);
    Rat b = dot(facets[j].covector, dir);
    if (b == 0) continue;  // constraint inactive along the line (a > 0 for interior x)
    Rat t = -a / b;
    if (b > 0) {
      if (!have_lo || t > seg.t1) {
        seg.t1 = t;
        seg.facet1 = static_cast<int>(j);
        have_lo = true;
      }
    } else {
      if (!have_hi || t < seg.t2) {
        seg.t2 = t;
        seg.facet2 = static_cast<int>(j);
        have_hi = true;
      }
    }
  }
  assert(have_lo && have_hi);  // properly convex: bounded in the chart
  return seg;
}

}  // namespace

BoundaryPairQ ConvexDomain::boundary_intersections_exact(const PointQ& x, const PointQ& y) const {
  assert(kind_ == Kind::Polytope);
  if (same_point(x, y)) fail(Errc::CoincidentPoints, "boundary intersection needs two distinct points");
  if (!contains(x) || !contains(y))
    fail(Errc::MembershipFailure, "boundary intersection requires interior points");
  VecQ rx = vec_scale(1 / incidence(x, chart_), x.coords);
  VecQ ry = vec_scale(1 / incidence(y, chart_), y.coords);
  VecQ dir = vec_sub(ry, rx);
  Segment1D seg = clip_to_facets(facets_, rx, dir);
  BoundaryPairQ out;
  out.t1 = seg.t1;
  out.t2 = seg.t2;
  out.facet1 = seg.facet1;
  out.facet2 = seg.facet2;
  out.z1 = PointQ(vec_add(rx, vec_scale(seg.t1, dir)));
  out.z2 = PointQ(vec_add(rx, vec_scale(seg.t2, dir)));
  return out;
}

BoundaryPair ConvexDomain::boundary_intersections(const PointQ& x, const PointQ& y) const {
  if (kind_ == Kind::Polytope) {
    BoundaryPairQ e = boundary_intersections_exact(x, y);
    BoundaryPair out;
    out.z1 = to_double(e.z1.coords);
    out.z2 = to_double(e.z2.coords);
    out.t1 = to_double(e.t1);
    out.t2 = to_double(e.t2);
    out.facet1 = e.facet1;
    out.facet2 = e.facet2;
    return out;
  }
  if (same_point(x, y)) fail(Errc::CoincidentPoints, "boundary intersection needs two distinct points");
  if (!contains(x) || !contains(y))
    fail(Errc::MembershipFailure, "boundary intersection requires interior points");
  VecD rx = to_double(x.coords) / to_double(incidence(x, chart_));
  VecD ry = to_double(y.coords) / to_double(incidence(y, chart_));
  VecD dir = ry - rx;
  double qa = dir.dot(form_d_ * dir);
  double qb = rx.dot(form_d_ * dir);
  double qc = rx.dot(form_d_ * rx);
  assert(qa > 0);  // chart directions are spacelike for a (d,1) form
  double disc = qb * qb - qa * qc;
  assert(disc > 0);
  double root = std::sqrt(disc);
  BoundaryPair out;
  out.t1 = (-qb - root) / qa;
  out.t2 = (-qb + root) / qa;
  out.z1 = rx + out.t1 * dir;
  out.z2 = rx + out.t2 * dir;
  return out;
}

namespace {

double log_cross_ratio_from_params(double t1, double t2) {
  // [z1, x, y, z2] with t_x = 0, t_y = 1: ((1 - t1) t2) / ((-t1)(t2 - 1)).
  return std::log(((1.0 - t1) * t2) / ((-t1) * (t2 - 1.0)));
}

}  // namespace

double ConvexDomain::hilbert_distance(const PointQ& x, const PointQ& y) const {
  if (same_point(x, y)) return 0.0;
  if (kind_ == Kind::Polytope) {
    BoundaryPairQ e = boundary_intersections_exact(x, y);
    Rat cr = ((1 - e.t1) * e.t2) / ((-e.t1) * (e.t2 - 1));
    return 0.5 * std::log(to_double(cr));
  }
  BoundaryPair b = boundary_intersections(x, y);
  return 0.5 * log_cross_ratio_from_params(b.t1, b.t2);
}

double ConvexDomain::hilbert_distance_d(const VecD& x, const VecD& y) const {
  if (same_point_d(x, y, 1e-14)) return 0.0;
  VecD cx, cy;
  VecD eta = to_double(chart_.covector);
  cx = x / eta.dot(x);
  cy = y / eta.dot(y);
  VecD dir = cy - cx;
  double t1 = 0, t2 = 0;
  if (kind_ == Kind::Polytope) {
    bool have_lo = false, have_hi = false;
    for (Eigen::Index j = 0; j < facets_d_.rows(); ++j) {
      double a = facets_d_.row(j).dot(cx);
      double b = facets_d_.row(j).dot(dir);
      if (b == 0.0) continue;
      double t = -a / b;
      if (b > 0) {
        if (!have_lo || t > t1) { t1 = t; have_lo = true; }
      } else {
        if (!have_hi || t < t2) { t2 = t; have_hi = true; }
      }
    }
    assert(have_lo && have_hi);
  } else {
    double qa = dir.dot(form_d_ * dir);
    double qb = cx.dot(form_d_ * dir);
    double qc = cx.dot(form_d_ * cx);
    double disc = qb * qb - qa * qc;
    assert(disc > 0 && qa > 0);
    double root = std::sqrt(disc);
    t1 = (-qb - root) / qa;
    t2 = (-qb + root) / qa;
  }
  return 0.5 * log_cross_ratio_from_params(t1, t2);
}

double ConvexDomain::finsler_norm(const PointQ& x, const VecQ& v) const {
  if (static_cast<int>(v.size()) != dim_)
    fail(Errc::DegenerateConfiguration, "tangent vector has wrong dimension");
  if (is_zero(v)) fail(Errc::ZeroVector, "Finsler norm of the zero vector");
  if (!contains(x)) fail(Errc::MembershipFailure, "Finsler norm needs an interior base point");
  VecQ rx = vec_scale(1 / incidence(x, chart_), x.coords);
  VecQ dir = affine_chart_->direction(v);
  if (kind_ == Kind::Polytope) {
    Segment1D seg = clip_to_facets(facets_, rx, dir);
    // t2 > 0 is the forward reach, -t1 > 0 the backward reach.
    return 0.5 * (to_double(1 / seg.t2) + to_double(-1 / seg.t1));
  }
  VecD cx = to_double(rx);
  VecD cd = to_double(dir);
  double qa = cd.dot(form_d_ * cd);
  double qb = cx.dot(form_d_ * cd);
  double qc = cx.dot(form_d_ * cx);
  double disc = qb * qb - qa * qc;
  assert(disc > 0 && qa > 0);
  double root = std::sqrt(disc);
  double tplus = (-qb + root) / qa;
  double tminus = (qb + root) / qa;
  return 0.5 * (1.0 / tplus + 1.0 / tminus);
}

ConvexDomain ConvexDomain::dual() const {
  if (kind_ == Kind::Ellipsoid) {
    auto inv = inverse(form_);
    assert(inv);
    MatQ f = *inv;
    f.a = primitive_integer_scale(f.a, false);
    return ConvexDomain::ellipsoid(dim_, f);
  }
  // Facet covectors, scaled so the canonical interior point evaluates to 1,
  // span the dual vertex cone.
  std::vector<PointQ> dual_verts;
  dual_verts.reserve(facets_.size());
  for (const HyperplaneQ& h : facets_) {
    Rat s = dot(h.covector, center_.coords);
    assert(s > 0);
    dual_verts.emplace_back(vec_scale(1 / s, h.covector));
  }
  return ConvexDomain::polytope(dim_, std::move(dual_verts));
}

PointQ ConvexDomain::sample_interior(Rng& rng, const Rat& margin) const {
  if (kind_ == Kind::Polytope) {
    VecQ acc(dim_ + 1, Rat(0));
    for (const PointQ& v : vertices_) {
      Rat lambda = margin + rng.next_rat();
      acc = vec_add(acc, vec_scale(lambda / incidence(v, chart_), v.coords));
    }
    PointQ p(acc);
    assert(contains(p));
    return p;
  }
  // Step from the center along a rational direction, staying a fixed
  // fraction inside the boundary; the membership recheck is exact.
  VecQ c = vec_scale(1 / incidence(center_, chart_), center_.coords);
  for (;;) {
    VecQ tangent(dim_);
    bool nonzero = false;
    for (int i = 0; i < dim_; ++i) {
      tangent[i] = rng.next_rat() - Rat(1, 2);
      if (tangent[i] != 0) nonzero = true;
    }
    if (!nonzero) continue;
    VecQ dir = affine_chart_->direction(tangent);
    VecD cd = to_double(dir), cc = to_double(c);
    double qa = cd.dot(form_d_ * cd);
    double qb = cc.dot(form_d_ * cd);
    double qc = cc.dot(form_d_ * cc);
    double root = std::sqrt(qb * qb - qa * qc);
    double tplus = (-qb + root) / qa;
    double frac = (0.9 - to_double(margin)) * rng.next_double();
    Rat t(static_cast<long>(std::floor(tplus * frac * 1048576.0)), 1048576L);
    t.canonicalize();
    PointQ p(vec_add(c, vec_scale(t, dir)));
    if (contains(p)) return p;
  }
}

}  // namespace hilbert
