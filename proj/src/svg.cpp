#include "hilbert/svg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hilbert/lp.hpp"

namespace hilbert {

namespace {

// Interior point of the domain inside span(a,b,c), exact. Polytopes run a
// small LP (facet values >= 1); ellipsoids take a negative direction of the
// restricted form.
PointQ interior_point_in_plane(const ConvexDomain& dom, const std::vector<PointQ>& plane) {
  if (dom.is_polytope()) {
    const int m = static_cast<int>(dom.facets().size());
    MatQ hp(m, 3);
    for (int j = 0; j < m; ++j)
      for (int c = 0; c < 3; ++c)
        hp.at(j, c) = dot(dom.facets()[static_cast<size_t>(j)].covector, plane[static_cast<size_t>(c)].coords);
    // coefficients free: split positive/negative parts, slack per facet.
    MatQ a(m, 6 + m);
    VecQ b(m, Rat(1));
    for (int j = 0; j < m; ++j) {
      for (int c = 0; c < 3; ++c) {
        a.at(j, c) = hp.at(j, c);
        a.at(j, 3 + c) = -hp.at(j, c);
      }
      a.at(j, 6 + j) = -1;
    }
    LpFeasibility lp = lp_equality_feasible(a, b);
    if (!lp.feasible) fail(Errc::PlaneMissesDomain, "the plane does not meet the domain");
    VecQ p(plane[0].coords.size(), Rat(0));
    for (int c = 0; c < 3; ++c) {
      Rat coeff = lp.solution[static_cast<size_t>(c)] - lp.solution[static_cast<size_t>(3 + c)];
      p = vec_add(p, vec_scale(coeff, plane[static_cast<size_t>(c)].coords));
    }
    return PointQ(p);
  }
  // Restrict the form to the span and look for a negative direction.
  MatQ restricted(3, 3);
  for (int i = 0; i < 3; ++i) {
    VecQ qi = mul(dom.form(), plane[static_cast<size_t>(i)].coords);
    for (int j = 0; j < 3; ++j) restricted.at(i, j) = dot(qi, plane[static_cast<size_t>(j)].coords);
  }
  Inertia in = inertia(restricted);
  for (const auto& [s, v] : in.diagonal) {
    if (s >= 0) continue;
    VecQ p(plane[0].coords.size(), Rat(0));
    for (int c = 0; c < 3; ++c) p = vec_add(p, vec_scale(v[static_cast<size_t>(c)], plane[static_cast<size_t>(c)].coords));
    return PointQ(p);
  }
  fail(Errc::PlaneMissesDomain, "the plane does not meet the ellipsoid");
}

// Forward reach to the boundary from chart point x along dir (both binary64).
double boundary_reach(const ConvexDomain& dom, const VecD& x, const VecD& dir) {
  if (dom.is_polytope()) {
    double best = std::numeric_limits<double>::infinity();
    const MatD& f = dom.facet_matrix_d();
    for (Eigen::Index j = 0; j < f.rows(); ++j) {
      double a = f.row(j).dot(x);
      double b = f.row(j).dot(dir);
      if (b < 0) best = std::min(best, -a / b);
    }
    assert(std::isfinite(best));
    return best;
  }
  double qa = dir.dot(dom.form_d() * dir);
  double qb = x.dot(dom.form_d() * dir);
  double qc = x.dot(dom.form_d() * x);
  double disc = qb * qb - qa * qc;
  assert(disc > 0 && qa > 0);
  return (-qb + std::sqrt(disc)) / qa;
}

}  // namespace

SliceFigure slice_domain(const ConvexDomain& dom, const std::vector<PointQ>& plane_points,
                         int samples, const Flat* flat, const PointQ* normal_base) {
  if (plane_points.size() != 3 || !general_position(plane_points))
    fail(Errc::DegenerateConfiguration, "a slice plane needs three independent points");
  PointQ p = interior_point_in_plane(dom, plane_points);

  const HyperplaneQ& eta = dom.chart();
  Rat s = incidence(p, eta);
  assert(s != 0);
  VecQ pc = vec_scale(1 / s, p.coords);

  // Two chart directions spanning plane ^ ker(eta).
  MatQ cond(1, 3);
  for (int c = 0; c < 3; ++c)
    cond.at(0, c) = dot(eta.covector, plane_points[static_cast<size_t>(c)].coords);
  std::vector<VecQ> null = nullspace(cond);
  assert(null.size() == 2);
  auto span_vec = [&](const VecQ& coeffs) {
    VecQ v(pc.size(), Rat(0));
    for (int c = 0; c < 3; ++c) v = vec_add(v, vec_scale(coeffs[static_cast<size_t>(c)], plane_points[static_cast<size_t>(c)].coords));
    return v;
  };
  VecD w1 = to_double(span_vec(null[0]));
  VecD w2 = to_double(span_vec(null[1]));
  // Orthonormalize for angle-uniform rays.
  w1.normalize();
  w2 -= w1.dot(w2) * w1;
  w2.normalize();
  VecD origin = to_double(pc);

  SliceFigure fig;
  const double two_pi = 6.283185307179586;
  for (int k = 0; k < samples; ++k) {
    double theta = two_pi * k / samples;
    VecD dir = std::cos(theta) * w1 + std::sin(theta) * w2;
    double t = boundary_reach(dom, origin, dir);
    fig.boundary.emplace_back(t * std::cos(theta), t * std::sin(theta));
  }

  // Plane coordinates of an ambient chart point (projection onto the w1/w2
  // frame through the origin).
  auto plane_xy = [&](const VecD& chart_point) {
    VecD dlt = chart_point - origin;
    return std::pair<double, double>(w1.dot(dlt), w2.dot(dlt));
  };

  if (flat) {
    VecD eta_f = to_double(flat->carrier.covector);
    double c0 = eta_f.dot(origin), c1 = eta_f.dot(w1), c2 = eta_f.dot(w2);
    double nrm = std::hypot(c1, c2);
    if (nrm < 1e-13) {
      // The slice plane lies inside the carrier: the flat meets it in a 2-D
      // region; draw the simplex outline.
      for (const PointQ& v : flat->vertices) {
        VecD vd = to_double(v);
        VecD etad = to_double(eta.covector);
        fig.flat_segment.push_back(plane_xy(vd / etad.dot(vd)));
      }
      if (!fig.flat_segment.empty()) fig.flat_segment.push_back(fig.flat_segment.front());
    } else {
      // Chord: the carrier cuts the plane in a line; clip it to the flat by
      // barycentric signs.
      double x0 = -c0 * c1 / (nrm * nrm), y0 = -c0 * c2 / (nrm * nrm);
      double dx = -c2 / nrm, dy = c1 / nrm;
      MatD w(static_cast<Eigen::Index>(origin.size()), static_cast<Eigen::Index>(flat->vertices.size()));
      for (size_t c = 0; c < flat->vertices.size(); ++c) w.col(static_cast<Eigen::Index>(c)) = to_double(flat->vertices[c]);
      auto bary = [&](double u) {
        VecD pt = origin + (x0 + u * dx) * w1 + (y0 + u * dy) * w2;
        return VecD(w.colPivHouseholderQr().solve(pt));
      };
      VecD m0 = bary(0.0), m1 = bary(1.0);
      double lo = -1e18, hi = 1e18;
      bool empty = false;
      for (Eigen::Index i = 0; i < m0.size(); ++i) {
        double a = m0[i], b = m1[i] - m0[i];
        if (std::abs(b) < 1e-15) {
          if (a < 0) empty = true;
          continue;
        }
        double r = -a / b;
        if (b > 0)
          lo = std::max(lo, r);
        else
          hi = std::min(hi, r);
      }
      if (!empty && lo < hi) {
        fig.flat_segment.emplace_back(x0 + lo * dx, y0 + lo * dy);
        fig.flat_segment.emplace_back(x0 + hi * dx, y0 + hi * dy);
      }
    }
  }

  if (normal_base && flat) {
    // Drawable when the pseudo-dual lies in the slice plane.
    std::vector<PointQ> four = plane_points;
    four.push_back(flat->pseudo_dual);
    std::vector<VecQ> rows;
    for (const PointQ& q : four) rows.push_back(q.coords);
    if (rank(MatQ::from_rows(rows)) == 3) {
      Rat sx = incidence(*normal_base, eta);
      if (sx != 0) {
        VecD xb = to_double(vec_scale(1 / sx, normal_base->coords));
        VecD fd = to_double(flat->pseudo_dual.coords);
        VecD etad = to_double(eta.covector);
        VecD dir;
        if (std::abs(etad.dot(fd)) > 1e-13)
          dir = fd / etad.dot(fd) - xb;
        else
          dir = fd;
        if (dir.norm() > 1e-13) {
          dir.normalize();
          double tp = boundary_reach(dom, xb, dir);
          double tm = boundary_reach(dom, xb, VecD(-dir));
          fig.normal_segment.push_back(plane_xy(xb + tp * dir));
          fig.normal_segment.push_back(plane_xy(xb - tm * dir));
        }
      }
    }
  }
  return fig;
}

namespace {

std::string fmt(double v, const char* spec = "%.4f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v + 0.0);  // normalize -0
  return buf;
}

void emit_polyline(std::ostringstream& os, const std::vector<std::pair<double, double>>& pts,
                   const char* color, double ox, double oy, double scale, double height) {
  if (pts.empty()) return;
  os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) os << " ";
    os << fmt((pts[i].first - ox) * scale, "%.2f") << ","
       << fmt(height - (pts[i].second - oy) * scale, "%.2f");
  }
  os << "\"/>\n";
}

}  // namespace

std::string slice_to_svg(const SliceFigure& fig) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  auto grow = [&](const std::vector<std::pair<double, double>>& pts) {
    for (const auto& [x, y] : pts) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  };
  grow(fig.boundary);
  grow(fig.flat_segment);
  grow(fig.normal_segment);
  if (fig.boundary.empty()) {
    xmin = ymin = 0;
    xmax = ymax = 1;
  }
  double margin = 0.05 * std::max(xmax - xmin, ymax - ymin);
  xmin -= margin;
  xmax += margin;
  ymin -= margin;
  ymax += margin;
  double width = 600.0;
  double scale = width / (xmax - xmin);
  double height = (ymax - ymin) * scale;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width, "%.0f")
     << "\" height=\"" << fmt(height, "%.2f") << "\" viewBox=\"0 0 " << fmt(width, "%.0f") << " "
     << fmt(height, "%.2f") << "\">\n";
  std::vector<std::pair<double, double>> closed = fig.boundary;
  if (!closed.empty()) closed.push_back(closed.front());
  emit_polyline(os, closed, "#222222", xmin, ymin, scale, height);
  emit_polyline(os, fig.flat_segment, "#c0392b", xmin, ymin, scale, height);
  emit_polyline(os, fig.normal_segment, "#2980b9", xmin, ymin, scale, height);
  os << "</svg>\n";
  return os.str();
}

std::string slice_to_csv(const SliceFigure& fig) {
  std::ostringstream os;
  os << "part,x,y\n";
  auto rows = [&](const char* part, const std::vector<std::pair<double, double>>& pts) {
    for (const auto& [x, y] : pts) os << part << "," << fmt(x, "%.12g") << "," << fmt(y, "%.12g") << "\n";
  };
  rows("boundary", fig.boundary);
  rows("flat", fig.flat_segment);
  rows("normal", fig.normal_segment);
  return os.str();
}

}  // namespace hilbert
