#include "hilbert/projective.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace hilbert {

PointQ::PointQ(VecQ c) : coords(std::move(c)) {
  if (coords.empty() || is_zero(coords)) fail(Errc::DegenerateConfiguration, "zero vector is not a projective point");
}

HyperplaneQ::HyperplaneQ(VecQ c) : covector(std::move(c)) {
  if (covector.empty() || is_zero(covector))
    fail(Errc::DegenerateConfiguration, "zero covector is not a hyperplane");
}

ProjMapQ::ProjMapQ(MatQ m) : matrix(std::move(m)) {
  assert(matrix.rows == matrix.cols);
  auto i = inverse(matrix);
  if (!i) fail(Errc::DegenerateConfiguration, "projective map matrix is singular");
  inv = std::move(*i);
}

Rat incidence(const PointQ& p, const HyperplaneQ& h) { return dot(h.covector, p.coords); }

namespace {

VecQ normalize_coords(const VecQ& v) {
  // Divide by the largest-magnitude entry, then make the first nonzero entry
  // positive.
  int best = -1;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (best < 0 || abs(v[i]) > abs(v[best])) best = static_cast<int>(i);
  }
  assert(best >= 0);
  Rat scale = abs(v[best]);
  VecQ out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / scale;
  for (size_t i = 0; i < v.size(); ++i) {
    if (out[i] == 0) continue;
    if (out[i] < 0)
      for (Rat& x : out) x = -x;
    break;
  }
  return out;
}

}  // namespace

PointQ normalized(const PointQ& p) { return PointQ(normalize_coords(p.coords)); }
HyperplaneQ normalized(const HyperplaneQ& h) { return HyperplaneQ(normalize_coords(h.covector)); }

bool same_point(const PointQ& a, const PointQ& b) {
  if (a.coords.size() != b.coords.size()) return false;
  return normalize_coords(a.coords) == normalize_coords(b.coords);
}

bool same_hyperplane(const HyperplaneQ& a, const HyperplaneQ& b) {
  if (a.covector.size() != b.covector.size()) return false;
  return normalize_coords(a.covector) == normalize_coords(b.covector);
}

bool point_less(const PointQ& a, const PointQ& b) {
  VecQ na = normalize_coords(a.coords), nb = normalize_coords(b.coords);
  return std::lexicographical_compare(na.begin(), na.end(), nb.begin(), nb.end());
}

PointQ apply(const ProjMapQ& g, const PointQ& p) { return PointQ(mul(g.matrix, p.coords)); }

HyperplaneQ apply_dual(const ProjMapQ& g, const HyperplaneQ& h) {
  // h o g^{-1}: row covector times the inverse matrix.
  return HyperplaneQ(mul(g.inv.transposed(), h.covector));
}

ProjMapQ compose(const ProjMapQ& g, const ProjMapQ& h) {
  ProjMapQ out;
  out.matrix = g.matrix * h.matrix;
  out.inv = h.inv * g.inv;
  return out;
}

ProjMapQ inverse_map(const ProjMapQ& g) {
  ProjMapQ out;
  out.matrix = g.inv;
  out.inv = g.matrix;
  return out;
}

bool general_position(const std::vector<PointQ>& points) {
  assert(!points.empty());
  int d1 = static_cast<int>(points[0].coords.size());
  if (static_cast<int>(points.size()) > d1)
    fail(Errc::DegenerateConfiguration, "more points than the ambient dimension allows");
  std::vector<VecQ> rows;
  rows.reserve(points.size());
  for (const PointQ& p : points) rows.push_back(p.coords);
  return rank(MatQ::from_rows(rows)) == static_cast<int>(points.size());
}

namespace {

// Coordinates (alpha, beta) of each point in the rank-2 basis (u, v); the
// leftover rows double as the collinearity check.
struct LineCoords {
  Rat alpha, beta;
};

std::optional<LineCoords> line_coords(const VecQ& u, const VecQ& v, const VecQ& p, int r0, int r1) {
  Rat d = u[r0] * v[r1] - u[r1] * v[r0];
  assert(d != 0);
  Rat alpha = (p[r0] * v[r1] - p[r1] * v[r0]) / d;
  Rat beta = (u[r0] * p[r1] - u[r1] * p[r0]) / d;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != alpha * u[i] + beta * v[i]) return std::nullopt;
  return LineCoords{alpha, beta};
}

}  // namespace

Rat cross_ratio(const PointQ& z1, const PointQ& x, const PointQ& y, const PointQ& z2) {
  const VecQ& u = z1.coords;
  const VecQ& v = x.coords;
  if (same_point(z1, x) || same_point(y, z2))
    fail(Errc::DegenerateConfiguration, "cross-ratio requires z1 != x and y != z2");
  int n = static_cast<int>(u.size());
  int r0 = -1, r1 = -1;
  for (int i = 0; i < n && r1 < 0; ++i)
    for (int j = i + 1; j < n; ++j)
      if (u[i] * v[j] - u[j] * v[i] != 0) {
        r0 = i;
        r1 = j;
        break;
      }
  assert(r1 >= 0);  // z1, x independent

  auto cu = LineCoords{Rat(1), Rat(0)};
  auto cv = LineCoords{Rat(0), Rat(1)};
  auto cy = line_coords(u, v, y.coords, r0, r1);
  auto cz2 = line_coords(u, v, z2.coords, r0, r1);
  if (!cy || !cz2) fail(Errc::NotCollinear, "cross-ratio arguments are not collinear");

  // Explicit Rat return: gmpxx expression templates must not outlive their
  // operands.
  auto det2 = [](const LineCoords& a, const LineCoords& b) -> Rat {
    return Rat(a.alpha * b.beta) - Rat(b.alpha * a.beta);
  };
  // [z1,x,y,z2] = (D(y,z1) D(z2,x)) / (D(x,z1) D(z2,y)); each point's scale
  // cancels between numerator and denominator.
  Rat num = det2(*cy, cu) * det2(*cz2, cv);
  Rat den = det2(cv, cu) * det2(*cz2, *cy);
  if (den == 0) fail(Errc::DegenerateConfiguration, "cross-ratio denominator vanishes");
  return num / den;
}

AffineChartQ::AffineChartQ(HyperplaneQ h) : eta(std::move(h)) {
  const VecQ& e = eta.covector;
  int n = static_cast<int>(e.size());
  pivot = 0;
  while (pivot < n && e[pivot] == 0) ++pivot;
  assert(pivot < n);
  base_point.assign(n, Rat(0));
  base_point[pivot] = 1 / e[pivot];
  for (int j = 0; j < n; ++j) {
    if (j == pivot) continue;
    VecQ b(n, Rat(0));
    b[j] = 1;
    b[pivot] = -e[j] / e[pivot];
    basis.push_back(std::move(b));
  }
}

VecQ AffineChartQ::coords(const PointQ& p) const {
  Rat s = incidence(p, eta);
  if (s == 0) fail(Errc::PointAtInfinity, "point lies on the chart's hyperplane at infinity");
  VecQ rep = vec_scale(1 / s, p.coords);
  // basis[k] has a single 1 in its own coordinate slot, so coordinates can be
  // read off directly.
  VecQ out;
  out.reserve(basis.size());
  for (size_t k = 0, j = 0; k < basis.size(); ++k, ++j) {
    if (static_cast<int>(j) == pivot) ++j;
    out.push_back(rep[j]);
  }
  return out;
}

PointQ AffineChartQ::lift(const VecQ& chart_coords) const {
  assert(chart_coords.size() == basis.size());
  VecQ v = base_point;
  for (size_t k = 0; k < basis.size(); ++k)
    if (chart_coords[k] != 0) v = vec_add(v, vec_scale(chart_coords[k], basis[k]));
  return PointQ(v);
}

VecQ AffineChartQ::direction(const VecQ& tangent) const {
  assert(tangent.size() == basis.size());
  VecQ v(eta.covector.size(), Rat(0));
  for (size_t k = 0; k < basis.size(); ++k)
    if (tangent[k] != 0) v = vec_add(v, vec_scale(tangent[k], basis[k]));
  return v;
}

// ---- binary64 layer -------------------------------------------------------

VecD to_double(const VecQ& v) {
  VecD out(static_cast<Eigen::Index>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = to_double(v[i]);
  return out;
}

MatD to_double(const MatQ& m) {
  MatD out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out(i, j) = to_double(m.at(i, j));
  return out;
}

VecD to_double(const PointQ& p) { return to_double(p.coords); }

VecD normalized_d(const VecD& v) {
  Eigen::Index best;
  v.cwiseAbs().maxCoeff(&best);
  VecD out = v / std::abs(v[best]);
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out[i] == 0.0) continue;
    if (out[i] < 0.0) out = -out;
    break;
  }
  return out;
}

bool same_point_d(const VecD& a, const VecD& b, double tol) {
  return (normalized_d(a) - normalized_d(b)).cwiseAbs().maxCoeff() <= tol;
}

VecD apply_d(const MatD& g, const VecD& p) { return g * p; }

int rank_d(const MatD& m, double tol) {
  Eigen::JacobiSVD<MatD> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > tol * s[0]) ++r;
  return r;
}

bool general_position_d(const std::vector<VecD>& points, double tol) {
  assert(!points.empty());
  MatD m(static_cast<Eigen::Index>(points.size()), points[0].size());
  for (size_t i = 0; i < points.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = points[i];
  return rank_d(m, tol) == static_cast<int>(points.size());
}

double cross_ratio_d(const VecD& z1, const VecD& x, const VecD& y, const VecD& z2, double tol) {
  const VecD& u = z1;
  const VecD& v = x;
  int n = static_cast<int>(u.size());
  double scale = std::max({u.cwiseAbs().maxCoeff(), v.cwiseAbs().maxCoeff()});
  int r0 = -1, r1 = -1;
  double best = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d = std::abs(u[i] * v[j] - u[j] * v[i]);
      if (d > best) {
        best = d;
        r0 = i;
        r1 = j;
      }
    }
  if (best <= tol * scale * scale)
    fail(Errc::DegenerateConfiguration, "cross-ratio requires z1 != x");

  auto coords = [&](const VecD& p) {
    double d = u[r0] * v[r1] - u[r1] * v[r0];
    double alpha = (p[r0] * v[r1] - p[r1] * v[r0]) / d;
    double beta = (u[r0] * p[r1] - u[r1] * p[r0]) / d;
    double err = 0.0, mag = p.cwiseAbs().maxCoeff();
    for (int i = 0; i < n; ++i) err = std::max(err, std::abs(p[i] - alpha * u[i] - beta * v[i]));
    if (err > tol * std::max(1.0, mag)) fail(Errc::NotCollinear, "cross-ratio arguments are not collinear");
    return std::pair<double, double>(alpha, beta);
  };
  auto cy = coords(y);
  auto cz2 = coords(z2);
  std::pair<double, double> cu(1.0, 0.0), cv(0.0, 1.0);
  auto det2 = [](const std::pair<double, double>& a, const std::pair<double, double>& b) {
    return a.first * b.second - b.first * a.second;
  };
  double den = det2(cv, cu) * det2(cz2, cy);
  if (std::abs(den) == 0.0) fail(Errc::DegenerateConfiguration, "cross-ratio denominator vanishes");
  return det2(cy, cu) * det2(cz2, cv) / den;
}

}  // namespace hilbert
