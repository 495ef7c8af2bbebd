#include "hilbert/lp.hpp"

#include <cassert>

namespace hilbert {

LpFeasibility lp_equality_feasible(const MatQ& a, const VecQ& b) {
  const int m = a.rows;
  const int n = a.cols;
  assert(static_cast<int>(b.size()) == m);

  // Orient rows so the right-hand side is nonnegative, remembering flips for
  // the Farkas certificate.
  std::vector<int> flip(m, 1);
  MatQ tab(m, n + m + 1);  // columns: original | artificial | rhs
  for (int i = 0; i < m; ++i) {
    flip[i] = (b[i] < 0) ? -1 : 1;
    for (int j = 0; j < n; ++j) tab.at(i, j) = flip[i] * a.at(i, j);
    tab.at(i, n + i) = 1;
    tab.at(i, n + m) = flip[i] * b[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  // Objective: minimize the sum of artificials. zrow[j] = z_j - c_j.
  VecQ zrow(n + m, Rat(0));
  Rat zval(0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n + m; ++j) zrow[j] += tab.at(i, j);
    zval += tab.at(i, n + m);
  }
  for (int j = n; j < n + m; ++j) zrow[j] -= 1;

  for (;;) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (zrow[j] > 0) {  // Bland: first improving column
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best_ratio(0);
    for (int i = 0; i < m; ++i) {
      if (tab.at(i, enter) <= 0) continue;
      Rat ratio = tab.at(i, n + m) / tab.at(i, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    assert(leave >= 0);  // phase-1 objective is bounded below by 0
    Rat piv = tab.at(leave, enter);
    for (int j = 0; j <= n + m; ++j) tab.at(leave, j) /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || tab.at(i, enter) == 0) continue;
      Rat f = tab.at(i, enter);
      for (int j = 0; j <= n + m; ++j) tab.at(i, j) -= f * tab.at(leave, j);
    }
    Rat fz = zrow[enter];
    for (int j = 0; j < n + m; ++j) zrow[j] -= fz * tab.at(leave, j);
    zval -= fz * tab.at(leave, n + m);
    basis[leave] = enter;
  }

  LpFeasibility out;
  if (zval == 0) {
    out.feasible = true;
    out.solution.assign(n, Rat(0));
    for (int i = 0; i < m; ++i)
      if (basis[i] < n) out.solution[basis[i]] = tab.at(i, n + m);
  } else {
    out.feasible = false;
    // y_i = (zrow under artificial i) + 1, mapped back through row flips.
    out.farkas.assign(m, Rat(0));
    for (int i = 0; i < m; ++i) out.farkas[i] = flip[i] * (zrow[n + i] + 1);
  }
  return out;
}

LpFeasibility in_cone(const std::vector<VecQ>& generators, const VecQ& target) {
  assert(!generators.empty());
  const int dim = static_cast<int>(target.size());
  MatQ a(dim, static_cast<int>(generators.size()));
  for (int j = 0; j < a.cols; ++j) {
    assert(static_cast<int>(generators[j].size()) == dim);
    for (int i = 0; i < dim; ++i) a.at(i, j) = generators[j][i];
  }
  return lp_equality_feasible(a, target);
}

LpFeasibility in_convex_hull(const std::vector<VecQ>& points, const VecQ& target) {
  assert(!points.empty());
  const int dim = static_cast<int>(target.size());
  MatQ a(dim + 1, static_cast<int>(points.size()));
  for (int j = 0; j < a.cols; ++j) {
    for (int i = 0; i < dim; ++i) a.at(i, j) = points[j][i];
    a.at(dim, j) = 1;
  }
  VecQ b = target;
  b.push_back(Rat(1));
  return lp_equality_feasible(a, b);
}

SeparatingFunctional positive_functional(const std::vector<VecQ>& vectors) {
  assert(!vectors.empty());
  const int m = static_cast<int>(vectors.size());
  const int dim = static_cast<int>(vectors[0].size());
  // eta free (split into eta+ - eta-), slack s >= 0:  v_i . eta - s_i = 1.
  MatQ a(m, 2 * dim + m);
  VecQ b(m, Rat(1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < dim; ++j) {
      a.at(i, j) = vectors[i][j];
      a.at(i, dim + j) = -vectors[i][j];
    }
    a.at(i, 2 * dim + i) = -1;
  }
  LpFeasibility lp = lp_equality_feasible(a, b);
  SeparatingFunctional out;
  out.exists = lp.feasible;
  if (lp.feasible) {
    out.eta.assign(dim, Rat(0));
    for (int j = 0; j < dim; ++j) out.eta[j] = lp.solution[j] - lp.solution[dim + j];
  } else {
    // Farkas y: y >= 0 (from slack columns), sum y_i v_i = 0, sum y_i > 0.
    out.combination = lp.farkas;
  }
  return out;
}

}  // namespace hilbert
