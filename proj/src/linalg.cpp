#include "hilbert/linalg.hpp"

#include <cassert>
#include <numeric>

namespace hilbert {

MatQ MatQ::identity(int n) {
  MatQ m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatQ MatQ::from_rows(const std::vector<VecQ>& rows) {
  assert(!rows.empty());
  MatQ m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows; ++r) {
    assert(static_cast<int>(rows[r].size()) == m.cols);
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

VecQ MatQ::row(int r) const {
  VecQ v(cols);
  for (int c = 0; c < cols; ++c) v[c] = at(r, c);
  return v;
}

VecQ MatQ::col(int c) const {
  VecQ v(rows);
  for (int r = 0; r < rows; ++r) v[r] = at(r, c);
  return v;
}

MatQ MatQ::transposed() const {
  MatQ t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

MatQ operator*(const MatQ& lhs, const MatQ& rhs) {
  assert(lhs.cols == rhs.rows);
  MatQ out(lhs.rows, rhs.cols);
  for (int i = 0; i < lhs.rows; ++i)
    for (int k = 0; k < lhs.cols; ++k) {
      if (lhs.at(i, k) == 0) continue;
      for (int j = 0; j < rhs.cols; ++j) out.at(i, j) += lhs.at(i, k) * rhs.at(k, j);
    }
  return out;
}

VecQ mul(const MatQ& m, const VecQ& v) {
  assert(m.cols == static_cast<int>(v.size()));
  VecQ out(m.rows, Rat(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

bool operator==(const MatQ& lhs, const MatQ& rhs) {
  return lhs.rows == rhs.rows && lhs.cols == rhs.cols && lhs.a == rhs.a;
}

VecQ vec_add(const VecQ& x, const VecQ& y) {
  assert(x.size() == y.size());
  VecQ out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

VecQ vec_sub(const VecQ& x, const VecQ& y) {
  assert(x.size() == y.size());
  VecQ out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

VecQ vec_scale(const Rat& k, const VecQ& x) {
  VecQ out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = k * x[i];
  return out;
}

Rat dot(const VecQ& x, const VecQ& y) {
  assert(x.size() == y.size());
  Rat s(0);
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

bool is_zero(const VecQ& x) {
  for (const Rat& v : x)
    if (v != 0) return false;
  return true;
}

namespace {

// Row echelon form in place. Returns pivot columns.
std::vector<int> eliminate(MatQ& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = 1 / m.at(r, c);
    for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(MatQ m) { return static_cast<int>(eliminate(m).size()); }

Rat det(MatQ m) {
  assert(m.rows == m.cols);
  Rat d(1);
  for (int c = 0; c < m.cols; ++c) {
    int p = -1;
    for (int i = c; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != c) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Rat inv = 1 / m.at(c, c);
    for (int i = c + 1; i < m.rows; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) * inv;
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

std::optional<VecQ> solve(MatQ m, VecQ b) {
  assert(m.rows == static_cast<int>(b.size()));
  MatQ aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<int> pivots = eliminate(aug);
  for (int c : pivots)
    if (c == m.cols) return std::nullopt;  // 0 = 1 row: inconsistent
  VecQ x(m.cols, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols);
  return x;
}

std::vector<VecQ> nullspace(MatQ m) {
  std::vector<int> pivots = eliminate(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<VecQ> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    VecQ v(m.cols, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<MatQ> inverse(const MatQ& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  MatQ aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> pivots = eliminate(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
  MatQ inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

VecQ primitive_integer_scale(const VecQ& x, bool sign_first_positive) {
  mpz_class den(1);
  for (const Rat& v : x) {
    mpz_class d = v.get_den();
    den = den / gcd(den, d) * d;  // lcm
  }
  std::vector<mpz_class> ints;
  ints.reserve(x.size());
  mpz_class content(0);
  for (const Rat& v : x) {
    mpz_class n = v.get_num() * (den / v.get_den());
    content = gcd(content, n);
    ints.push_back(std::move(n));
  }
  if (content == 0) return VecQ(x.size(), Rat(0));
  int flip = 1;
  if (sign_first_positive) {
    for (const mpz_class& n : ints)
      if (n != 0) {
        if (n < 0) flip = -1;
        break;
      }
  }
  VecQ out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = Rat(flip * ints[i] / content);
  return out;
}

Inertia inertia(const MatQ& symmetric) {
  assert(symmetric.rows == symmetric.cols);
  int n = symmetric.rows;
  MatQ m = symmetric;
  MatQ basis = MatQ::identity(n);  // column k tracks the congruence basis vector

  auto add_col = [&](MatQ& mat, int dst, int src, const Rat& f) {
    for (int i = 0; i < mat.rows; ++i) mat.at(i, dst) += f * mat.at(i, src);
  };
  auto add_row = [&](MatQ& mat, int dst, int src, const Rat& f) {
    for (int j = 0; j < mat.cols; ++j) mat.at(dst, j) += f * mat.at(src, j);
  };
  auto swap_col = [&](MatQ& mat, int a, int b) {
    for (int i = 0; i < mat.rows; ++i) std::swap(mat.at(i, a), mat.at(i, b));
  };
  auto swap_row = [&](MatQ& mat, int a, int b) {
    for (int j = 0; j < mat.cols; ++j) std::swap(mat.at(a, j), mat.at(b, j));
  };

  Inertia result;
  for (int k = 0; k < n; ++k) {
    if (m.at(k, k) == 0) {
      int j = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, i) != 0) {
          j = i;
          break;
        }
      if (j >= 0) {
        swap_row(m, k, j);
        swap_col(m, k, j);
        swap_col(basis, k, j);
      } else {
        for (int i = k + 1; i < n && m.at(k, k) == 0; ++i)
          if (m.at(k, i) != 0) {
            add_row(m, k, i, Rat(1));
            add_col(m, k, i, Rat(1));
            add_col(basis, k, i, Rat(1));
          }
      }
    }
    if (m.at(k, k) == 0) continue;  // row/col k entirely zero in the trailing block
    Rat pivot = m.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (m.at(i, k) == 0) continue;
      Rat f = -m.at(i, k) / pivot;
      add_row(m, i, k, f);
      add_col(m, i, k, f);
      add_col(basis, i, k, f);
    }
  }

  for (int k = 0; k < n; ++k) {
    int s = sgn(m.at(k, k));
    if (s > 0)
      ++result.positives;
    else if (s < 0)
      ++result.negatives;
    else
      ++result.zeros;
    result.diagonal.emplace_back(s, basis.col(k));
  }
  return result;
}

}  // namespace hilbert
