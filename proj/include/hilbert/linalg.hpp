#pragma once

#include <optional>
#include <vector>

#include "hilbert/rational.hpp"

namespace hilbert {

// Dense exact-rational matrix. Sizes here are tiny ((d+1) <= 6 plus small
// stacks), so plain Gaussian elimination over Q is the whole story.
struct MatQ {
  int rows = 0;
  int cols = 0;
  VecQ a;  // row-major

  MatQ() = default;
  MatQ(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static MatQ identity(int n);
  static MatQ from_rows(const std::vector<VecQ>& rows);

  VecQ row(int r) const;
  VecQ col(int c) const;
  MatQ transposed() const;
};

MatQ operator*(const MatQ& lhs, const MatQ& rhs);
VecQ mul(const MatQ& m, const VecQ& v);
bool operator==(const MatQ& lhs, const MatQ& rhs);

// Vector helpers.
VecQ vec_add(const VecQ& x, const VecQ& y);
VecQ vec_sub(const VecQ& x, const VecQ& y);
VecQ vec_scale(const Rat& k, const VecQ& x);
Rat dot(const VecQ& x, const VecQ& y);
bool is_zero(const VecQ& x);

int rank(MatQ m);  // by value: elimination is destructive

Rat det(MatQ m);  // square only

// Any solution of m x = b, or nullopt when inconsistent.
std::optional<VecQ> solve(MatQ m, VecQ b);

// Basis of the right null space {x : m x = 0}.
std::vector<VecQ> nullspace(MatQ m);

std::optional<MatQ> inverse(const MatQ& m);

// Clears denominators and content: the unique integer-entry scalar multiple
// with gcd 1 whose first nonzero entry keeps the requested sign convention
// (sign_first_positive) or the sign as given.
VecQ primitive_integer_scale(const VecQ& x, bool sign_first_positive);

// Signature (positives, negatives, zeros) of a symmetric matrix via exact
// congruence diagonalization. Also reports a basis column S.e_k per diagonal
// entry, so callers can extract e.g. a vector on which the form is negative.
struct Inertia {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;
  std::vector<std::pair<int, VecQ>> diagonal;  // (sign of D_kk, k-th congruence basis vector)
};
Inertia inertia(const MatQ& symmetric);

}  // namespace hilbert
