#pragma once

#include <array>
#include <functional>
#include <vector>

#include "prsd/dual.hpp"
#include "prsd/rational.hpp"

namespace prsd {

/// Dense matrix of exact rationals.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Rat& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
  }

  Mat transposed() const {
    Mat m(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
      for (int k = 0; k < a.cols; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (int j = 0; j < b.cols; ++j)
          r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return r;
  }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

/// Exact rank by fraction-free (Bareiss) elimination. Rows are first
/// scaled to integers; column pivots are taken left to right, choosing
/// the remaining entry of maximal absolute value within the column.
int matrix_rank(const Mat& m);

/// Exact determinant (square), Bareiss.
Rat determinant(const Mat& m);

struct SolveResult {
  std::vector<Rat> solution;    // length = cols
  std::vector<int> pivot_cols;  // ascending
  std::vector<int> free_cols;   // ascending
  int rank = 0;
};

/// Solve A x = b exactly. Free columns receive free_value(col); pivot
/// variables are determined by back-substitution. Fraction-free
/// elimination on the coefficient block; the right-hand side is carried
/// as exact rationals (it may hold much larger values than A).
/// Throws Inconsistent when no solution exists.
SolveResult linear_solve(const Mat& A, const std::vector<Rat>& b,
                         const std::function<Rat(int)>& free_value);

/// Gauss-Jordan inverse; throws SingularJacobian when singular.
Mat inverse(const Mat& m);

/// Signature (positive, negative, zero eigenvalue counts) of a symmetric
/// matrix, exact: characteristic polynomial by Faddeev-LeVerrier, then
/// Descartes' rule (exact here since all roots are real).
std::array<int, 3> signature_of_symmetric(const Mat& m);

/// Square matrix of duals with Gauss-Jordan inverse (pivots need nonzero
/// value part). Used to push directional derivatives through frame
/// inversion.
struct DualMat {
  int n = 0;
  std::vector<Dual> a;
  explicit DualMat(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_) {}
  Dual& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Dual& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * n + j];
  }
};

DualMat dual_inverse(const DualMat& m);  // throws SingularJacobian

}  // namespace prsd
