#include "prsd/linalg.hpp"

#include <algorithm>

#include "prsd/errors.hpp"

namespace prsd {

namespace {

// Multiply each row by the lcm of its denominators: integer matrix with
// the same row space.
std::vector<mpz_class> to_row_scaled_integers(const Mat& m) {
  std::vector<mpz_class> z(static_cast<std::size_t>(m.rows) * m.cols);
  for (int i = 0; i < m.rows; ++i) {
    mpz_class lcm(1);
    for (int j = 0; j < m.cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              m.at(i, j).den().get_mpz_t());
    for (int j = 0; j < m.cols; ++j) {
      mpq_class v = m.at(i, j).raw() * lcm;
      z[static_cast<std::size_t>(i) * m.cols + j] = v.get_num();
    }
  }
  return z;
}

}  // namespace

int matrix_rank(const Mat& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  auto z = to_row_scaled_integers(m);
  auto at = [&](int i, int j) -> mpz_class& {
    return z[static_cast<std::size_t>(i) * m.cols + j];
  };
  mpz_class prev(1);
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i) {
      if (at(i, col) == 0) continue;
      if (piv < 0 || mpz_cmpabs(at(i, col).get_mpz_t(),
                                at(piv, col).get_mpz_t()) > 0)
        piv = i;
    }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = col; j < m.cols; ++j) std::swap(at(piv, j), at(row, j));
    for (int i = row + 1; i < m.rows; ++i) {
      for (int j = col + 1; j < m.cols; ++j) {
        mpz_class t = at(row, col) * at(i, j) - at(i, col) * at(row, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, col) = 0;
    }
    prev = at(row, col);
    ++row;
  }
  return row;
}

Rat determinant(const Mat& m) {
  if (m.rows != m.cols) throw Error("determinant of non-square matrix");
  int n = m.rows;
  if (n == 0) return Rat(1);
  // Fraction-free on a row-scaled integer copy, tracking the scaling.
  Rat scale(1);
  std::vector<mpz_class> z = to_row_scaled_integers(m);
  for (int i = 0; i < n; ++i) {
    mpz_class lcm(1);
    for (int j = 0; j < n; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).den().get_mpz_t());
    scale *= Rat(mpz_class(lcm));
  }
  auto at = [&](int i, int j) -> mpz_class& {
    return z[static_cast<std::size_t>(i) * n + j];
  };
  mpz_class prev(1);
  int sign = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      sign = -sign;
      for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(col, j));
    }
    for (int i = col + 1; i < n; ++i) {
      for (int j = col + 1; j < n; ++j) {
        mpz_class t = at(col, col) * at(i, j) - at(i, col) * at(col, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, col) = 0;
    }
    prev = at(col, col);
  }
  Rat det = Rat(mpz_class(at(n - 1, n - 1)));
  if (sign < 0) det = -det;
  return det / scale;
}

SolveResult linear_solve(const Mat& A, const std::vector<Rat>& b,
                         const std::function<Rat(int)>& free_value) {
  if (static_cast<int>(b.size()) != A.rows)
    throw Error("linear_solve: rhs size mismatch");
  const int rows = A.rows, cols = A.cols;

  // Augmented working copy; the coefficient block is scaled to integers
  // row by row (the rhs is just multiplied along and may stay rational).
  Mat w(rows, cols);
  std::vector<Rat> rhs = b;
  for (int i = 0; i < rows; ++i) {
    mpz_class lcm(1);
    for (int j = 0; j < cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), A.at(i, j).den().get_mpz_t());
    Rat s = Rat(mpz_class(lcm));
    for (int j = 0; j < cols; ++j) w.at(i, j) = A.at(i, j) * s;
    rhs[i] = rhs[i] * s;
  }

  SolveResult res;
  std::vector<int> pivot_row_of_col(cols, -1);
  Rat prev(1);
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int i = row; i < rows; ++i) {
      if (w.at(i, col).is_zero()) continue;
      if (piv < 0 || w.at(i, col).abs() > w.at(piv, col).abs()) piv = i;
    }
    if (piv < 0) continue;
    if (piv != row) {
      for (int j = 0; j < cols; ++j) std::swap(w.at(piv, j), w.at(row, j));
      std::swap(rhs[piv], rhs[row]);
    }
    for (int i = row + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        w.at(i, j) =
            (w.at(row, col) * w.at(i, j) - w.at(i, col) * w.at(row, j)) / prev;
      rhs[i] = (w.at(row, col) * rhs[i] - w.at(i, col) * rhs[row]) / prev;
      w.at(i, col) = Rat(0);
    }
    prev = w.at(row, col);
    pivot_row_of_col[col] = row;
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;

  for (int i = row; i < rows; ++i)
    if (!rhs[i].is_zero()) throw Inconsistent();

  res.solution.assign(cols, Rat(0));
  for (int j = 0; j < cols; ++j)
    if (pivot_row_of_col[j] < 0) {
      res.free_cols.push_back(j);
      res.solution[j] = free_value(j);
    }
  for (int k = static_cast<int>(res.pivot_cols.size()) - 1; k >= 0; --k) {
    int col = res.pivot_cols[k];
    int r = pivot_row_of_col[col];
    Rat acc = rhs[r];
    for (int j = col + 1; j < cols; ++j)
      if (!w.at(r, j).is_zero()) acc -= w.at(r, j) * res.solution[j];
    res.solution[col] = acc / w.at(r, col);
  }
  return res;
}

Mat inverse(const Mat& m) {
  if (m.rows != m.cols) throw Error("inverse of non-square matrix");
  const int n = m.rows;
  Mat w = m, inv = Mat::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!w.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) throw SingularJacobian();
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(w.at(piv, j), w.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Rat d = w.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      w.at(col, j) *= d;
      inv.at(col, j) *= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || w.at(i, col).is_zero()) continue;
      Rat f = w.at(i, col);
      for (int j = 0; j < n; ++j) {
        w.at(i, j) -= f * w.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::array<int, 3> signature_of_symmetric(const Mat& m) {
  const int n = m.rows;
  // Faddeev-LeVerrier: char(x) = x^n + c[n-1] x^(n-1) + ... + c[0].
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
  c[n] = Rat(1);
  Mat M(n, n);  // zero
  Mat I = Mat::identity(n);
  Mat Ak(n, n);
  for (int k = 1; k <= n; ++k) {
    // M <- A*(M + c[n-k+1] I) for k>1; M <- A for k=1
    if (k == 1) {
      Ak = m;
    } else {
      Mat t = M;
      for (int i = 0; i < n; ++i) t.at(i, i) += c[n - k + 1];
      Ak = m * t;
    }
    M = Ak;
    Rat tr(0);
    for (int i = 0; i < n; ++i) tr += Ak.at(i, i);
    c[n - k] = -(tr / Rat(k));
  }
  // char coefficients low to high: c[0..n]. Zero eigenvalues = trailing
  // zero coefficients from c[0].
  int zero = 0;
  while (zero < n && c[zero].is_zero()) ++zero;
  // Descartes on the nonzero part: with all-real roots the number of sign
  // variations equals the positive root count with multiplicity.
  int pos = 0;
  {
    int last = 0;
    for (int i = zero; i <= n; ++i) {
      int s = c[i].sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++pos;
      last = s;
    }
  }
  return {pos, n - zero - pos, zero};
}

DualMat dual_inverse(const DualMat& m) {
  const int n = m.n;
  DualMat w = m, inv(n);
  for (int i = 0; i < n; ++i) inv.at(i, i) = Dual(Rat(1));
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!w.at(i, col).val.is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) throw SingularJacobian();
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(w.at(piv, j), w.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Dual d = Dual(Rat(1)) / w.at(col, col);
    for (int j = 0; j < n; ++j) {
      w.at(col, j) *= d;
      inv.at(col, j) *= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      Dual f = w.at(i, col);
      if (f.val.is_zero() && f.eps.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        w.at(i, j) -= f * w.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace prsd
