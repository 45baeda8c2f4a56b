#include "spsolve/linalg.hpp"

#include "spsolve/errors.hpp"

#include <vector>

namespace spsolve {

namespace {

using IMat = std::vector<std::vector<Integer>>;

// clears denominators row by row; the determinant picks up 1/prod(scales)
IMat clear_denominators(const RatMat& m, Integer& scale) {
  IMat im(static_cast<std::size_t>(m.rows()));
  scale = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Integer lcm = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Integer& d = m(i, j).get_den();
      lcm = lcm / gcd(lcm, d) * d;
    }
    scale *= lcm;
    auto& row = im[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      Rational v = m(i, j) * Rational(lcm);
      row[static_cast<std::size_t>(j)] = v.get_num();
    }
  }
  return im;
}

}  // namespace

Rational exact_determinant(const RatMat& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  std::size_t n = static_cast<std::size_t>(m.rows());
  if (n == 0) return 1;
  Integer scale;
  IMat a = clear_denominators(m, scale);

  Integer denom = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        if (k > 0) a[i][j] /= denom;
      }
    denom = a[k][k];
  }
  Rational det(sign > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]), scale);
  det.canonicalize();
  return det;
}

RatMat solve_exact(const RatMat& a, const RatMat& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw std::invalid_argument("solve_exact: dimension mismatch");
  Eigen::Index n = a.rows(), w = b.cols();
  RatMat m(n, n + w);
  m << a, b;
  // plain Gauss-Jordan with partial (first-nonzero) pivoting
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = row;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) throw SingularM11("singular system in solve_exact");
    if (piv != row) m.row(piv).swap(m.row(row));
    Rational inv = 1 / m(row, col);
    for (Eigen::Index j = col; j < n + w; ++j) m(row, j) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (Eigen::Index j = col; j < n + w; ++j) m(r, j) -= f * m(row, j);
    }
    ++row;
  }
  return m.rightCols(w);
}

std::size_t exact_rank(RatMat m) {
  Eigen::Index rows = m.rows(), cols = m.cols(), row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = row;
    while (piv < rows && m(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      if (m(r, col) == 0) continue;
      Rational f = m(r, col) / m(row, col);
      for (Eigen::Index j = col; j < cols; ++j) m(r, j) -= f * m(row, j);
    }
    ++row;
  }
  return static_cast<std::size_t>(row);
}

EchelonResult echelon_no_pivoting(RatMat m, bool reduced) {
  EchelonResult res;
  Eigen::Index rows = m.rows(), cols = m.cols();
  // pivot_row_of[col] = echelon row owning that pivot column, or -1
  std::vector<Eigen::Index> pivot_row_of(static_cast<std::size_t>(cols), -1);
  std::vector<Eigen::Index> pivot_rows;  // in discovery (row) order

  for (Eigen::Index r = 0; r < rows; ++r) {
    // reduce row r by every pivot already found, left to right
    for (Eigen::Index col = 0; col < cols; ++col) {
      if (m(r, col) == 0) continue;
      Eigen::Index pr = pivot_row_of[static_cast<std::size_t>(col)];
      if (pr < 0 || pr == r) continue;
      Rational f = m(r, col) / m(pr, col);
      for (Eigen::Index j = col; j < cols; ++j) m(r, j) -= f * m(pr, j);
    }
    Eigen::Index lead = -1;
    for (Eigen::Index col = 0; col < cols; ++col)
      if (m(r, col) != 0) {
        lead = col;
        break;
      }
    if (lead < 0) {
      res.zero_rows.push_back(static_cast<std::size_t>(r));
    } else {
      pivot_row_of[static_cast<std::size_t>(lead)] = r;
      pivot_rows.push_back(r);
      res.pivot_cols.push_back(static_cast<std::size_t>(lead));
    }
  }

  if (reduced) {
    for (std::size_t k = 0; k < pivot_rows.size(); ++k) {
      Eigen::Index pr = pivot_rows[k];
      Eigen::Index pc = static_cast<Eigen::Index>(res.pivot_cols[k]);
      Rational inv = 1 / m(pr, pc);
      for (Eigen::Index j = pc; j < cols; ++j) m(pr, j) *= inv;
    }
    for (std::size_t k = 0; k < pivot_rows.size(); ++k) {
      Eigen::Index pr = pivot_rows[k];
      Eigen::Index pc = static_cast<Eigen::Index>(res.pivot_cols[k]);
      for (Eigen::Index r = 0; r < rows; ++r) {
        if (r == pr || m(r, pc) == 0) continue;
        Rational f = m(r, pc);
        for (Eigen::Index j = pc; j < cols; ++j) m(r, j) -= f * m(pr, j);
      }
    }
  }

  res.mat = std::move(m);
  return res;
}

}  // namespace spsolve
