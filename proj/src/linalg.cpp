#include "vgf/linalg.hpp"

#include <string>

#include "vgf/errors.hpp"

namespace vgf {

bool exact_equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool is_identity(const Mat& a) {
  if (a.rows() != a.cols()) return false;
  return exact_equal(a, Mat::Identity(a.rows(), a.cols()));
}

RowEchelon row_reduce(Mat m) {
  RowEchelon result;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    Rational inv = m(row, col).inverse();
    m.row(row) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Rational factor = m(r, col);
      m.row(r) -= factor * m.row(row);
    }
    result.pivot_columns.push_back(col);
    ++row;
  }
  result.reduced = std::move(m);
  return result;
}

Index rank(const Mat& m) {
  return static_cast<Index>(row_reduce(m).pivot_columns.size());
}

Mat invert(const Mat& m) {
  if (m.rows() != m.cols()) throw NotSquareError("invert: matrix is not square");
  Index n = m.rows();
  Mat aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Mat::Identity(n, n);
  RowEchelon re = row_reduce(std::move(aug));
  if (static_cast<Index>(re.pivot_columns.size()) != n ||
      (n > 0 && re.pivot_columns.back() != n - 1))
    throw SingularError("invert: matrix is singular");
  return re.reduced.rightCols(n);
}

bool is_invertible(const Mat& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

Mat kernel_basis(const Mat& m) {
  RowEchelon re = row_reduce(m);
  Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : re.pivot_columns) is_pivot[static_cast<std::size_t>(p)] = true;
  Index nullity = n - static_cast<Index>(re.pivot_columns.size());
  Mat basis = Mat::Zero(n, nullity);
  Index k = 0;
  for (Index free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    basis(free_col, k) = Rational(1);
    for (std::size_t i = 0; i < re.pivot_columns.size(); ++i)
      basis(re.pivot_columns[i], k) = -re.reduced(static_cast<Index>(i), free_col);
    ++k;
  }
  return basis;
}

std::pair<Index, Mat> cokernel_projection(const Mat& m) {
  Mat left_kernel = kernel_basis(m.transpose());
  return {left_kernel.cols(), left_kernel.transpose()};
}

Mat solve_exact(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows())
    throw SizeMismatchError("solve_exact: row counts differ (" + std::to_string(a.rows()) +
                            " vs " + std::to_string(b.rows()) + ")");
  Index n = a.cols();
  Mat aug(a.rows(), n + b.cols());
  aug.leftCols(n) = a;
  aug.rightCols(b.cols()) = b;
  RowEchelon re = row_reduce(std::move(aug));
  Index r = static_cast<Index>(re.pivot_columns.size());
  for (Index i = 0; i < r; ++i)
    if (re.pivot_columns[static_cast<std::size_t>(i)] != i)
      throw SingularError("solve_exact: coefficient matrix lacks full column rank");
  if (r < n) throw SingularError("solve_exact: coefficient matrix lacks full column rank");
  // Any pivot in the right block marks an inconsistent row.
  if (r > n) throw SingularError("solve_exact: inconsistent system");
  return re.reduced.block(0, n, n, b.cols());
}

Mat matrix_power(const Mat& m, long e) {
  if (m.rows() != m.cols()) throw NotSquareError("matrix_power: matrix is not square");
  Mat base = e < 0 ? invert(m) : m;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                          : static_cast<unsigned long>(e);
  Mat acc = Mat::Identity(m.rows(), m.cols());
  while (k > 0) {
    if (k & 1ul) acc = (acc * base).eval();
    base = (base * base).eval();
    k >>= 1;
  }
  return acc;
}

}  // namespace vgf
