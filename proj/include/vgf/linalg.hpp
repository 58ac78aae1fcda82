#pragma once

#include <Eigen/Core>

#include <utility>
#include <vector>

#include "vgf/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<vgf::Rational> {
  using Real = vgf::Rational;
  using NonInteger = vgf::Rational;
  using Nested = vgf::Rational;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 64,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace vgf {

using Index = Eigen::Index;
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

bool exact_equal(const Mat& a, const Mat& b);
bool is_identity(const Mat& a);

/* Reduced row echelon form.  Pivoting is deterministic: scan columns left to
   right, take the topmost nonzero entry at or below the current row.  All
   derived bases (kernel, cokernel, solve) inherit this determinism. */
struct RowEchelon {
  Mat reduced;
  std::vector<Index> pivot_columns;
};
RowEchelon row_reduce(Mat m);

Index rank(const Mat& m);

/* Gauss-Jordan inverse; throws NotSquareError / SingularError. */
Mat invert(const Mat& m);

bool is_invertible(const Mat& m);

/* Columns form the canonical kernel basis: one column per free column of the
   echelon form, ordered ascending, with a unit in the free coordinate. */
Mat kernel_basis(const Mat& m);

/* Cokernel of m as a projection p with p*m = 0 and full row rank
   rows(m) - rank(m); rows are the canonical left-kernel basis. */
std::pair<Index, Mat> cokernel_projection(const Mat& m);

/* Unique exact solution x of a*x = b; requires a of full column rank and a
   consistent system, else throws SingularError. */
Mat solve_exact(const Mat& a, const Mat& b);

/* Exact integer power; negative exponents invert first. */
Mat matrix_power(const Mat& m, long e);

}  // namespace vgf
