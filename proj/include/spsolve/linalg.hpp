#ifndef SPSOLVE_LINALG_HPP
#define SPSOLVE_LINALG_HPP

#include "spsolve/rational.hpp"

#include <Eigen/Dense>

#include <vector>

namespace spsolve {

using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Exact determinant by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
Rational exact_determinant(const RatMat& m);

/// Solves A*X = B exactly; throws SingularM11 when A is singular.
RatMat solve_exact(const RatMat& a, const RatMat& b);

/// Exact rank.
std::size_t exact_rank(RatMat m);

struct EchelonResult {
  RatMat mat;                        // the (reduced) echelon form
  std::vector<std::size_t> pivot_cols;  // leftmost-nonzero column per pivot row
  std::vector<std::size_t> zero_rows;   // input rows that reduced to zero
};

/// Row reduction WITHOUT row pivoting: rows are processed top-down in the
/// given order, each reduced by the pivots found so far; a row that survives
/// contributes its leftmost nonzero column as a new pivot. This preserves
/// the row-order semantics signature-based criteria rely on.
/// With `reduced`, pivots are scaled to 1 and eliminated upwards as well.
EchelonResult echelon_no_pivoting(RatMat m, bool reduced = false);

}  // namespace spsolve

#endif
