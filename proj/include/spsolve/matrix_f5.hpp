#ifndef SPSOLVE_MATRIX_F5_HPP
#define SPSOLVE_MATRIX_F5_HPP

#include "spsolve/linalg.hpp"
#include "spsolve/semigroup.hpp"

#include <map>
#include <set>
#include <vector>

namespace spsolve {

/// Leading-monomial tables: per processed degree, per creator index, the
/// pivot exponents contributed by that polynomial's rows.
using LMTables = std::map<Degree, std::vector<std::set<Exponent>>>;

struct GradedMatrix {
  Degree b;
  std::vector<Exponent> cols;  // monomials of degree b, decreasing
  std::vector<std::pair<std::size_t, Exponent>> rows;     // included (i, beta)
  std::vector<std::pair<std::size_t, Exponent>> skipped;  // F5-skipped rows
  RatMat mat;
};

/// Degree-b Macaulay matrix over the semigroup algebra. Rows (i, beta) with
/// beta already a prefix pivot at degree b - d_i are skipped (F5 criterion).
GradedMatrix macaulay_matrix_graded(const HomogenizedSystem& h, const Degree& b,
                                    const LMTables& tables);

struct GBElement {
  std::size_t creator = 0;
  Degree degree;
  Exponent lm;
  SparsePoly poly;
};

struct GBStats {
  std::map<Degree, std::size_t> zero_reductions;
  std::map<Degree, std::pair<std::size_t, std::size_t>> matrix_sizes;
  std::size_t rows_total = 0;
  std::size_t rows_skipped = 0;
  std::size_t audit_checked = 0;
  std::size_t audit_failures = 0;
};

struct TruncatedGB {
  std::vector<GBElement> elements;
  LMTables lm_tables;
  std::map<Degree, std::set<Exponent>> pivots;  // all pivot LMs per degree
  Degree b_stop;
  GBStats stats;
};

/// Truncated Groebner basis by degree-by-degree Gaussian elimination without
/// row pivoting. Degrees b <= b_stop are processed in increasing graded
/// order. With `audit_skipped`, every F5-skipped row is force-reduced
/// against the eliminated matrix and checked to vanish.
TruncatedGB truncated_gb(const HomogenizedSystem& h, const Degree& b_stop,
                         bool audit_skipped = false);

/// pi: drops the multidegree, keeping the Laurent polynomial as-is.
std::vector<SparsePoly> dehomogenize_gb(const TruncatedGB& gb);

}  // namespace spsolve

#endif
