#ifndef SPSOLVE_MACAULAY_HPP
#define SPSOLVE_MACAULAY_HPP

#include "spsolve/linalg.hpp"
#include "spsolve/polynomial.hpp"
#include "spsolve/subdivision.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace spsolve {

/// Row provenance: the matrix row holds the coefficients of x^shift * f_poly.
struct RowLabel {
  std::size_t poly = 0;
  Exponent shift;
  bool operator==(const RowLabel&) const = default;
};

struct MacaulayMatrix {
  std::vector<RowLabel> rows;
  std::vector<Exponent> cols;  // column monomials
  RatMat mat;
};

/// Classical Sylvester matrix of two univariate polynomials; its determinant
/// IS the resultant (leading-power normalization included).
MacaulayMatrix sylvester_matrix(const SparsePoly& f, const SparsePoly& g);

/// Dense Macaulay matrix of n+1 polynomials in n variables at the critical
/// degree D = sum(deg f_i) - n; square, det = c * Res.
MacaulayMatrix macaulay_matrix_dense(const std::vector<SparsePoly>& fs);

/// Canny-Emiris sparse resultant matrix data. `points` is the perturbed
/// lattice-point set E; every p in E carries a row content (poly index and
/// monomial shift); b_sets[i] collects the shifts of content-i rows.
struct CannyEmirisData {
  std::vector<Exponent> points;           // E, sorted
  std::vector<std::size_t> content_poly;  // row content index per point
  std::vector<Exponent> content_shift;    // p - a_i per point
  std::vector<Rational> delta;
  MixedSubdivision subdivision;
  std::vector<std::vector<Exponent>> b_sets;
  MacaulayMatrix matrix;
};

/// Builds the Canny-Emiris matrix for n+1 polynomials in n variables.
/// `supports` optionally overrides each polynomial's support (each must
/// contain the actual support); empty means "use the Newton polytopes of fs".
CannyEmirisData canny_emiris_matrix(
    const std::vector<SparsePoly>& fs, std::uint64_t seed,
    const std::vector<std::set<Exponent>>& supports = {});

/// Refills the matrix entries for new coefficient values on the same
/// skeleton (supports unchanged); cheap compared to rebuilding.
RatMat fill_canny_emiris(const CannyEmirisData& data,
                         const std::vector<SparsePoly>& fs);

/// Koszul-type resultant matrix for three bilinear forms on P^1 x P^1,
/// variables ordered (x0, x1, y0, y1). Fixed 6x6 layout.
struct KoszulMatrix {
  std::vector<std::pair<int, int>> row_labels;  // (i, j) labels y_i * e_j
  std::vector<std::pair<int, int>> col_labels;  // (k, j) labels x_k * e_j
  RatMat mat;
};

KoszulMatrix koszul_bilinear_matrix(const std::vector<SparsePoly>& fs);

}  // namespace spsolve

#endif
