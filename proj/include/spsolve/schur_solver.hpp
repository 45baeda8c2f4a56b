#ifndef SPSOLVE_SCHUR_SOLVER_HPP
#define SPSOLVE_SCHUR_SOLVER_HPP

#include "spsolve/macaulay.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace spsolve {

/// Split of a Canny-Emiris matrix into the f_1..f_n block (M11/M12) and the
/// f_0 block (M21/M22); rows and columns both live on the point set E, with
/// the content-0 points last.
struct SchurSplit {
  std::vector<std::size_t> inner;  // point indices with content > 0
  std::vector<std::size_t> basis;  // point indices with content 0
  RatMat m11, m12, m21, m22;
};

SchurSplit split_canny_emiris(const CannyEmirisData& data, const RatMat& mat);

/// K = M11^{-1} M12; depends only on f_1..f_n, reusable across f_0 choices.
RatMat schur_kernel(const SchurSplit& split);

/// S(g) = M22(g) - M21(g) * K for a new toric polynomial g on the f_0
/// support of the skeleton.
RatMat schur_complement(const CannyEmirisData& data,
                        const std::vector<SparsePoly>& system_with_g,
                        const RatMat& kernel);

struct EigenData {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;  // right eigenvectors, one per column
  bool defective = false;
  double max_residual = 0.0;  // max ||Mv - lambda v|| / ||M||
};

/// Dense complex eigendecomposition with a residual certificate.
EigenData eigen_decomposition(const Eigen::MatrixXcd& m);

/// Relative residual of f at a point: |f(p)| / sum_terms |c * p^e|.
double residual(const SparsePoly& f, const std::vector<std::complex<double>>& p);

struct SolveResult {
  std::vector<std::vector<std::complex<double>>> points;
  std::vector<double> residuals;  // max relative residual over the system
  std::int64_t mixed_volume = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;
};

/// Solves a square sparse system on the torus by the Canny-Emiris /
/// Schur-complement eigenvalue method.
SolveResult solve_torus(const PolySystem& sys, std::uint64_t seed,
                        double tol = 1e-8);

/// Solves two bilinear forms on P^1 x P^1 through the Koszul resultant
/// matrix; returns dehomogenized points (x1/x0, y1/y0).
SolveResult solve_bilinear_koszul(const SparsePoly& f1, const SparsePoly& f2,
                                  double tol = 1e-8);

}  // namespace spsolve

#endif
