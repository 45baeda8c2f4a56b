#ifndef SPSOLVE_ERRORS_HPP
#define SPSOLVE_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace spsolve {

/// Base of all recoverable solver failures.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The denominator block M11 of the resultant matrix is singular (e.g. the
/// square subsystem f1..fn is not generic enough for the chosen matrix).
struct SingularM11 : SolverError {
  using SolverError::SolverError;
};

/// The random lifting produced a non-fine mixed subdivision; retry with a
/// fresh lifting.
struct DegenerateLifting : SolverError {
  using SolverError::SolverError;
};

/// The perturbation delta placed some lattice point outside the relative
/// interior of a unique mixed cell; retry with a fresh delta.
struct DeltaNotGeneric : SolverError {
  using SolverError::SolverError;
};

/// The quotient-ring dimension observed during multiplication-map
/// construction disagrees with the expected basis size.
struct DimensionUnstable : SolverError {
  std::size_t expected = 0;
  std::size_t observed = 0;
  DimensionUnstable(const std::string& what, std::size_t exp, std::size_t obs)
      : SolverError(what), expected(exp), observed(obs) {}
};

/// No coordinate-recovery strategy produced a consistent point for some
/// eigenvalue.
struct CoordinateRecoveryFailed : SolverError {
  using SolverError::SolverError;
};

/// Retries were exhausted; carries whatever points survived the residual
/// filter so the caller can still inspect partial output.
struct NonConvergence : SolverError {
  std::vector<std::vector<std::complex<double>>> partial_points;
  std::vector<double> partial_residuals;
  explicit NonConvergence(const std::string& what) : SolverError(what) {}
};

}  // namespace spsolve

#endif
