#ifndef SPSOLVE_MULMAPS_HPP
#define SPSOLVE_MULMAPS_HPP

#include "spsolve/matrix_f5.hpp"

namespace spsolve {

/// Multiplication matrices on the quotient basis B_0 extracted from the
/// reduced echelon form at degree b + d_0 (columns with the basis last).
struct MultiplicationMaps {
  std::vector<Exponent> basis;  // B_0, decreasing graded order
  Degree b, d0;
  std::vector<RatMat> maps;  // M_{x_1} .. M_{x_n}
  RatVec one;                // coordinates of 1 in the basis
  bool augmented = false;    // algebra was extended by a simplex summand
};

MultiplicationMaps multiplication_maps(const HomogenizedSystem& h);

/// M_{f_0} = c_0 I + sum c_i M_{x_i} for a linear f_0 = c_0 + sum c_i x_i.
RatMat map_of_linear(const MultiplicationMaps& m, const SparsePoly& f0);

}  // namespace spsolve

#endif
