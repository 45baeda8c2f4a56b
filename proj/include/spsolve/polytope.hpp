#ifndef SPSOLVE_POLYTOPE_HPP
#define SPSOLVE_POLYTOPE_HPP

#include "spsolve/exponent.hpp"
#include "spsolve/polynomial.hpp"
#include "spsolve/rational.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace spsolve {

using IPoint = std::vector<Integer>;

/// Closed halfspace {x : <normal,x> <= offset} with primitive integer normal.
struct HalfSpace {
  std::vector<Integer> normal;
  Integer offset;
};

struct HullResult {
  int dim = -1;                     // affine dimension of the point set
  std::vector<std::size_t> vertices;  // indices of extreme points in the input
  std::vector<HalfSpace> facets;      // facet inequalities (within the affine hull)
  std::vector<HalfSpace> equalities;  // affine-hull equations <n,x> == c
};

/// Exact facet enumeration by recursive gift wrapping. Handles point sets of
/// any affine dimension; ambient dimension is expected to stay small (<= 5).
HullResult convex_hull(const std::vector<IPoint>& pts);

/// Lattice polytope with both a vertex and a halfspace description. The
/// halfspace list includes both directions of every affine-hull equation, so
/// membership is a plain inequality scan even for lower-dimensional bodies.
class LatticePolytope {
 public:
  LatticePolytope() = default;
  static LatticePolytope from_points(const std::vector<Exponent>& pts);

  std::size_t ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  const std::vector<Exponent>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }

  bool contains(const Exponent& p) const;
  bool contains(const std::vector<Rational>& p) const;
  bool has_zero_vertex() const;

  LatticePolytope translated(const Exponent& t) const;

 private:
  std::size_t ambient_ = 0;
  int dim_ = -1;
  std::vector<Exponent> vertices_;
  std::vector<HalfSpace> halfspaces_;
};

LatticePolytope newton_polytope(const SparsePoly& f);
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope standard_simplex(std::size_t n, std::int64_t dilation = 1);
LatticePolytope dilated(const LatticePolytope& p, std::int64_t k);

std::set<Exponent> lattice_points(const LatticePolytope& p);

/// Mixed volume by the alternating lattice-point-count formula:
/// (-1)^n + sum_k (-1)^(n-k) sum_{|I|=k} #((sum_{i in I} P_i) cap Z^n).
std::int64_t mixed_volume(const std::vector<LatticePolytope>& ps);

/// Exact normalized volume n!*vol(P) by recursive simplex decomposition.
Integer normalized_volume(const LatticePolytope& p);

}  // namespace spsolve

#endif
