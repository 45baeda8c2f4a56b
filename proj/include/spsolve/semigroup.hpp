#ifndef SPSOLVE_SEMIGROUP_HPP
#define SPSOLVE_SEMIGROUP_HPP

#include "spsolve/polytope.hpp"

#include <map>
#include <vector>

namespace spsolve {

/// Multidegree in N^r.
using Degree = std::vector<std::int64_t>;

Degree degree_add(const Degree& a, const Degree& b);
bool degree_leq(const Degree& a, const Degree& b);  // componentwise
/// b - a when componentwise valid; false otherwise.
bool degree_sub(const Degree& b, const Degree& a, Degree& out);

/// Graded monomial order: multidegrees first (graded lexicographic), raw
/// exponents second (graded reverse lexicographic). Both comparators return
/// "strictly less".
struct GradedMonomialOrder {
  bool degree_less(const Degree& a, const Degree& b) const;
  bool alpha_less(const Exponent& a, const Exponent& b) const {
    return grevlex_less(a, b);
  }
  bool less(const Exponent& aa, const Degree& ab, const Exponent& ba,
            const Degree& bb) const {
    if (ab != bb) return degree_less(ab, bb);
    return alpha_less(aa, ba);
  }
};

/// Semigroup algebra S^h: the degree-b piece is spanned by the lattice
/// points of sum_k b_k Q_k. Sum polytopes and monomial lists are cached.
class GradedSemigroupAlgebra {
 public:
  GradedSemigroupAlgebra() = default;
  GradedSemigroupAlgebra(std::size_t nvars, std::vector<LatticePolytope> summands)
      : nvars_(nvars), summands_(std::move(summands)) {}

  std::size_t nvars() const { return nvars_; }
  std::size_t rank() const { return summands_.size(); }
  const std::vector<LatticePolytope>& summands() const { return summands_; }

  const LatticePolytope& sum_polytope(const Degree& b) const;
  /// Monomials of degree b, sorted decreasing in the graded order.
  const std::vector<Exponent>& monomials(const Degree& b) const;
  bool contains(const Degree& b, const Exponent& alpha) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<LatticePolytope> summands_;
  mutable std::map<Degree, LatticePolytope> poly_cache_;
  mutable std::map<Degree, std::vector<Exponent>> mono_cache_;
};

/// Validates/translates summands so each has 0 as a vertex.
GradedSemigroupAlgebra build_algebra(std::size_t nvars,
                                     std::vector<LatticePolytope> summands);

struct HomogenizedSystem {
  GradedSemigroupAlgebra algebra;
  std::vector<SparsePoly> polys;       // canonically translated
  std::vector<Degree> degrees;         // multidegree of each poly
  std::vector<Exponent> translations;  // shift applied to each input poly
};

/// Homogenizes sys into the given algebra: checks every support stays inside
/// sum_k d_{i,k} Q_k as-is (no translation is applied here; callers shift
/// their polynomials first). Throws std::invalid_argument on escape.
HomogenizedSystem homogenize_system(const PolySystem& sys,
                                    GradedSemigroupAlgebra alg,
                                    std::vector<Degree> degrees);

/// Default decomposition: Q_i = NP(f_i) translated, d_i = e_i.
HomogenizedSystem homogenize_default(const PolySystem& sys);

/// Dense decomposition: r = 1, Q_1 = standard simplex, d_i = deg(f_i).
HomogenizedSystem homogenize_dense(const PolySystem& sys);

}  // namespace spsolve

#endif
