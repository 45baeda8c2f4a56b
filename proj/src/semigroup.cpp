#include "spsolve/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spsolve {

Degree degree_add(const Degree& a, const Degree& b) {
  Degree r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

bool degree_leq(const Degree& a, const Degree& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool degree_sub(const Degree& b, const Degree& a, Degree& out) {
  out = b;
  for (std::size_t i = 0; i < b.size(); ++i) {
    out[i] -= a[i];
    if (out[i] < 0) return false;
  }
  return true;
}

bool GradedMonomialOrder::degree_less(const Degree& a, const Degree& b) const {
  std::int64_t ta = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  std::int64_t tb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
  if (ta != tb) return ta < tb;
  return a < b;  // graded lexicographic
}

const LatticePolytope& GradedSemigroupAlgebra::sum_polytope(const Degree& b) const {
  auto it = poly_cache_.find(b);
  if (it != poly_cache_.end()) return it->second;
  if (b.size() != summands_.size())
    throw std::invalid_argument("multidegree rank mismatch");
  LatticePolytope acc =
      LatticePolytope::from_points({zero_exponent(nvars_)});
  for (std::size_t k = 0; k < summands_.size(); ++k) {
    if (b[k] < 0) throw std::invalid_argument("negative multidegree");
    if (b[k] == 0) continue;
    acc = minkowski_sum(acc, dilated(summands_[k], b[k]));
  }
  return poly_cache_.emplace(b, std::move(acc)).first->second;
}

const std::vector<Exponent>& GradedSemigroupAlgebra::monomials(const Degree& b) const {
  auto it = mono_cache_.find(b);
  if (it != mono_cache_.end()) return it->second;
  std::set<Exponent> pts = lattice_points(sum_polytope(b));
  std::vector<Exponent> out(pts.begin(), pts.end());
  GradedMonomialOrder ord;
  std::sort(out.begin(), out.end(), [&](const Exponent& x, const Exponent& y) {
    return ord.alpha_less(y, x);  // decreasing
  });
  return mono_cache_.emplace(b, std::move(out)).first->second;
}

bool GradedSemigroupAlgebra::contains(const Degree& b, const Exponent& alpha) const {
  return sum_polytope(b).contains(alpha);
}

GradedSemigroupAlgebra build_algebra(std::size_t nvars,
                                     std::vector<LatticePolytope> summands) {
  for (auto& q : summands) {
    if (q.ambient_dim() != nvars)
      throw std::invalid_argument("summand dimension mismatch");
    if (!q.has_zero_vertex()) {
      // canonical translation: move the lex-min vertex to the origin
      Exponent v = q.vertices().front();
      q = q.translated(zero_exponent(nvars) - v);
      if (!q.has_zero_vertex())
        throw std::invalid_argument("summand has no zero vertex after translation");
    }
  }
  return GradedSemigroupAlgebra(nvars, std::move(summands));
}

HomogenizedSystem homogenize_system(const PolySystem& sys,
                                    GradedSemigroupAlgebra alg,
                                    std::vector<Degree> degrees) {
  if (degrees.size() != sys.polys.size())
    throw std::invalid_argument("one multidegree per polynomial required");
  HomogenizedSystem h;
  h.algebra = std::move(alg);
  h.degrees = std::move(degrees);
  for (std::size_t i = 0; i < sys.polys.size(); ++i) {
    const SparsePoly& f = sys.polys[i];
    if (f.is_zero()) throw std::invalid_argument("zero polynomial in system");
    for (const auto& [e, c] : f.terms())
      if (!h.algebra.contains(h.degrees[i], e))
        throw std::invalid_argument("support escapes the prescribed polytope");
    h.translations.push_back(zero_exponent(sys.nvars));
    h.polys.push_back(f);
  }
  return h;
}

HomogenizedSystem homogenize_default(const PolySystem& sys) {
  // translate every polynomial so 0 is a vertex of its Newton polytope and
  // use the translated polytopes as the summands, d_i = e_i
  PolySystem shifted = sys;
  std::vector<Exponent> shifts;
  std::vector<LatticePolytope> summands;
  for (auto& f : shifted.polys) {
    LatticePolytope np = newton_polytope(f);
    Exponent shift = zero_exponent(sys.nvars) - np.vertices().front();
    f = f.shifted(shift);
    shifts.push_back(shift);
    summands.push_back(np.translated(shift));
  }
  GradedSemigroupAlgebra alg = build_algebra(sys.nvars, std::move(summands));
  std::vector<Degree> degrees;
  for (std::size_t i = 0; i < sys.polys.size(); ++i) {
    Degree d(sys.polys.size(), 0);
    d[i] = 1;
    degrees.push_back(std::move(d));
  }
  HomogenizedSystem h = homogenize_system(shifted, std::move(alg), std::move(degrees));
  h.translations = std::move(shifts);
  return h;
}

HomogenizedSystem homogenize_dense(const PolySystem& sys) {
  GradedSemigroupAlgebra alg =
      build_algebra(sys.nvars, {standard_simplex(sys.nvars, 1)});
  std::vector<Degree> degrees;
  for (const auto& f : sys.polys) degrees.push_back({f.total_degree()});
  return homogenize_system(sys, std::move(alg), std::move(degrees));
}

}  // namespace spsolve
