#include "spsolve/mulmaps.hpp"

#include "spsolve/errors.hpp"

#include <algorithm>
#include <numeric>

namespace spsolve {

namespace {

// smallest multidegree (graded order) whose dehomogenized piece contains the
// linear monomials 1, x_1..x_n; empty optional when none exists below cap
bool find_d0(const GradedSemigroupAlgebra& alg, const Degree& cap, Degree& out) {
  std::vector<Degree> cand;
  Degree cur(cap.size(), 0);
  while (true) {
    cand.push_back(cur);
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == cap[i]) {
      cur[i] = 0;
      ++i;
    }
    if (i == cur.size()) break;
    ++cur[i];
  }
  GradedMonomialOrder ord;
  std::sort(cand.begin(), cand.end(), [&](const Degree& a, const Degree& b) {
    return ord.degree_less(a, b);
  });
  std::size_t n = alg.nvars();
  for (const Degree& d : cand) {
    if (std::all_of(d.begin(), d.end(), [](std::int64_t v) { return v == 0; }))
      continue;
    bool ok = alg.contains(d, zero_exponent(n));
    for (std::size_t i = 0; ok && i < n; ++i)
      ok = alg.contains(d, unit_exponent(n, i));
    if (ok) {
      out = d;
      return true;
    }
  }
  return false;
}

}  // namespace

MultiplicationMaps multiplication_maps(const HomogenizedSystem& h_in) {
  std::size_t n = h_in.algebra.nvars();
  HomogenizedSystem h = h_in;

  Degree b(h.algebra.rank(), 0);
  for (const auto& d : h.degrees) b = degree_add(b, d);

  MultiplicationMaps out;
  Degree d0;
  if (!find_d0(h.algebra, b, d0)) {
    // extend the algebra by a simplex summand carrying the linear forms
    std::vector<LatticePolytope> summands = h.algebra.summands();
    summands.push_back(standard_simplex(n, 1));
    h.algebra = build_algebra(n, std::move(summands));
    for (auto& d : h.degrees) d.push_back(0);
    b.push_back(0);
    d0.assign(h.algebra.rank(), 0);
    d0.back() = 1;
    out.augmented = true;
  }
  out.b = b;
  out.d0 = d0;

  Degree big = degree_add(b, d0);
  TruncatedGB gb = truncated_gb(h, big);

  // quotient basis at degree b
  const std::vector<Exponent>& degb = h.algebra.monomials(b);
  const std::set<Exponent>& piv_b = gb.pivots[b];
  for (const auto& m : degb)
    if (!piv_b.count(m)) out.basis.push_back(m);
  std::size_t delta = out.basis.size();
  if (delta == 0)
    throw DimensionUnstable("quotient at degree b is trivial", 1, 0);

  // degree b+d0 matrix with the embedded basis columns last
  GradedMatrix m = macaulay_matrix_graded(h, big, gb.lm_tables);
  std::set<Exponent> basis_set(out.basis.begin(), out.basis.end());
  std::vector<Exponent> cols;
  for (const auto& c : m.cols)
    if (!basis_set.count(c)) cols.push_back(c);
  std::size_t nonbasis = cols.size();
  for (const auto& bmon : out.basis) cols.push_back(bmon);
  if (cols.size() != m.cols.size())
    throw DimensionUnstable("basis monomial missing at degree b+d0",
                            m.cols.size(), cols.size());

  std::map<Exponent, std::size_t> col_index;
  for (std::size_t c = 0; c < cols.size(); ++c) col_index[cols[c]] = c;
  RatMat mat = RatMat::Zero(m.mat.rows(), m.mat.cols());
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    const auto& [i, beta] = m.rows[r];
    for (const auto& [e, c] : h.polys[i].terms())
      mat(static_cast<Eigen::Index>(r),
          static_cast<Eigen::Index>(col_index.at(e + beta))) = c.exact();
  }

  EchelonResult ech = echelon_no_pivoting(std::move(mat), true);
  if (ech.pivot_cols.size() != nonbasis)
    throw DimensionUnstable("rank at degree b+d0 disagrees with #B0", nonbasis,
                            ech.pivot_cols.size());
  for (auto pc : ech.pivot_cols)
    if (pc >= nonbasis)
      throw DimensionUnstable("pivot landed on a basis monomial", nonbasis, pc);

  // normal form of any degree-(b+d0) monomial as coordinates over B_0
  std::map<std::size_t, Eigen::Index> row_of_pivot;
  {
    std::set<std::size_t> zero(ech.zero_rows.begin(), ech.zero_rows.end());
    std::size_t k = 0;
    for (Eigen::Index r = 0; r < ech.mat.rows(); ++r) {
      if (zero.count(static_cast<std::size_t>(r))) continue;
      row_of_pivot[ech.pivot_cols[k++]] = r;
    }
  }
  auto normal_form = [&](const Exponent& gamma) {
    RatVec v = RatVec::Zero(static_cast<Eigen::Index>(delta));
    auto it = col_index.find(gamma);
    if (it == col_index.end())
      throw DimensionUnstable("monomial unreachable at degree b+d0", 0, 0);
    std::size_t c = it->second;
    if (c >= nonbasis) {
      v(static_cast<Eigen::Index>(c - nonbasis)) = 1;
      return v;
    }
    Eigen::Index r = row_of_pivot.at(c);
    for (std::size_t j = 0; j < delta; ++j)
      v(static_cast<Eigen::Index>(j)) =
          -ech.mat(r, static_cast<Eigen::Index>(nonbasis + j));
    return v;
  };

  for (std::size_t i = 0; i < n; ++i) {
    RatMat mx(static_cast<Eigen::Index>(delta), static_cast<Eigen::Index>(delta));
    for (std::size_t j = 0; j < delta; ++j)
      mx.col(static_cast<Eigen::Index>(j)) =
          normal_form(out.basis[j] + unit_exponent(n, i));
    out.maps.push_back(std::move(mx));
  }
  out.one = normal_form(zero_exponent(n));
  return out;
}

RatMat map_of_linear(const MultiplicationMaps& m, const SparsePoly& f0) {
  std::size_t n = f0.nvars();
  Eigen::Index delta = static_cast<Eigen::Index>(m.basis.size());
  RatMat acc = RatMat::Zero(delta, delta);
  for (const auto& [e, c] : f0.terms()) {
    if (!c.is_exact())
      throw std::invalid_argument("map_of_linear needs exact coefficients");
    if (e == zero_exponent(n)) {
      acc += c.exact() * RatMat::Identity(delta, delta);
      continue;
    }
    bool unit = false;
    for (std::size_t i = 0; i < n; ++i)
      if (e == unit_exponent(n, i)) {
        acc += c.exact() * m.maps[i];
        unit = true;
        break;
      }
    if (!unit) throw std::invalid_argument("map_of_linear: f0 must be linear");
  }
  return acc;
}

}  // namespace spsolve
