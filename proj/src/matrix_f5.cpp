#include "spsolve/matrix_f5.hpp"

#include <algorithm>
#include <numeric>

namespace spsolve {

namespace {

Rational exact_coeff(const Coefficient& c) {
  if (!c.is_exact())
    throw std::invalid_argument("toric GB needs exact coefficients");
  return c.exact();
}

}  // namespace

GradedMatrix macaulay_matrix_graded(const HomogenizedSystem& h, const Degree& b,
                                    const LMTables& tables) {
  GradedMatrix m;
  m.b = b;
  m.cols = h.algebra.monomials(b);
  std::map<Exponent, std::size_t> col_index;
  for (std::size_t c = 0; c < m.cols.size(); ++c) col_index[m.cols[c]] = c;

  GradedMonomialOrder ord;
  for (std::size_t i = 0; i < h.polys.size(); ++i) {
    Degree shift_deg;
    if (!degree_sub(b, h.degrees[i], shift_deg)) continue;
    // prefix pivots of creators < i at the shift degree drive the F5 skips
    std::set<Exponent> prefix;
    auto it = tables.find(shift_deg);
    if (it != tables.end())
      for (std::size_t j = 0; j < i && j < it->second.size(); ++j)
        prefix.insert(it->second[j].begin(), it->second[j].end());

    std::vector<Exponent> shifts = h.algebra.monomials(shift_deg);  // decreasing
    for (const auto& beta : shifts) {
      if (prefix.count(beta)) {
        m.skipped.emplace_back(i, beta);
        continue;
      }
      m.rows.emplace_back(i, beta);
    }
  }

  m.mat = RatMat::Zero(static_cast<Eigen::Index>(m.rows.size()),
                       static_cast<Eigen::Index>(m.cols.size()));
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    const auto& [i, beta] = m.rows[r];
    for (const auto& [e, c] : h.polys[i].terms())
      m.mat(static_cast<Eigen::Index>(r),
            static_cast<Eigen::Index>(col_index.at(e + beta))) = exact_coeff(c);
  }
  (void)ord;
  return m;
}

namespace {

SparsePoly row_to_poly(const RatMat& mat, Eigen::Index r,
                       const std::vector<Exponent>& cols, std::size_t nvars) {
  SparsePoly p(nvars);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Rational& v = mat(r, static_cast<Eigen::Index>(c));
    if (v != 0) p.add_term(cols[c], Coefficient(v));
  }
  return p;
}

// all degrees 0 <= b <= b_stop, increasing graded order
std::vector<Degree> degree_schedule(const Degree& b_stop) {
  std::vector<Degree> all;
  Degree cur(b_stop.size(), 0);
  while (true) {
    all.push_back(cur);
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == b_stop[i]) {
      cur[i] = 0;
      ++i;
    }
    if (i == cur.size()) break;
    ++cur[i];
  }
  GradedMonomialOrder ord;
  std::sort(all.begin(), all.end(), [&](const Degree& a, const Degree& b) {
    return ord.degree_less(a, b);
  });
  return all;
}

}  // namespace

TruncatedGB truncated_gb(const HomogenizedSystem& h, const Degree& b_stop,
                         bool audit_skipped) {
  TruncatedGB gb;
  gb.b_stop = b_stop;
  std::size_t nvars = h.algebra.nvars();

  for (const Degree& b : degree_schedule(b_stop)) {
    bool reachable = false;
    Degree dummy;
    for (const auto& d : h.degrees)
      if (degree_sub(b, d, dummy)) reachable = true;
    if (!reachable) continue;

    GradedMatrix m = macaulay_matrix_graded(h, b, gb.lm_tables);
    gb.stats.rows_total += m.rows.size();
    gb.stats.rows_skipped += m.skipped.size();
    gb.stats.matrix_sizes[b] = {m.rows.size(), m.cols.size()};
    if (m.rows.empty()) continue;

    EchelonResult ech = echelon_no_pivoting(m.mat);
    gb.stats.zero_reductions[b] = ech.zero_rows.size();

    // pivot bookkeeping, walking rows in their original order
    std::vector<std::set<Exponent>> by_creator(h.polys.size());
    std::set<Exponent> all_pivots;
    std::set<std::size_t> zero(ech.zero_rows.begin(), ech.zero_rows.end());
    std::size_t next_pivot = 0;
    std::map<std::size_t, std::size_t> pivot_row;  // pivot col -> matrix row
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
      if (zero.count(r)) continue;
      std::size_t pcol = ech.pivot_cols[next_pivot++];
      pivot_row[pcol] = r;
      const Exponent& lm = m.cols[pcol];
      by_creator[m.rows[r].first].insert(lm);
      all_pivots.insert(lm);

      // a pivot becomes a GB element unless an existing LM divides it in S^h
      bool divisible = false;
      for (const auto& g : gb.elements) {
        Degree diff;
        if (!degree_sub(b, g.degree, diff)) continue;
        if (h.algebra.contains(diff, lm - g.lm)) {
          divisible = true;
          break;
        }
      }
      if (!divisible) {
        GBElement el;
        el.creator = m.rows[r].first;
        el.degree = b;
        el.lm = lm;
        el.poly = row_to_poly(ech.mat, static_cast<Eigen::Index>(r), m.cols, nvars);
        gb.elements.push_back(std::move(el));
      }
    }
    gb.lm_tables[b] = std::move(by_creator);
    gb.pivots[b] = std::move(all_pivots);

    if (audit_skipped) {
      std::map<Exponent, std::size_t> col_index;
      for (std::size_t c = 0; c < m.cols.size(); ++c) col_index[m.cols[c]] = c;
      for (const auto& [i, beta] : m.skipped) {
        RatVec v = RatVec::Zero(static_cast<Eigen::Index>(m.cols.size()));
        for (const auto& [e, c] : h.polys[i].terms())
          v(static_cast<Eigen::Index>(col_index.at(e + beta))) = c.exact();
        for (std::size_t c = 0; c < m.cols.size(); ++c) {
          Eigen::Index ci = static_cast<Eigen::Index>(c);
          if (v(ci) == 0) continue;
          auto it = pivot_row.find(c);
          if (it == pivot_row.end()) continue;
          Eigen::Index pr = static_cast<Eigen::Index>(it->second);
          Rational f = v(ci) / ech.mat(pr, ci);
          for (std::size_t c2 = c; c2 < m.cols.size(); ++c2)
            v(static_cast<Eigen::Index>(c2)) -=
                f * ech.mat(pr, static_cast<Eigen::Index>(c2));
        }
        ++gb.stats.audit_checked;
        bool nonzero = false;
        for (Eigen::Index c = 0; c < v.size(); ++c)
          if (v(c) != 0) nonzero = true;
        if (nonzero) ++gb.stats.audit_failures;
      }
    }
  }
  return gb;
}

std::vector<SparsePoly> dehomogenize_gb(const TruncatedGB& gb) {
  std::vector<SparsePoly> out;
  for (const auto& g : gb.elements) out.push_back(g.poly);
  return out;
}

}  // namespace spsolve
