#include "spsolve/macaulay.hpp"

#include "spsolve/errors.hpp"
#include "spsolve/polytope.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace spsolve {

namespace {

Rational exact_coeff(const SparsePoly& f, const Exponent& e) {
  Coefficient c = f.coeff(e);
  if (!c.is_exact())
    throw std::invalid_argument("resultant matrices need exact coefficients");
  return c.exact();
}

std::int64_t univariate_degree(const SparsePoly& f) {
  if (f.nvars() != 1)
    throw std::invalid_argument("expected a univariate polynomial");
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  std::int64_t d = f.terms().begin()->first[0];
  for (const auto& [e, c] : f.terms()) {
    if (e[0] < 0) throw std::invalid_argument("negative exponent");
    d = std::max(d, e[0]);
  }
  return d;
}

}  // namespace

MacaulayMatrix sylvester_matrix(const SparsePoly& f, const SparsePoly& g) {
  std::int64_t d0 = univariate_degree(f), d1 = univariate_degree(g);
  std::int64_t size = d0 + d1;
  MacaulayMatrix m;
  for (std::int64_t k = size - 1; k >= 0; --k) m.cols.push_back(Exponent{k});
  m.mat = RatMat::Zero(size, size);

  auto add_row = [&](std::size_t poly, const SparsePoly& p, std::int64_t shift) {
    std::size_t r = m.rows.size();
    m.rows.push_back({poly, Exponent{shift}});
    for (const auto& [e, c] : p.terms()) {
      std::int64_t col = size - 1 - (e[0] + shift);  // descending powers
      m.mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) =
          exact_coeff(p, e);
    }
  };
  for (std::int64_t k = d1 - 1; k >= 0; --k) add_row(0, f, k);
  for (std::int64_t k = d0 - 1; k >= 0; --k) add_row(1, g, k);
  return m;
}

MacaulayMatrix macaulay_matrix_dense(const std::vector<SparsePoly>& fs) {
  if (fs.empty()) throw std::invalid_argument("empty system");
  std::size_t n = fs[0].nvars();
  if (fs.size() != n + 1)
    throw std::invalid_argument("dense Macaulay needs n+1 polynomials");
  std::vector<std::int64_t> deg;
  std::int64_t dsum = 0;
  for (const auto& f : fs) {
    for (const auto& [e, c] : f.terms())
      for (std::size_t i = 0; i < n; ++i)
        if (e[i] < 0)
          throw std::invalid_argument("dense Macaulay needs polynomial exponents");
    deg.push_back(f.total_degree());
    dsum += deg.back();
  }
  std::int64_t cap = dsum - static_cast<std::int64_t>(n);
  if (cap < 0) throw std::invalid_argument("critical degree is negative");

  // all monomials of total degree <= D, decreasing grevlex
  std::vector<Exponent> monos;
  Exponent cur = zero_exponent(n);
  while (true) {
    if (cur.total_degree() <= cap) monos.push_back(cur);
    std::size_t i = 0;
    while (i < n && cur[i] == cap) {
      cur[i] = 0;
      ++i;
    }
    if (i == n) break;
    ++cur[i];
  }
  std::sort(monos.begin(), monos.end(),
            [](const Exponent& a, const Exponent& b) { return grevlex_less(b, a); });

  MacaulayMatrix m;
  m.cols = monos;
  std::map<Exponent, std::size_t> col_index;
  for (std::size_t c = 0; c < monos.size(); ++c) col_index[monos[c]] = c;

  m.mat = RatMat::Zero(static_cast<Eigen::Index>(monos.size()),
                       static_cast<Eigen::Index>(monos.size()));
  for (std::size_t r = 0; r < monos.size(); ++r) {
    const Exponent& g = monos[r];
    // homogenized exponent (D - |g|, g); row poly = least i with entry >= d_i
    std::size_t poly = n + 1;
    if (cap - g.total_degree() >= deg[0]) {
      poly = 0;
    } else {
      for (std::size_t i = 1; i <= n; ++i)
        if (g[i - 1] >= deg[i]) {
          poly = i;
          break;
        }
    }
    if (poly > n) throw std::logic_error("Macaulay column without a row");
    Exponent shift = g;
    if (poly >= 1) shift[poly - 1] -= deg[poly];
    m.rows.push_back({poly, shift});
    for (const auto& [e, c] : fs[poly].terms())
      m.mat(static_cast<Eigen::Index>(r),
            static_cast<Eigen::Index>(col_index.at(e + shift))) =
          exact_coeff(fs[poly], e);
  }
  return m;
}

namespace {

struct CEAttempt {
  std::vector<Exponent> points;
  std::vector<std::size_t> content_poly;
  std::vector<Exponent> content_shift;
};

CEAttempt assign_contents(const std::vector<std::set<Exponent>>& supports,
                          const MixedSubdivision& sub,
                          const LatticePolytope& q,
                          const std::vector<Rational>& delta) {
  std::size_t n = delta.size();
  CEAttempt out;
  // integer points of Q + delta via the bounding box of Q
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = hi[i] = q.vertices()[0][i];
    for (const auto& v : q.vertices()) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
    ++hi[i];  // delta in (0,1)^n shifts the box up by less than one
  }
  Exponent cur(lo);
  while (true) {
    std::vector<Rational> shifted(n);
    for (std::size_t i = 0; i < n; ++i) shifted[i] = Rational(cur[i]) - delta[i];
    if (q.contains(shifted)) {
      auto cells = locate(sub, shifted);
      if (cells.size() != 1)
        throw DeltaNotGeneric("perturbed point not in a unique cell");
      const Cell& cell = sub.cells[cells[0]];
      std::size_t poly = supports.size();
      for (std::size_t i = supports.size(); i-- > 0;)
        if (cell.faces[i].size() == 1) {
          poly = i;
          break;
        }
      if (poly == supports.size())
        throw std::logic_error("fine cell without a vertex summand");
      out.points.push_back(cur);
      out.content_poly.push_back(poly);
      out.content_shift.push_back(cur - cell.faces[poly][0]);
    }
    std::size_t i = 0;
    while (i < n && cur[i] == hi[i]) {
      cur[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++cur[i];
  }
  // row closure: every monomial of a row must be a column
  std::set<Exponent> index(out.points.begin(), out.points.end());
  for (std::size_t k = 0; k < out.points.size(); ++k)
    for (const auto& a : supports[out.content_poly[k]])
      if (!index.count(out.content_shift[k] + a))
        throw DeltaNotGeneric("row monomial escapes the point set");
  return out;
}

}  // namespace

RatMat fill_canny_emiris(const CannyEmirisData& data,
                         const std::vector<SparsePoly>& fs) {
  std::map<Exponent, std::size_t> col_index;
  for (std::size_t c = 0; c < data.points.size(); ++c)
    col_index[data.points[c]] = c;
  RatMat m = RatMat::Zero(static_cast<Eigen::Index>(data.points.size()),
                          static_cast<Eigen::Index>(data.points.size()));
  for (std::size_t r = 0; r < data.points.size(); ++r) {
    const SparsePoly& f = fs[data.content_poly[r]];
    for (const auto& [e, c] : f.terms())
      m(static_cast<Eigen::Index>(r),
        static_cast<Eigen::Index>(col_index.at(e + data.content_shift[r]))) =
          exact_coeff(f, e);
  }
  return m;
}

CannyEmirisData canny_emiris_matrix(const std::vector<SparsePoly>& fs,
                                    std::uint64_t seed,
                                    const std::vector<std::set<Exponent>>& supports_in) {
  if (fs.empty()) throw std::invalid_argument("empty system");
  std::size_t n = fs[0].nvars();
  if (fs.size() != n + 1)
    throw std::invalid_argument("Canny-Emiris needs n+1 polynomials");

  std::vector<std::set<Exponent>> supports = supports_in;
  if (supports.empty())
    for (const auto& f : fs) supports.push_back(f.support());
  if (supports.size() != fs.size())
    throw std::invalid_argument("support override count mismatch");
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (const auto& [e, c] : fs[i].terms())
      if (!supports[i].count(e))
        throw std::invalid_argument("support override misses a monomial");

  LatticePolytope q;
  for (std::size_t i = 0; i < supports.size(); ++i) {
    std::vector<Exponent> pts(supports[i].begin(), supports[i].end());
    LatticePolytope p = LatticePolytope::from_points(pts);
    q = (i == 0) ? p : minkowski_sum(q, p);
  }

  for (int lifting_attempt = 0; lifting_attempt < 8; ++lifting_attempt) {
    MixedSubdivision sub =
        mixed_subdivision(supports, seed + 1000 * lifting_attempt);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int delta_attempt = 0; delta_attempt < 16; ++delta_attempt) {
      std::vector<Rational> delta(n);
      for (auto& d : delta) {
        d = Rational(2 * static_cast<long>(rng() % 512) + 1, 1024);
        d.canonicalize();
      }
      try {
        CEAttempt att = assign_contents(supports, sub, q, delta);
        CannyEmirisData data;
        data.points = std::move(att.points);
        data.content_poly = std::move(att.content_poly);
        data.content_shift = std::move(att.content_shift);
        data.delta = std::move(delta);
        data.subdivision = std::move(sub);
        data.b_sets.resize(fs.size());
        for (std::size_t k = 0; k < data.points.size(); ++k)
          data.b_sets[data.content_poly[k]].push_back(data.content_shift[k]);
        for (auto& b : data.b_sets) std::sort(b.begin(), b.end());
        data.matrix.cols = data.points;
        for (std::size_t k = 0; k < data.points.size(); ++k)
          data.matrix.rows.push_back(
              {data.content_poly[k], data.content_shift[k]});
        data.matrix.mat = fill_canny_emiris(data, fs);
        return data;
      } catch (const DeltaNotGeneric&) {
        // redraw delta; fall through to a fresh lifting when exhausted
      }
    }
  }
  throw DeltaNotGeneric("no generic perturbation found");
}

KoszulMatrix koszul_bilinear_matrix(const std::vector<SparsePoly>& fs) {
  if (fs.size() != 3)
    throw std::invalid_argument("Koszul matrix needs three bilinear forms");
  // c[f][k][i] = coefficient of x_k * y_i in fs[f]
  Rational c[3][2][2];
  for (int f = 0; f < 3; ++f) {
    if (fs[f].nvars() != 4)
      throw std::invalid_argument("bilinear forms live in (x0,x1,y0,y1)");
    for (const auto& [e, co] : fs[f].terms()) {
      int k = -1, i = -1;
      if (e[0] == 1 && e[1] == 0) k = 0;
      if (e[0] == 0 && e[1] == 1) k = 1;
      if (e[2] == 1 && e[3] == 0) i = 0;
      if (e[2] == 0 && e[3] == 1) i = 1;
      if (k < 0 || i < 0 || e.total_degree() != 2)
        throw std::invalid_argument("polynomial is not bilinear");
      c[f][k][i] = exact_coeff(fs[f], e);
    }
  }

  KoszulMatrix km;
  km.row_labels = {{0, 0}, {1, 0}, {1, 1}, {1, 2}, {0, 1}, {0, 2}};
  km.col_labels = {{0, 0}, {1, 0}, {1, 2}, {1, 1}, {0, 2}, {0, 1}};
  km.mat = RatMat::Zero(6, 6);

  std::map<std::pair<int, int>, std::size_t> col_of;
  for (std::size_t j = 0; j < 6; ++j) col_of[km.col_labels[j]] = j;

  for (std::size_t r = 0; r < 6; ++r) {
    auto [yi, ej] = km.row_labels[r];
    int j1 = (ej == 0) ? 1 : 0;
    int j2 = (ej == 2) ? 1 : 2;
    // row(y_i e_j) = (y_i * f_{j1}) e_{j2} - (y_i * f_{j2}) e_{j1}
    for (int k = 0; k < 2; ++k) {
      km.mat(static_cast<Eigen::Index>(r),
             static_cast<Eigen::Index>(col_of.at({k, j2}))) += c[j1][k][yi];
      km.mat(static_cast<Eigen::Index>(r),
             static_cast<Eigen::Index>(col_of.at({k, j1}))) -= c[j2][k][yi];
    }
  }
  return km;
}

}  // namespace spsolve
