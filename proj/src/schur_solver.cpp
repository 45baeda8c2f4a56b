#include "spsolve/schur_solver.hpp"

#include "spsolve/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace spsolve {

SchurSplit split_canny_emiris(const CannyEmirisData& data, const RatMat& mat) {
  SchurSplit s;
  for (std::size_t k = 0; k < data.points.size(); ++k)
    (data.content_poly[k] == 0 ? s.basis : s.inner).push_back(k);
  auto block = [&](const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
    RatMat b(static_cast<Eigen::Index>(rows.size()),
             static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            mat(static_cast<Eigen::Index>(rows[i]),
                static_cast<Eigen::Index>(cols[j]));
    return b;
  };
  s.m11 = block(s.inner, s.inner);
  s.m12 = block(s.inner, s.basis);
  s.m21 = block(s.basis, s.inner);
  s.m22 = block(s.basis, s.basis);
  return s;
}

RatMat schur_kernel(const SchurSplit& split) {
  return solve_exact(split.m11, split.m12);
}

RatMat schur_complement(const CannyEmirisData& data,
                        const std::vector<SparsePoly>& system_with_g,
                        const RatMat& kernel) {
  RatMat filled = fill_canny_emiris(data, system_with_g);
  SchurSplit s = split_canny_emiris(data, filled);
  return s.m22 - s.m21 * kernel;
}

EigenData eigen_decomposition(const Eigen::MatrixXcd& m) {
  EigenData out;
  if (m.rows() == 0) return out;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, true);
  out.values = es.eigenvalues();
  out.vectors = es.eigenvectors();

  double scale = m.norm();
  if (scale == 0.0) scale = 1.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    double r = (m * out.vectors.col(j) - out.values(j) * out.vectors.col(j))
                   .norm() /
               scale;
    out.max_residual = std::max(out.max_residual, r);
  }

  // near-equal eigenvalues with near-parallel eigenvectors => defective
  for (Eigen::Index i = 0; i < m.cols(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (std::abs(out.values(i) - out.values(j)) > 1e-6) continue;
      double cosang = std::abs(out.vectors.col(i).dot(out.vectors.col(j))) /
                      (out.vectors.col(i).norm() * out.vectors.col(j).norm());
      if (cosang > 1.0 - 1e-8) out.defective = true;
    }
  return out;
}

double residual(const SparsePoly& f, const std::vector<std::complex<double>>& p) {
  std::complex<double> acc = 0.0;
  double scale = 0.0;
  for (const auto& [e, c] : f.terms()) {
    std::complex<double> mono = 1.0;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      std::int64_t k = e[i];
      if (k == 0) continue;
      if (p[i] == std::complex<double>(0.0, 0.0) && k < 0)
        return std::numeric_limits<double>::infinity();
      std::complex<double> base = k > 0 ? p[i] : 1.0 / p[i];
      for (std::int64_t t = 0; t < std::llabs(k); ++t) mono *= base;
    }
    std::complex<double> term = c.numeric() * mono;
    acc += term;
    scale += std::abs(term);
  }
  if (scale == 0.0) return 0.0;
  return std::abs(acc) / scale;
}

namespace {

Eigen::MatrixXcd to_complex(const RatMat& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = std::complex<double>(m(i, j).get_d(), 0.0);
  return out;
}

void sort_points(SolveResult& res) {
  std::vector<std::size_t> order(res.points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& pa = res.points[a];
    const auto& pb = res.points[b];
    for (std::size_t i = 0; i < pa.size(); ++i) {
      if (pa[i].real() != pb[i].real()) return pa[i].real() < pb[i].real();
      if (pa[i].imag() != pb[i].imag()) return pa[i].imag() < pb[i].imag();
    }
    return false;
  });
  SolveResult sorted = res;
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted.points[i] = res.points[order[i]];
    sorted.residuals[i] = res.residuals[order[i]];
  }
  res = std::move(sorted);
}

void cluster_warnings(const Eigen::VectorXcd& values, SolveResult& res) {
  for (Eigen::Index i = 0; i < values.size(); ++i)
    for (Eigen::Index j = i + 1; j < values.size(); ++j)
      if (std::abs(values(i) - values(j)) < 1e-6) {
        res.warnings.push_back(
            "eigenvalue cluster detected; roots may have multiplicity");
        return;
      }
}

}  // namespace

SolveResult solve_torus(const PolySystem& sys, std::uint64_t seed, double tol) {
  std::size_t n = sys.nvars;
  if (sys.polys.size() != n)
    throw std::invalid_argument("solve_torus needs a square system");
  for (const auto& f : sys.polys)
    if (f.is_zero() || f.nvars() != n)
      throw std::invalid_argument("solve_torus: bad polynomial");

  // f_0 lives on the unit simplex so the same skeleton also serves the
  // coordinate polynomials x_i and the constant 1
  std::vector<std::set<Exponent>> supports;
  std::set<Exponent> a0{zero_exponent(n)};
  for (std::size_t i = 0; i < n; ++i) a0.insert(unit_exponent(n, i));
  supports.push_back(a0);
  for (const auto& f : sys.polys) supports.push_back(f.support());

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff_dist(-(1L << 16), 1L << 16);
  SolveResult partial;

  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      SparsePoly f0(n);
      f0.add_term(zero_exponent(n), Coefficient(Rational(coeff_dist(rng))));
      for (std::size_t i = 0; i < n; ++i) {
        long c = 0;
        while (c == 0) c = coeff_dist(rng);
        f0.add_term(unit_exponent(n, i), Coefficient(Rational(c)));
      }
      std::vector<SparsePoly> fs{f0};
      for (const auto& f : sys.polys) fs.push_back(f);

      CannyEmirisData data =
          canny_emiris_matrix(fs, seed + 10000 * attempt, supports);
      SchurSplit split = split_canny_emiris(data, data.matrix.mat);
      RatMat kernel = schur_kernel(split);

      SparsePoly one(n);
      one.add_term(zero_exponent(n), Coefficient(Rational(1)));
      auto with_g = [&](const SparsePoly& g) {
        std::vector<SparsePoly> v{g};
        for (const auto& f : sys.polys) v.push_back(f);
        return v;
      };
      RatMat s_one = schur_complement(data, with_g(one), kernel);

      // multiplication maps in the Schur basis: A_i = S(1)^{-1} S(x_i)
      std::vector<Eigen::MatrixXcd> mul(n);
      Eigen::MatrixXcd m_f0;
      {
        RatMat acc = solve_exact(
            s_one, schur_complement(data, with_g(f0), kernel));
        m_f0 = to_complex(acc);
        for (std::size_t i = 0; i < n; ++i) {
          SparsePoly xi(n);
          xi.add_term(unit_exponent(n, i), Coefficient(Rational(1)));
          mul[i] = to_complex(solve_exact(
              s_one, schur_complement(data, with_g(xi), kernel)));
        }
      }

      EigenData eig = eigen_decomposition(m_f0);

      // adjacency pairs inside the basis point set enable eigenvector ratios
      std::map<Exponent, std::size_t> pos;
      for (std::size_t k = 0; k < split.basis.size(); ++k)
        pos[data.points[split.basis[k]]] = k;
      bool ratios_ok = true;
      for (std::size_t i = 0; i < n && ratios_ok; ++i) {
        bool found = false;
        for (const auto& [p, k] : pos)
          if (pos.count(p + unit_exponent(n, i))) {
            found = true;
            break;
          }
        ratios_ok = found;
      }

      SolveResult res;
      res.seed = seed;
      res.mixed_volume = static_cast<std::int64_t>(split.basis.size());
      if (eig.defective)
        res.warnings.push_back("eigenproblem looks defective");
      cluster_warnings(eig.values, res);

      Eigen::MatrixXcd schur_u;
      std::vector<Eigen::VectorXcd> schur_diag(n);
      if (!ratios_ok) {
        Eigen::ComplexSchur<Eigen::MatrixXcd> sch(m_f0, true);
        schur_u = sch.matrixU();
        for (std::size_t i = 0; i < n; ++i)
          schur_diag[i] =
              (schur_u.adjoint() * mul[i] * schur_u).diagonal();
      }

      for (Eigen::Index j = 0; j < eig.values.size(); ++j) {
        std::vector<std::complex<double>> point(n);
        bool ok = true;
        if (ratios_ok) {
          Eigen::VectorXcd v = eig.vectors.col(j);
          for (std::size_t i = 0; i < n; ++i) {
            double best = -1.0;
            std::complex<double> val;
            for (const auto& [p, k] : pos) {
              auto it = pos.find(p + unit_exponent(n, i));
              if (it == pos.end()) continue;
              double score = std::min(std::abs(v(static_cast<Eigen::Index>(k))),
                                      std::abs(v(static_cast<Eigen::Index>(it->second))));
              if (score > best) {
                best = score;
                val = v(static_cast<Eigen::Index>(it->second)) /
                      v(static_cast<Eigen::Index>(k));
              }
            }
            if (best <= 0.0 || !std::isfinite(std::abs(val))) {
              ok = false;
              break;
            }
            point[i] = val;
          }
        } else {
          for (std::size_t i = 0; i < n; ++i) point[i] = schur_diag[i](j);
        }
        if (!ok) continue;

        double r = 0.0;
        for (const auto& f : sys.polys) r = std::max(r, residual(f, point));
        if (r <= tol) {
          res.points.push_back(std::move(point));
          res.residuals.push_back(r);
        }
      }

      sort_points(res);
      if (res.points.size() <
          static_cast<std::size_t>(res.mixed_volume)) {
        partial.points = res.points;
        partial.residuals = res.residuals;
        partial.mixed_volume = res.mixed_volume;
        partial.seed = seed;
        if (res.points.empty()) throw SingularM11("no point passed the filter");
        res.warnings.push_back("found " + std::to_string(res.points.size()) +
                               " of " + std::to_string(res.mixed_volume) +
                               " expected points");
      }
      return res;
    } catch (const SolverError&) {
      if (attempt == 7) break;
    }
  }

  NonConvergence err("solver retries exhausted");
  err.partial_points = partial.points;
  err.partial_residuals = partial.residuals;
  throw err;
}

SolveResult solve_bilinear_koszul(const SparsePoly& f1, const SparsePoly& f2,
                                  double tol) {
  auto bilinear = [](std::int64_t xk, std::int64_t yi) {
    SparsePoly f(4);
    Exponent e{0, 0, 0, 0};
    e[static_cast<std::size_t>(xk)] = 1;
    e[static_cast<std::size_t>(2 + yi)] = 1;
    f.add_term(e, Coefficient(Rational(1)));
    return f;
  };

  // eigenvalues of the Schur complement of K(f0, f1, f2) are f0(z)/(x0*y0)
  auto schur_eigs = [&](const SparsePoly& f0) {
    KoszulMatrix km = koszul_bilinear_matrix({f0, f1, f2});
    RatMat m11 = km.mat.topLeftCorner(4, 4);
    RatMat m12 = km.mat.topRightCorner(4, 2);
    RatMat m21 = km.mat.bottomLeftCorner(2, 4);
    RatMat m22 = km.mat.bottomRightCorner(2, 2);
    RatMat s = m22 - m21 * solve_exact(m11, m12);
    return eigen_decomposition(to_complex(s));
  };

  EigenData ex = schur_eigs(bilinear(1, 0));  // x1*y0 -> x1/x0
  EigenData ey = schur_eigs(bilinear(0, 1));  // x0*y1 -> y1/y0

  auto system_residual = [&](std::complex<double> x, std::complex<double> y) {
    std::vector<std::complex<double>> p{1.0, x, 1.0, y};
    return std::max(residual(f1, p), residual(f2, p));
  };

  // two candidate pairings of the two x-values with the two y-values
  double best = std::numeric_limits<double>::infinity();
  int best_swap = 0;
  for (int swap = 0; swap < 2; ++swap) {
    double worst = 0.0;
    for (int j = 0; j < 2; ++j)
      worst = std::max(worst,
                       system_residual(ex.values(j), ey.values(j ^ swap)));
    if (worst < best) {
      best = worst;
      best_swap = swap;
    }
  }

  SolveResult res;
  res.mixed_volume = 2;
  for (int j = 0; j < 2; ++j) {
    std::complex<double> x = ex.values(j), y = ey.values(j ^ best_swap);
    double r = system_residual(x, y);
    if (r <= tol) {
      res.points.push_back({x, y});
      res.residuals.push_back(r);
    }
  }
  sort_points(res);
  return res;
}

}  // namespace spsolve
