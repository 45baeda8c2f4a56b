#ifndef SPSOLVE_FGLM_HPP
#define SPSOLVE_FGLM_HPP

#include "spsolve/mulmaps.hpp"
#include "spsolve/polynomial.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

namespace spsolve {

namespace fglm_detail {

inline bool scalar_is_zero(const Rational& v, double) { return v == 0; }
inline bool scalar_is_zero(double v, double tol) { return std::abs(v) <= tol; }

inline Coefficient to_coefficient(const Rational& v) { return Coefficient(v); }
inline Coefficient to_coefficient(double v) {
  return Coefficient(std::complex<double>(v, 0.0));
}

template <typename Scalar>
std::vector<SparsePoly> fglm_lex_impl(
    const std::vector<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>>& maps,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& one, double tol) {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  std::size_t n = maps.size();
  Eigen::Index delta = one.size();

  // staircase monomials with their normal-form vectors
  std::vector<Exponent> staircase;
  std::vector<Vec> vectors;
  // row-reduced copies for incremental dependence testing; combo[k] expresses
  // reduced[k] over the staircase vectors
  std::vector<Vec> reduced;
  std::vector<Eigen::Index> pivot;
  std::vector<std::vector<Scalar>> combo;

  std::vector<SparsePoly> basis;
  std::vector<Exponent> basis_lms;

  auto lexcmp = [](const Exponent& a, const Exponent& b) {
    return lex_less(a, b);
  };
  std::set<Exponent, decltype(lexcmp)> queue(lexcmp);
  queue.insert(zero_exponent(n));

  auto vector_of = [&](const Exponent& m) -> Vec {
    if (m == zero_exponent(n)) return one;
    // divide by some variable whose quotient is already on the staircase
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] <= 0) continue;
      Exponent q = m;
      --q[i];
      auto it = std::find(staircase.begin(), staircase.end(), q);
      if (it == staircase.end()) continue;
      return maps[i] *
             vectors[static_cast<std::size_t>(it - staircase.begin())];
    }
    throw std::logic_error("FGLM: monomial without a staircase parent");
  };

  while (!queue.empty()) {
    Exponent m = *queue.begin();
    queue.erase(queue.begin());

    bool in_ideal = false;
    for (const auto& lm : basis_lms) {
      bool div = true;
      for (std::size_t i = 0; i < n; ++i)
        if (m[i] < lm[i]) div = false;
      if (div) {
        in_ideal = true;
        break;
      }
    }
    if (in_ideal) continue;

    Vec w = vector_of(m);
    Vec r = w;
    std::vector<Scalar> lambda(staircase.size(), Scalar(0));
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      if (scalar_is_zero(r(pivot[k]), tol)) continue;
      Scalar f = r(pivot[k]) / reduced[k](pivot[k]);
      r -= f * reduced[k];
      for (std::size_t j = 0; j < combo[k].size(); ++j)
        lambda[j] += f * combo[k][j];
    }

    Eigen::Index piv = -1;
    double best = tol;
    for (Eigen::Index i = 0; i < delta; ++i) {
      if (scalar_is_zero(r(i), tol)) continue;
      if constexpr (std::is_same_v<Scalar, double>) {
        if (std::abs(r(i)) > best) {
          best = std::abs(r(i));
          piv = i;
        }
      } else {
        piv = i;
        break;
      }
    }

    if (piv < 0) {
      // dependent: m - sum lambda_j * m_j is a lex GB element
      SparsePoly g(n);
      g.add_term(m, Coefficient(Rational(1)));
      for (std::size_t j = 0; j < staircase.size(); ++j)
        g.add_term(staircase[j], -to_coefficient(lambda[j]));
      basis.push_back(std::move(g));
      basis_lms.push_back(m);
    } else {
      staircase.push_back(m);
      vectors.push_back(std::move(w));
      reduced.push_back(std::move(r));
      pivot.push_back(piv);
      lambda.resize(staircase.size(), Scalar(0));
      lambda[staircase.size() - 1] = Scalar(-1);  // r = w - sum lambda_j v_j
      for (auto& c : combo) c.resize(staircase.size(), Scalar(0));
      // store combo so reduced[k] = sum combo[k][j] * vectors[j]
      for (auto& c : lambda) c = -c;
      combo.push_back(std::move(lambda));
      for (std::size_t i = 0; i < n; ++i) {
        Exponent next = m;
        ++next[i];
        queue.insert(next);
      }
      if (static_cast<Eigen::Index>(staircase.size()) > delta)
        throw std::logic_error("FGLM staircase exceeded the quotient dimension");
    }
  }
  return basis;
}

}  // namespace fglm_detail

/// Lex Groebner basis (x_1 > ... > x_n) from exact multiplication maps.
inline std::vector<SparsePoly> fglm_lex(const MultiplicationMaps& maps) {
  return fglm_detail::fglm_lex_impl<Rational>(maps.maps, maps.one, 0.0);
}

/// Float fallback with a 1e-10 linear-dependence tolerance.
inline std::vector<SparsePoly> fglm_lex(
    const std::vector<Eigen::MatrixXd>& maps, const Eigen::VectorXd& one,
    double tol = 1e-10) {
  return fglm_detail::fglm_lex_impl<double>(maps, one, tol);
}

}  // namespace spsolve

#endif
