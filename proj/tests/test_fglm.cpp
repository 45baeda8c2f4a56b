#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spsolve/errors.hpp"
#include "spsolve/fglm.hpp"
#include "spsolve/mulmaps.hpp"
#include "spsolve/schur_solver.hpp"

#include <algorithm>
#include <complex>
#include <random>

using namespace spsolve;

namespace {

const std::vector<std::string> X{"x"};
const std::vector<std::string> XY{"x", "y"};

Eigen::MatrixXcd to_cd(const RatMat& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = to_complex(m(i, j));
  return out;
}

PolySystem make_system(std::vector<std::string> vars,
                       std::vector<std::string> polys) {
  PolySystem sys;
  sys.nvars = vars.size();
  sys.vars = vars;
  for (const auto& s : polys) sys.polys.push_back(parse_polynomial(s, vars));
  return sys;
}

SparsePoly random_dense(std::size_t nvars, std::int64_t deg,
                        std::mt19937_64& rng) {
  SparsePoly f(nvars);
  Exponent e = zero_exponent(nvars);
  while (true) {
    if (e.total_degree() <= deg) {
      long c = static_cast<long>(rng() % 19) - 9;
      if (e.total_degree() == deg && c == 0) c = 1;
      f.add_term(e, Coefficient(Rational(c)));
    }
    std::size_t i = 0;
    while (i < nvars && e[i] == deg) {
      e[i] = 0;
      ++i;
    }
    if (i == nvars) break;
    ++e[i];
  }
  return f;
}

}  // namespace

TEST_CASE("univariate quadratic: basis, trace, determinant, lex basis") {
  PolySystem sys = make_system(X, {"x^2 - 3*x + 2"});
  MultiplicationMaps m = multiplication_maps(homogenize_dense(sys));
  REQUIRE(m.basis.size() == 2);
  const RatMat& mx = m.maps[0];
  CHECK(mx(0, 0) + mx(1, 1) == Rational(3));                    // 1 + 2
  CHECK(mx(0, 0) * mx(1, 1) - mx(0, 1) * mx(1, 0) == Rational(2));

  std::vector<SparsePoly> lex = fglm_lex(m);
  REQUIRE(lex.size() == 1);
  SparsePoly expect = parse_polynomial("x^2 - 3*x + 2", X);
  CHECK(lex[0] == expect);
}

TEST_CASE("two linear equations give the point (1,2)") {
  PolySystem sys = make_system(XY, {"x - 1", "y - 2"});
  MultiplicationMaps m = multiplication_maps(homogenize_dense(sys));
  REQUIRE(m.basis.size() == 1);
  CHECK(m.maps[0](0, 0) == Rational(1));
  CHECK(m.maps[1](0, 0) == Rational(2));

  std::vector<SparsePoly> lex = fglm_lex(m);
  REQUIRE(lex.size() == 2);
  // discovery order walks y before x (x is the most significant variable)
  CHECK(lex[0] == parse_polynomial("y - 2", XY));
  CHECK(lex[1] == parse_polynomial("x - 1", XY));
}

TEST_CASE("eigenvalue pencil: quotient dimension, eigenvalues, eliminant") {
  // (A + l*B)(1,w) = 0 for A = [[1,2],[3,4]], B = [[3,4],[-2,-4]];
  // det(A + l*B) = -2 - 4l^2, so l = +-i/sqrt(2).  Variables ordered (w, l)
  // so the lex basis eliminates w and keeps a univariate polynomial in l.
  const std::vector<std::string> WL{"w", "l"};
  PolySystem sys = make_system(
      WL, {"1 + 3*l + 2*w + 4*l*w", "3 - 2*l + 4*w - 4*l*w"});
  MultiplicationMaps m = multiplication_maps(homogenize_default(sys));
  REQUIRE(m.basis.size() == 2);

  Eigen::VectorXcd ev = eigen_decomposition(to_cd(m.maps[1])).values;
  std::vector<double> imags{ev(0).imag(), ev(1).imag()};
  std::sort(imags.begin(), imags.end());
  double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(imags[0] + s) < 1e-9);
  CHECK(std::abs(imags[1] - s) < 1e-9);
  CHECK(std::abs(ev(0).real()) < 1e-9);
  CHECK(std::abs(ev(1).real()) < 1e-9);

  // the univariate element of the lex basis is proportional to 2l^2 + 1
  std::vector<SparsePoly> lex = fglm_lex(m);
  bool found = false;
  for (const auto& g : lex) {
    bool univariate = true;
    for (const auto& [e, c] : g.terms())
      if (e[0] != 0) univariate = false;
    if (!univariate) continue;
    found = true;
    CHECK(g.coeff(Exponent{0, 2}).exact() == Rational(1));
    CHECK(g.coeff(Exponent{0, 1}).exact() == Rational(0));
    CHECK(g.coeff(Exponent{0, 0}).exact() == Rational(1, 2));
  }
  CHECK(found);
}

TEST_CASE("multiplication maps commute exactly") {
  std::mt19937_64 rng(91);
  int tested = 0;
  for (int t = 0; t < 8 && tested < 4; ++t) {
    PolySystem sys;
    sys.nvars = 2;
    sys.vars = XY;
    sys.polys = {random_dense(2, 2, rng), random_dense(2, 2, rng)};
    MultiplicationMaps m;
    try {
      m = multiplication_maps(homogenize_dense(sys));
    } catch (const DimensionUnstable&) {
      continue;  // degenerate draw
    }
    ++tested;
    RatMat ab = m.maps[0] * m.maps[1];
    RatMat ba = m.maps[1] * m.maps[0];
    bool equal = true;
    for (Eigen::Index i = 0; i < ab.rows(); ++i)
      for (Eigen::Index j = 0; j < ab.cols(); ++j)
        if (ab(i, j) != ba(i, j)) equal = false;
    CHECK(equal);
  }
  CHECK(tested == 4);
}

TEST_CASE("float fallback agrees with the exact result") {
  PolySystem sys = make_system(XY, {"x^2 - 3*x + 2", "y - x"});
  MultiplicationMaps m = multiplication_maps(homogenize_dense(sys));
  std::vector<SparsePoly> exact = fglm_lex(m);

  std::vector<Eigen::MatrixXd> fmaps;
  for (const auto& mm : m.maps) {
    Eigen::MatrixXd d(mm.rows(), mm.cols());
    for (Eigen::Index i = 0; i < mm.rows(); ++i)
      for (Eigen::Index j = 0; j < mm.cols(); ++j) d(i, j) = mm(i, j).get_d();
    fmaps.push_back(std::move(d));
  }
  Eigen::VectorXd fone(m.one.size());
  for (Eigen::Index i = 0; i < m.one.size(); ++i) fone(i) = m.one(i).get_d();

  std::vector<SparsePoly> approx = fglm_lex(fmaps, fone);
  REQUIRE(approx.size() == exact.size());
  for (std::size_t k = 0; k < exact.size(); ++k) {
    for (const auto& [e, c] : exact[k].terms()) {
      std::complex<double> got = approx[k].coeff(e).numeric();
      CHECK(std::abs(got - to_complex(c.exact())) < 1e-9);
    }
  }
}

TEST_CASE("roots on coordinate hyperplanes are saturated away") {
  // x*(x-1) has the affine roots x=0 and x=1, but only x=1 lies on the
  // torus; the toric quotient sees the saturated ideal <x-1, y-1>
  PolySystem sys = make_system(XY, {"x^2 - x", "y - 1"});
  MultiplicationMaps m = multiplication_maps(homogenize_default(sys));
  REQUIRE(m.basis.size() == 1);

  std::vector<SparsePoly> lex = fglm_lex(m);
  REQUIRE(lex.size() == 2);
  for (const auto& g : lex) {
    // vanishes at the torus root (1,1) ...
    std::complex<double> at_torus = g.evaluate({1.0, 1.0});
    CHECK(std::abs(at_torus) < 1e-12);
  }
  // ... and the basis excludes the hyperplane root (0,1)
  bool excludes = false;
  for (const auto& g : lex)
    if (std::abs(g.evaluate({0.0, 1.0})) > 0.5) excludes = true;
  CHECK(excludes);
}

TEST_CASE("map eigenvalues match the torus solver") {
  // planted torus roots (1,4) and (3,2)
  PolySystem sys = make_system(
      XY, {"x*y - 2*x - y + 2", "x*y - 4*x - 3*y + 12"});
  MultiplicationMaps m = multiplication_maps(homogenize_default(sys));
  REQUIRE(m.basis.size() == 2);

  SolveResult res = solve_torus(sys, 7);
  REQUIRE(res.points.size() == 2);

  for (std::size_t i = 0; i < 2; ++i) {
    Eigen::VectorXcd ev = eigen_decomposition(to_cd(m.maps[i])).values;
    std::vector<double> got{ev(0).real(), ev(1).real()};
    std::vector<double> want{res.points[0][i].real(), res.points[1][i].real()};
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(std::abs(got[0] - want[0]) < 1e-8);
    CHECK(std::abs(got[1] - want[1]) < 1e-8);
  }
}
