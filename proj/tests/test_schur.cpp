#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spsolve/errors.hpp"
#include "spsolve/schur_solver.hpp"

#include <complex>

using namespace spsolve;

namespace {

const std::vector<std::string> X{"x"};
const std::vector<std::string> XY{"x", "y"};

bool near(std::complex<double> a, std::complex<double> b, double tol = 1e-7) {
  return std::abs(a - b) <= tol;
}

}  // namespace

TEST_CASE("schur complement of the univariate toy system") {
  SparsePoly f0 = parse_polynomial("x", X);
  SparsePoly f1 = parse_polynomial("x - 2", X);
  std::vector<std::set<Exponent>> sup{{Exponent{0}, Exponent{1}}, f1.support()};
  CannyEmirisData d = canny_emiris_matrix({f0, f1}, 1, sup);
  SchurSplit split = split_canny_emiris(d, d.matrix.mat);
  REQUIRE(split.basis.size() == 1);
  RatMat kernel = schur_kernel(split);
  RatMat s = schur_complement(d, {f0, f1}, kernel);
  CHECK(s.rows() == 1);
  // multiplication by x on C[x]/(x-2): S(1)^{-1} S(x) = [2]
  SparsePoly one = parse_polynomial("1", X);
  RatMat s1 = schur_complement(d, {one, f1}, kernel);
  CHECK(solve_exact(s1, s)(0, 0) == Rational(2));
}

TEST_CASE("eigen decomposition basics") {
  Eigen::MatrixXcd m(2, 2);
  m << 2.0, 0.0, 0.0, 3.0;
  EigenData e = eigen_decomposition(m);
  CHECK(e.max_residual < 1e-12);
  CHECK(!e.defective);
  double lo = std::min(e.values(0).real(), e.values(1).real());
  double hi = std::max(e.values(0).real(), e.values(1).real());
  CHECK(lo == doctest::Approx(2.0));
  CHECK(hi == doctest::Approx(3.0));

  Eigen::MatrixXcd j(2, 2);
  j << 1.0, 1.0, 0.0, 1.0;
  CHECK(eigen_decomposition(j).defective);
}

TEST_CASE("solve_torus on one variable") {
  PolySystem sys;
  sys.nvars = 1;
  sys.vars = X;
  sys.polys = {parse_polynomial("x - 2", X)};
  SolveResult r = solve_torus(sys, 7);
  REQUIRE(r.points.size() == 1);
  CHECK(r.mixed_volume == 1);
  CHECK(near(r.points[0][0], 2.0));
  CHECK(r.residuals[0] <= 1e-8);
}

TEST_CASE("solve_torus on a bilinear system with known roots") {
  // f1 = (x-1)(y-2), f2 = (x-3)(y-4): torus roots (1,4) and (3,2)
  PolySystem sys;
  sys.nvars = 2;
  sys.vars = XY;
  sys.polys = {parse_polynomial("x*y - 2*x - y + 2", XY),
               parse_polynomial("x*y - 4*x - 3*y + 12", XY)};
  SolveResult r = solve_torus(sys, 11);
  CHECK(r.mixed_volume == 2);
  REQUIRE(r.points.size() == 2);
  CHECK(near(r.points[0][0], 1.0));
  CHECK(near(r.points[0][1], 4.0));
  CHECK(near(r.points[1][0], 3.0));
  CHECK(near(r.points[1][1], 2.0));
}

TEST_CASE("solve_torus matches the Bezout count on dense systems") {
  PolySystem sys;
  sys.nvars = 2;
  sys.vars = XY;
  sys.polys = {parse_polynomial("x^2 + 3*y^2 - 2*x*y + x - 7", XY),
               parse_polynomial("2*x^2 - y^2 + 5*y - 3", XY)};
  SolveResult r = solve_torus(sys, 13);
  CHECK(r.mixed_volume == 4);
  CHECK(r.points.size() == 4);
  for (double res : r.residuals) CHECK(res <= 1e-8);
  // solutions actually satisfy the system
  for (const auto& p : r.points)
    for (const auto& f : sys.polys) CHECK(residual(f, p) <= 1e-8);
}

TEST_CASE("solve_torus is deterministic for a fixed seed") {
  PolySystem sys;
  sys.nvars = 2;
  sys.vars = XY;
  sys.polys = {parse_polynomial("x^2 + y - 3", XY),
               parse_polynomial("x + y^2 - 5", XY)};
  SolveResult a = solve_torus(sys, 21);
  SolveResult b = solve_torus(sys, 21);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(a.points[i][j] == b.points[i][j]);  // bit-identical
}

TEST_CASE("multiple roots produce a cluster warning") {
  PolySystem sys;
  sys.nvars = 1;
  sys.vars = X;
  sys.polys = {parse_polynomial("x^2 - 2*x + 1", X)};
  SolveResult r = solve_torus(sys, 3, 1e-4);
  CHECK(!r.warnings.empty());
  for (const auto& p : r.points) CHECK(std::abs(p[0] - 1.0) < 1e-2);
}

TEST_CASE("koszul solver recovers planted roots") {
  // bilinear forms vanishing exactly at (x, y) = (2, 3) and (4, 5)
  std::vector<std::string> B{"x0", "x1", "y0", "y1"};
  SparsePoly f1 = parse_polynomial("x0*y1 - x1*y0 - x0*y0", B);
  SparsePoly f2 = parse_polynomial("8*x0*y0 - 7*x1*y0 + x1*y1", B);
  SolveResult r = solve_bilinear_koszul(f1, f2);
  REQUIRE(r.points.size() == 2);
  CHECK(near(r.points[0][0], 2.0));
  CHECK(near(r.points[0][1], 3.0));
  CHECK(near(r.points[1][0], 4.0));
  CHECK(near(r.points[1][1], 5.0));
  CHECK_THROWS_AS(solve_bilinear_koszul(f1, f1), SingularM11);
}
