#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spsolve/polytope.hpp"

#include <random>

using namespace spsolve;

namespace {

LatticePolytope poly(std::vector<Exponent> pts) {
  return LatticePolytope::from_points(pts);
}

}  // namespace

TEST_CASE("hull of the unit square") {
  LatticePolytope p = poly({Exponent{0, 0}, Exponent{1, 0}, Exponent{0, 1},
                            Exponent{1, 1}});
  CHECK(p.dim() == 2);
  CHECK(p.vertices().size() == 4);
  CHECK(p.halfspaces().size() == 4);
  CHECK(p.contains(Exponent{1, 1}));
  CHECK(!p.contains(Exponent{2, 0}));
  CHECK(p.contains(std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  CHECK(!p.contains(std::vector<Rational>{Rational(3, 2), Rational(1, 2)}));
}

TEST_CASE("interior points are not vertices") {
  LatticePolytope p = poly({Exponent{0, 0}, Exponent{2, 0}, Exponent{0, 2},
                            Exponent{2, 2}, Exponent{1, 1}, Exponent{2, 1}});
  CHECK(p.vertices().size() == 4);
  CHECK(lattice_points(p).size() == 9);
}

TEST_CASE("lower dimensional hulls") {
  // a segment in the plane
  LatticePolytope seg = poly({Exponent{0, 0}, Exponent{2, 2}, Exponent{1, 1}});
  CHECK(seg.dim() == 1);
  CHECK(seg.vertices().size() == 2);
  CHECK(seg.contains(Exponent{1, 1}));
  CHECK(!seg.contains(Exponent{1, 0}));
  CHECK(lattice_points(seg).size() == 3);

  // a single point
  LatticePolytope pt = poly({Exponent{3, -1}});
  CHECK(pt.dim() == 0);
  CHECK(pt.vertices().size() == 1);
  CHECK(pt.contains(Exponent{3, -1}));
  CHECK(!pt.contains(Exponent{0, 0}));
  CHECK(lattice_points(pt).size() == 1);
}

TEST_CASE("minkowski sum of triangle and square") {
  LatticePolytope tri = standard_simplex(2, 2);
  LatticePolytope sq = poly({Exponent{0, 0}, Exponent{1, 0}, Exponent{0, 1},
                             Exponent{1, 1}});
  LatticePolytope s = minkowski_sum(tri, sq);
  std::vector<Exponent> want{Exponent{0, 0}, Exponent{0, 3}, Exponent{1, 3},
                             Exponent{3, 0}, Exponent{3, 1}};
  CHECK(s.vertices() == want);
  // [0,3]^2 cut by x+y<=4 drops (2,3),(3,2),(3,3): 16-3 points
  CHECK(lattice_points(s).size() == 13);
}

TEST_CASE("mixed volume of two unit squares") {
  LatticePolytope sq = poly({Exponent{0, 0}, Exponent{1, 0}, Exponent{0, 1},
                             Exponent{1, 1}});
  CHECK(mixed_volume({sq, sq}) == 2);
}

TEST_CASE("mixed volume simplex and square") {
  LatticePolytope tri = standard_simplex(2, 1);
  LatticePolytope sq = poly({Exponent{0, 0}, Exponent{1, 0}, Exponent{0, 1},
                             Exponent{1, 1}});
  CHECK(mixed_volume({tri, sq}) == 2);
  CHECK(mixed_volume({sq, tri}) == 2);
}

TEST_CASE("mixed volume of dilated simplices is the Bezout number") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::int64_t> degs(n);
    std::mt19937_64 rng(7 + n);
    for (auto& d : degs) d = 1 + static_cast<std::int64_t>(rng() % 3);
    std::vector<LatticePolytope> ps;
    std::int64_t bezout = 1;
    for (auto d : degs) {
      ps.push_back(standard_simplex(n, d));
      bezout *= d;
    }
    CHECK(mixed_volume(ps) == bezout);
  }
}

TEST_CASE("normalized volume matches mixed volume of equal bodies") {
  LatticePolytope sq = poly({Exponent{0, 0}, Exponent{1, 0}, Exponent{0, 1},
                             Exponent{1, 1}});
  CHECK(normalized_volume(sq) == 2);
  CHECK(normalized_volume(standard_simplex(3, 2)) == 8);
  CHECK(normalized_volume(standard_simplex(4, 1)) == 1);

  // MV(P,...,P) = n! vol(P) on a random planar polytope
  std::mt19937_64 rng(11);
  std::vector<Exponent> pts;
  for (int i = 0; i < 8; ++i)
    pts.push_back(Exponent{static_cast<std::int64_t>(rng() % 5),
                           static_cast<std::int64_t>(rng() % 5)});
  LatticePolytope p = poly(pts);
  CHECK(Integer(mixed_volume({p, p})) == normalized_volume(p));
}

TEST_CASE("newton polytope of a bilinear form") {
  std::vector<std::string> vars{"x", "y"};
  SparsePoly f = parse_polynomial("x*y + x + y + 1", vars);
  LatticePolytope p = newton_polytope(f);
  CHECK(p.dim() == 2);
  CHECK(p.vertices().size() == 4);
  CHECK(p.has_zero_vertex());
}

TEST_CASE("translation") {
  LatticePolytope tri = standard_simplex(2, 1);
  LatticePolytope t = tri.translated(Exponent{-1, 2});
  CHECK(t.contains(Exponent{-1, 2}));
  CHECK(t.contains(Exponent{0, 2}));
  CHECK(!t.contains(Exponent{0, 0}));
  CHECK(!t.has_zero_vertex());
}

TEST_CASE("hull in dimension three and four") {
  // octahedron
  std::vector<Exponent> oct;
  for (std::size_t i = 0; i < 3; ++i) {
    Exponent e = zero_exponent(3);
    e[i] = 1;
    oct.push_back(e);
    e[i] = -1;
    oct.push_back(e);
  }
  oct.push_back(Exponent{0, 0, 0});
  LatticePolytope p = poly(oct);
  CHECK(p.dim() == 3);
  CHECK(p.vertices().size() == 6);
  CHECK(p.halfspaces().size() == 8);
  CHECK(normalized_volume(p) == 8);

  // 4-cube
  std::vector<Exponent> cube;
  for (int m = 0; m < 16; ++m)
    cube.push_back(Exponent{m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1});
  LatticePolytope c = poly(cube);
  CHECK(c.vertices().size() == 16);
  CHECK(c.halfspaces().size() == 8);
  CHECK(normalized_volume(c) == 24);
}
