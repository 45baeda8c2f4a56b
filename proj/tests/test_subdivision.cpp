#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spsolve/errors.hpp"
#include "spsolve/polytope.hpp"
#include "spsolve/subdivision.hpp"

#include <random>

using namespace spsolve;

namespace {

std::set<Exponent> square_support() {
  return {Exponent{0, 0}, Exponent{1, 0}, Exponent{0, 1}, Exponent{1, 1}};
}

std::set<Exponent> random_support(std::size_t n, std::mt19937_64& rng) {
  std::set<Exponent> s;
  std::size_t count = 3 + rng() % 4;
  while (s.size() < count) {
    Exponent e = zero_exponent(n);
    for (std::size_t i = 0; i < n; ++i)
      e[i] = static_cast<std::int64_t>(rng() % 4);
    s.insert(e);
  }
  return s;
}

}  // namespace

TEST_CASE("lifting is reproducible and bounded") {
  std::vector<std::set<Exponent>> sup{square_support(), square_support()};
  Lifting a = random_lifting(sup, 42);
  Lifting b = random_lifting(sup, 42);
  CHECK(a.heights == b.heights);
  Lifting c = random_lifting(sup, 43);
  CHECK(a.heights != c.heights);
  for (const auto& h : a.heights)
    for (const auto& [e, v] : h) {
      CHECK(v >= 0);
      CHECK(v < (std::int64_t{1} << 20));
    }
}

TEST_CASE("subdivision of two squares covers the sum") {
  std::vector<std::set<Exponent>> sup{square_support(), square_support()};
  MixedSubdivision sub = mixed_subdivision(sup, 1);
  REQUIRE(!sub.cells.empty());
  // cells are fine: dimensions add up to n and faces are simplices/edges
  for (const auto& c : sub.cells) {
    int total = 0;
    for (std::size_t i = 0; i < c.faces.size(); ++i) {
      total += c.type[i];
      CHECK(c.faces[i].size() == static_cast<std::size_t>(c.type[i]) + 1);
    }
    CHECK(total == 2);
  }
  // cell volumes tile the Minkowski sum: sum of normalized volumes matches
  LatticePolytope sq = LatticePolytope::from_points(
      {Exponent{0, 0}, Exponent{1, 0}, Exponent{0, 1}, Exponent{1, 1}});
  Integer total_vol = 0;
  for (const auto& c : sub.cells) total_vol += normalized_volume(c.body);
  CHECK(total_vol == normalized_volume(minkowski_sum(sq, sq)));
  CHECK(mixed_volume_from_cells(sub) == 2);
}

TEST_CASE("mixed cell volumes agree with the lattice point formula") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = 2 + trial % 2;  // dimensions 2 and 3
    std::vector<std::set<Exponent>> sup;
    std::vector<LatticePolytope> polys;
    for (std::size_t i = 0; i < n; ++i) {
      auto s = random_support(n, rng);
      std::vector<Exponent> pts(s.begin(), s.end());
      polys.push_back(LatticePolytope::from_points(pts));
      sup.push_back(std::move(s));
    }
    if (std::any_of(polys.begin(), polys.end(),
                    [&](const auto& p) { return p.dim() < static_cast<int>(n); }))
      continue;  // keep the oracle comparison on full-dimensional data
    std::int64_t mv = mixed_volume(polys);
    for (std::uint64_t seed : {5ull, 6ull}) {
      MixedSubdivision sub = mixed_subdivision(sup, seed);
      CHECK(mixed_volume_from_cells(sub) == mv);
    }
  }
}

TEST_CASE("point location") {
  std::vector<std::set<Exponent>> sup{square_support(), square_support()};
  MixedSubdivision sub = mixed_subdivision(sup, 7);
  // a generic interior point lies in exactly one cell
  std::vector<Rational> p{Rational(105, 101), Rational(94, 97)};
  CHECK(locate(sub, p).size() == 1);
  // a point outside the sum lies in none
  std::vector<Rational> q{Rational(5), Rational(5)};
  CHECK(locate(sub, q).empty());
}

TEST_CASE("determinism of the subdivision") {
  std::vector<std::set<Exponent>> sup{square_support(), square_support()};
  MixedSubdivision a = mixed_subdivision(sup, 3);
  MixedSubdivision b = mixed_subdivision(sup, 3);
  REQUIRE(a.cells.size() == b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i)
    CHECK(a.cells[i].faces == b.cells[i].faces);
}
