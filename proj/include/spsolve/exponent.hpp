#ifndef SPSOLVE_EXPONENT_HPP
#define SPSOLVE_EXPONENT_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace spsolve {

/// Integer exponent vector of a Laurent monomial; coordinates may be negative.
struct Exponent {
  std::vector<std::int64_t> coords;

  Exponent() = default;
  explicit Exponent(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  Exponent(std::initializer_list<std::int64_t> c) : coords(c) {}

  std::size_t dim() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::int64_t& operator[](std::size_t i) { return coords[i]; }

  std::int64_t total_degree() const {
    return std::accumulate(coords.begin(), coords.end(), std::int64_t{0});
  }

  friend Exponent operator+(const Exponent& a, const Exponent& b) {
    Exponent r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
  }
  friend Exponent operator-(const Exponent& a, const Exponent& b) {
    Exponent r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
  }
  friend bool operator==(const Exponent& a, const Exponent& b) = default;
  // lexicographic; gives the deterministic iteration order of term maps
  friend auto operator<=>(const Exponent& a, const Exponent& b) {
    return a.coords <=> b.coords;
  }
};

inline Exponent zero_exponent(std::size_t n) {
  return Exponent(std::vector<std::int64_t>(n, 0));
}

inline Exponent unit_exponent(std::size_t n, std::size_t i) {
  Exponent e = zero_exponent(n);
  e[i] = 1;
  return e;
}

/// Graded reverse-lexicographic comparison on raw coordinate vectors.
/// Returns true when a < b.
inline bool grevlex_less(const Exponent& a, const Exponent& b) {
  auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  for (std::size_t i = a.dim(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

/// Pure lexicographic x1 > x2 > ... comparison; returns true when a < b.
inline bool lex_less(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace spsolve

#endif
