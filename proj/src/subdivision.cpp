#include "spsolve/subdivision.hpp"

#include "spsolve/errors.hpp"

#include <algorithm>
#include <random>

namespace spsolve {

Lifting random_lifting(const std::vector<std::set<Exponent>>& supports,
                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(0, (std::int64_t{1} << 20) - 1);
  Lifting l;
  l.seed = seed;
  for (const auto& a : supports) {
    std::map<Exponent, std::int64_t> h;
    for (const auto& p : a) h[p] = dist(rng);
    l.heights.push_back(std::move(h));
  }
  return l;
}

namespace {

// affine rank of a point set
std::size_t face_dim(const std::vector<Exponent>& pts) {
  if (pts.empty()) return 0;
  std::vector<IPoint> ip;
  for (const auto& e : pts) {
    IPoint q;
    for (std::size_t i = 0; i < e.dim(); ++i) q.emplace_back(e[i]);
    ip.push_back(std::move(q));
  }
  return static_cast<std::size_t>(convex_hull(ip).dim);
}

MixedSubdivision build(const std::vector<std::set<Exponent>>& supports,
                       const Lifting& lifting) {
  if (supports.empty())
    throw std::invalid_argument("mixed_subdivision: no supports");
  std::size_t n = supports[0].begin()->dim();
  for (const auto& a : supports)
    if (a.empty() || a.begin()->dim() != n)
      throw std::invalid_argument("mixed_subdivision: bad support");

  // minimal lifted height per Minkowski-sum position; only those points can
  // lie on the lower hull
  std::map<Exponent, std::int64_t> min_height{{zero_exponent(n), 0}};
  for (std::size_t i = 0; i < supports.size(); ++i) {
    std::map<Exponent, std::int64_t> next;
    for (const auto& [pos, h] : min_height)
      for (const auto& p : supports[i]) {
        Exponent q = pos + p;
        std::int64_t hh = h + lifting.heights[i].at(p);
        auto it = next.find(q);
        if (it == next.end() || hh < it->second) next[q] = hh;
      }
    min_height = std::move(next);
  }

  std::vector<IPoint> lifted;
  lifted.reserve(min_height.size());
  for (const auto& [pos, h] : min_height) {
    IPoint q;
    q.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) q.emplace_back(pos[i]);
    q.emplace_back(h);
    lifted.push_back(std::move(q));
  }

  HullResult hull = convex_hull(lifted);
  if (hull.dim != static_cast<int>(n) + 1)
    throw DegenerateLifting("lifted point set is not full-dimensional");

  MixedSubdivision sub;
  sub.lifting = lifting;
  for (const auto& f : hull.facets) {
    if (f.normal[n] >= 0) continue;  // keep lower facets only
    Cell cell;
    std::size_t total_dim = 0;
    for (std::size_t i = 0; i < supports.size(); ++i) {
      // the face of A_i selected by this facet normal
      bool first = true;
      Integer best;
      std::vector<Exponent> face;
      for (const auto& p : supports[i]) {
        Integer val = f.normal[n] * Integer(lifting.heights[i].at(p));
        for (std::size_t k = 0; k < n; ++k) val += f.normal[k] * Integer(p[k]);
        if (first || val > best) {
          best = val;
          face.clear();
          first = false;
        }
        if (val == best) face.push_back(p);
      }
      std::size_t d = face_dim(face);
      if (d + 1 != face.size())
        throw DegenerateLifting("cell face is affinely dependent");
      total_dim += d;
      cell.type.push_back(static_cast<int>(d));
      cell.faces.push_back(std::move(face));
    }
    if (total_dim != n)
      throw DegenerateLifting("cell is not fine");

    std::vector<Exponent> body{zero_exponent(n)};
    for (const auto& face : cell.faces) {
      std::vector<Exponent> next;
      for (const auto& s : body)
        for (const auto& p : face) next.push_back(s + p);
      body = std::move(next);
    }
    cell.body = LatticePolytope::from_points(body);
    sub.cells.push_back(std::move(cell));
  }

  std::sort(sub.cells.begin(), sub.cells.end(),
            [](const Cell& a, const Cell& b) { return a.faces < b.faces; });
  return sub;
}

}  // namespace

MixedSubdivision mixed_subdivision(const std::vector<std::set<Exponent>>& supports,
                                   std::uint64_t seed, int max_retries) {
  for (int attempt = 0;; ++attempt) {
    try {
      return build(supports, random_lifting(supports, seed + attempt));
    } catch (const DegenerateLifting&) {
      if (attempt >= max_retries) throw;
    }
  }
}

std::vector<std::size_t> mixed_cell_indices(const MixedSubdivision& sub) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sub.cells.size(); ++i) {
    const auto& t = sub.cells[i].type;
    if (std::all_of(t.begin(), t.end(), [](int d) { return d == 1; }))
      out.push_back(i);
  }
  return out;
}

Integer cell_volume(const Cell& cell) {
  std::size_t n = cell.faces.size();
  std::vector<std::vector<Integer>> m;
  for (const auto& face : cell.faces) {
    if (face.size() != 2)
      throw std::invalid_argument("cell_volume: cell is not fully mixed");
    std::vector<Integer> row;
    for (std::size_t k = 0; k < n; ++k)
      row.emplace_back(face[1][k] - face[0][k]);
    m.push_back(std::move(row));
  }
  // fraction-free determinant
  Integer denom = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        if (k > 0) m[i][j] /= denom;
      }
    denom = m[k][k];
  }
  return abs(m[n - 1][n - 1]);
}

std::int64_t mixed_volume_from_cells(const MixedSubdivision& sub) {
  Integer total = 0;
  for (auto i : mixed_cell_indices(sub)) total += cell_volume(sub.cells[i]);
  return static_cast<std::int64_t>(total.get_si());
}

std::vector<std::size_t> locate(const MixedSubdivision& sub,
                                const std::vector<Rational>& point) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sub.cells.size(); ++i)
    if (sub.cells[i].body.contains(point)) out.push_back(i);
  return out;
}

}  // namespace spsolve
