#include "spsolve/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace spsolve {

namespace {

Integer dot(const std::vector<Integer>& a, const IPoint& p) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * p[i];
  return s;
}

Rational dot_q(const std::vector<Integer>& a, const std::vector<Rational>& p) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * p[i];
  return s;
}

using QMatrix = std::vector<std::vector<Rational>>;

// row echelon form in place; returns pivot column indices
std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t ncols = m[0].size(), row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < ncols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

QMatrix direction_matrix(const std::vector<IPoint>& pts,
                         const std::vector<std::size_t>& idx,
                         const IPoint& base) {
  QMatrix m;
  for (std::size_t k : idx) {
    std::vector<Rational> row;
    row.reserve(base.size());
    for (std::size_t i = 0; i < base.size(); ++i)
      row.emplace_back(pts[k][i] - base[i]);
    m.push_back(std::move(row));
  }
  return m;
}

std::size_t affine_rank(const std::vector<IPoint>& pts,
                        const std::vector<std::size_t>& idx,
                        const IPoint& base) {
  QMatrix m = direction_matrix(pts, idx, base);
  return rref(m).size();
}

// integer basis of {u : rows * u = 0}
std::vector<std::vector<Integer>> nullspace(QMatrix m, std::size_t ncols) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Integer>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> u(ncols, Rational(0));
    u[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      u[pivots[r]] = r < m.size() ? -m[r][free] : Rational(0);
    Integer lcm = 1;
    for (const auto& v : u) lcm = lcm / gcd(lcm, v.get_den()) * v.get_den();
    std::vector<Integer> ui(ncols);
    for (std::size_t i = 0; i < ncols; ++i) {
      Rational scaled = u[i] * Rational(lcm);
      ui[i] = scaled.get_num();
    }
    basis.push_back(std::move(ui));
  }
  return basis;
}

void normalize_halfspace(HalfSpace& h) {
  Integer g = 0;
  for (const auto& v : h.normal) g = gcd(g, v);
  g = gcd(g, h.offset);
  if (g > 1) {
    for (auto& v : h.normal) v /= g;
    h.offset /= g;
  }
}

bool parallel(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

struct FacetKey {
  std::vector<Integer> normal;
  Integer offset;
  bool operator<(const FacetKey& o) const {
    if (normal != o.normal) return normal < o.normal;
    return offset < o.offset;
  }
};

// Rotates a supporting hyperplane (a, c) around the affine hull of its tight
// set towards the point maximizing beta/(-alpha); the tight set's affine
// dimension strictly grows each step.
void pivot_step(const std::vector<IPoint>& pts, std::vector<Integer>& a,
                Integer& c, const std::vector<Integer>& u, const IPoint& r0) {
  bool found = false;
  Rational best_key;
  std::size_t best = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    Integer alpha = dot(a, pts[k]) - c;
    if (alpha >= 0) continue;  // alpha <= 0 always; equality points skipped
    Integer beta = dot(u, pts[k]) - dot(u, r0);
    Rational key = Rational(beta) / Rational(-alpha);
    if (!found || key > best_key) {
      found = true;
      best_key = key;
      best = k;
    }
  }
  if (!found) throw std::logic_error("hull pivot: no candidate point");
  Integer alpha = dot(a, pts[best]) - c;
  Integer beta = dot(u, pts[best]) - dot(u, r0);
  std::vector<Integer> a2(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) a2[i] = beta * a[i] - alpha * u[i];
  a = std::move(a2);
  c = dot(a, pts[best]);
}

HullResult hull_full_dim(const std::vector<IPoint>& pts, std::size_t n);

// gift-wrapping facet enumeration entry point (arbitrary affine dimension)
HullResult hull_impl(const std::vector<IPoint>& pts) {
  HullResult res;
  if (pts.empty()) throw std::invalid_argument("convex_hull: empty point set");
  std::size_t n = pts[0].size();

  // unique points, remembering a representative input index
  std::map<IPoint, std::size_t> uniq;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!uniq.count(pts[i])) uniq[pts[i]] = i;
  std::vector<IPoint> up;
  std::vector<std::size_t> rep;
  for (const auto& [p, i] : uniq) {
    up.push_back(p);
    rep.push_back(i);
  }

  std::vector<std::size_t> all(up.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const IPoint& base = up[0];
  QMatrix dirs = direction_matrix(up, all, base);
  auto pivots = rref(dirs);
  std::size_t k = pivots.size();
  res.dim = static_cast<int>(k);

  if (k == 0) {
    res.vertices = {rep[0]};
    for (std::size_t j = 0; j < n; ++j) {
      HalfSpace eq;
      eq.normal.assign(n, Integer(0));
      eq.normal[j] = 1;
      eq.offset = base[j];
      res.equalities.push_back(std::move(eq));
    }
    return res;
  }

  if (k < n) {
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    // one affine relation per non-pivot coordinate
    for (std::size_t j = 0; j < n; ++j) {
      if (is_pivot[j]) continue;
      std::vector<Rational> u(n, Rational(0));
      u[j] = 1;
      for (std::size_t r = 0; r < k; ++r) u[pivots[r]] = -dirs[r][j];
      Integer lcm = 1;
      for (const auto& v : u) lcm = lcm / gcd(lcm, v.get_den()) * v.get_den();
      HalfSpace eq;
      eq.normal.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        Rational scaled = u[i] * Rational(lcm);
        eq.normal[i] = scaled.get_num();
      }
      eq.offset = dot(eq.normal, base);
      normalize_halfspace(eq);
      res.equalities.push_back(std::move(eq));
    }
    // recurse on the pivot coordinates
    std::vector<IPoint> proj;
    proj.reserve(up.size());
    for (const auto& p : up) {
      IPoint q(k);
      for (std::size_t r = 0; r < k; ++r) q[r] = p[pivots[r]];
      proj.push_back(std::move(q));
    }
    HullResult sub = hull_full_dim(proj, k);
    for (auto v : sub.vertices) res.vertices.push_back(rep[v]);
    for (auto& f : sub.facets) {
      HalfSpace lifted;
      lifted.normal.assign(n, Integer(0));
      for (std::size_t r = 0; r < k; ++r) lifted.normal[pivots[r]] = f.normal[r];
      lifted.offset = f.offset;
      res.facets.push_back(std::move(lifted));
    }
    return res;
  }

  HullResult full = hull_full_dim(up, n);
  res.facets = std::move(full.facets);
  for (auto v : full.vertices) res.vertices.push_back(rep[v]);
  return res;
}

HullResult hull_full_dim(const std::vector<IPoint>& pts, std::size_t n) {
  HullResult res;
  res.dim = static_cast<int>(n);

  if (n == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    res.vertices = {lo, hi};
    if (lo == hi) res.vertices = {lo};
    res.facets.push_back({{Integer(1)}, pts[hi][0]});
    res.facets.push_back({{Integer(-1)}, -pts[lo][0]});
    return res;
  }

  // initial facet: rotate a supporting hyperplane until its tight set has
  // affine dimension n-1
  std::vector<Integer> a(n, Integer(0));
  a[0] = -1;
  Integer c = dot(a, pts[0]);
  for (const auto& p : pts) c = std::max(c, dot(a, p));
  while (true) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(a, pts[i]) == c) tight.push_back(i);
    if (affine_rank(pts, tight, pts[tight[0]]) == n - 1) break;
    QMatrix dirs = direction_matrix(pts, tight, pts[tight[0]]);
    auto ns = nullspace(std::move(dirs), n);
    const std::vector<Integer>* u = nullptr;
    for (const auto& cand : ns)
      if (!parallel(cand, a)) {
        u = &cand;
        break;
      }
    if (!u) throw std::logic_error("hull: no rotation direction");
    pivot_step(pts, a, c, *u, pts[tight[0]]);
  }

  // BFS over facets through ridge pivoting
  std::map<FacetKey, bool> seen;
  std::vector<FacetKey> queue;
  auto push = [&](std::vector<Integer> normal, Integer offset) {
    HalfSpace h{std::move(normal), std::move(offset)};
    normalize_halfspace(h);
    FacetKey key{h.normal, h.offset};
    if (!seen.count(key)) {
      seen[key] = true;
      queue.push_back(key);
    }
  };
  push(a, c);

  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const FacetKey f = queue[qi];
    res.facets.push_back({f.normal, f.offset});
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(f.normal, pts[i]) == f.offset) tight.push_back(i);

    // drop a coordinate with nonzero normal entry; injective on the facet
    std::size_t drop = 0;
    while (f.normal[drop] == 0) ++drop;
    std::vector<IPoint> proj;
    proj.reserve(tight.size());
    for (auto t : tight) {
      IPoint q;
      q.reserve(n - 1);
      for (std::size_t i = 0; i < n; ++i)
        if (i != drop) q.push_back(pts[t][i]);
      proj.push_back(std::move(q));
    }
    HullResult ridge_hull = hull_impl(proj);

    for (const auto& ridge : ridge_hull.facets) {
      std::vector<Integer> u(n, Integer(0));
      {
        std::size_t r = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (i != drop) u[i] = ridge.normal[r++];
      }
      // a tight point of the ridge serves as base point r0
      std::size_t r0 = tight[0];
      bool have_r0 = false;
      for (std::size_t t = 0; t < tight.size(); ++t) {
        Integer v = 0;
        for (std::size_t i = 0; i < n - 1; ++i) v += ridge.normal[i] * proj[t][i];
        if (v == ridge.offset) {
          r0 = tight[t];
          have_r0 = true;
          break;
        }
      }
      if (!have_r0) throw std::logic_error("hull: ridge without tight point");

      bool found = false;
      Rational best_key;
      std::size_t best = 0;
      Integer ur0 = dot(u, pts[r0]);
      for (std::size_t p = 0; p < pts.size(); ++p) {
        Integer alpha = dot(f.normal, pts[p]) - f.offset;
        if (alpha >= 0) continue;
        Integer beta = dot(u, pts[p]) - ur0;
        Rational key = Rational(beta) / Rational(-alpha);
        if (!found || key > best_key) {
          found = true;
          best_key = key;
          best = p;
        }
      }
      if (!found) throw std::logic_error("hull: open ridge on full-dim hull");
      Integer alpha = dot(f.normal, pts[best]) - f.offset;
      Integer beta = dot(u, pts[best]) - ur0;
      std::vector<Integer> nn(n);
      for (std::size_t i = 0; i < n; ++i)
        nn[i] = beta * f.normal[i] - alpha * u[i];
      Integer off = dot(nn, pts[best]);
      push(std::move(nn), std::move(off));
    }
  }

  // vertices: points whose tight facet normals span R^n
  for (std::size_t p = 0; p < pts.size(); ++p) {
    QMatrix tight_normals;
    for (const auto& f : res.facets) {
      if (dot(f.normal, pts[p]) != f.offset) continue;
      std::vector<Rational> row;
      row.reserve(n);
      for (const auto& v : f.normal) row.emplace_back(v);
      tight_normals.push_back(std::move(row));
    }
    if (tight_normals.size() >= n && rref(tight_normals).size() == n)
      res.vertices.push_back(p);
  }
  return res;
}

}  // namespace

HullResult convex_hull(const std::vector<IPoint>& pts) { return hull_impl(pts); }

LatticePolytope LatticePolytope::from_points(const std::vector<Exponent>& pts) {
  if (pts.empty())
    throw std::invalid_argument("polytope from empty point set");
  std::vector<IPoint> ip;
  ip.reserve(pts.size());
  for (const auto& e : pts) {
    IPoint p;
    p.reserve(e.dim());
    for (std::size_t i = 0; i < e.dim(); ++i) p.emplace_back(e[i]);
    ip.push_back(std::move(p));
  }
  HullResult h = convex_hull(ip);
  LatticePolytope poly;
  poly.ambient_ = pts[0].dim();
  poly.dim_ = h.dim;
  for (auto v : h.vertices) poly.vertices_.push_back(pts[v]);
  std::sort(poly.vertices_.begin(), poly.vertices_.end());
  poly.halfspaces_ = h.facets;
  for (const auto& eq : h.equalities) {
    poly.halfspaces_.push_back(eq);
    HalfSpace rev;
    rev.normal.reserve(eq.normal.size());
    for (const auto& v : eq.normal) rev.normal.push_back(-v);
    rev.offset = -eq.offset;
    poly.halfspaces_.push_back(std::move(rev));
  }
  return poly;
}

bool LatticePolytope::contains(const Exponent& p) const {
  for (const auto& h : halfspaces_) {
    Integer s = 0;
    for (std::size_t i = 0; i < ambient_; ++i) s += h.normal[i] * p[i];
    if (s > h.offset) return false;
  }
  return true;
}

bool LatticePolytope::contains(const std::vector<Rational>& p) const {
  for (const auto& h : halfspaces_)
    if (dot_q(h.normal, p) > Rational(h.offset)) return false;
  return true;
}

bool LatticePolytope::has_zero_vertex() const {
  Exponent z = zero_exponent(ambient_);
  return std::find(vertices_.begin(), vertices_.end(), z) != vertices_.end();
}

LatticePolytope LatticePolytope::translated(const Exponent& t) const {
  LatticePolytope r = *this;
  for (auto& v : r.vertices_) v = v + t;
  for (auto& h : r.halfspaces_) {
    Integer shift = 0;
    for (std::size_t i = 0; i < ambient_; ++i) shift += h.normal[i] * t[i];
    h.offset += shift;
  }
  return r;
}

LatticePolytope newton_polytope(const SparsePoly& f) {
  if (f.is_zero())
    throw std::invalid_argument("Newton polytope of the zero polynomial");
  std::vector<Exponent> pts;
  for (const auto& [e, c] : f.terms()) pts.push_back(e);
  return LatticePolytope::from_points(pts);
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw std::invalid_argument("Minkowski sum: ambient dimension mismatch");
  std::vector<Exponent> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& v : p.vertices())
    for (const auto& w : q.vertices()) sums.push_back(v + w);
  return LatticePolytope::from_points(sums);
}

LatticePolytope standard_simplex(std::size_t n, std::int64_t dilation) {
  std::vector<Exponent> pts{zero_exponent(n)};
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e = zero_exponent(n);
    e[i] = dilation;
    pts.push_back(e);
  }
  return LatticePolytope::from_points(pts);
}

LatticePolytope dilated(const LatticePolytope& p, std::int64_t k) {
  if (k == 0)
    return LatticePolytope::from_points({zero_exponent(p.ambient_dim())});
  std::vector<Exponent> pts;
  for (const auto& v : p.vertices()) {
    Exponent e = v;
    for (std::size_t i = 0; i < e.dim(); ++i) e[i] *= k;
    pts.push_back(e);
  }
  return LatticePolytope::from_points(pts);
}

std::set<Exponent> lattice_points(const LatticePolytope& p) {
  std::set<Exponent> out;
  std::size_t n = p.ambient_dim();
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = hi[i] = p.vertices()[0][i];
    for (const auto& v : p.vertices()) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  Integer box = 1;
  for (std::size_t i = 0; i < n; ++i) box *= Integer(hi[i] - lo[i] + 1);
  if (box > 50'000'000)
    throw std::runtime_error("lattice_points: bounding box too large");

  Exponent cur(lo);
  while (true) {
    if (p.contains(cur)) out.insert(cur);
    std::size_t i = 0;
    while (i < n && cur[i] == hi[i]) {
      cur[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++cur[i];
  }
  return out;
}

std::int64_t mixed_volume(const std::vector<LatticePolytope>& ps) {
  if (ps.empty()) throw std::invalid_argument("mixed_volume: empty list");
  std::size_t n = ps[0].ambient_dim();
  if (ps.size() != n)
    throw std::invalid_argument("mixed_volume: need n polytopes in R^n");
  for (const auto& p : ps)
    if (p.ambient_dim() != n)
      throw std::invalid_argument("mixed_volume: ambient dimension mismatch");

  // cache Minkowski sums per subset mask
  std::vector<LatticePolytope> sums(std::size_t{1} << n);
  std::int64_t acc = (n % 2 == 0) ? 1 : -1;  // the empty-subset term (-1)^n
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    std::size_t low = mask & (~mask + 1);
    std::size_t ilow = 0;
    while ((std::size_t{1} << ilow) != low) ++ilow;
    if (mask == low)
      sums[mask] = ps[ilow];
    else
      sums[mask] = minkowski_sum(sums[mask ^ low], ps[ilow]);
    std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
    std::int64_t count = static_cast<std::int64_t>(lattice_points(sums[mask]).size());
    acc += ((n - k) % 2 == 0 ? 1 : -1) * count;
  }
  return acc;
}

namespace {

Integer det_int(std::vector<std::vector<Integer>> m) {
  // Bareiss fraction-free elimination
  std::size_t n = m.size();
  Integer denom = 1, sign = 1;
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
  return sign * m[n - 1][n - 1];
}

// index tuples of d-simplices triangulating conv(pts); pts must have affine
// dimension d in R^d coordinates given by `coords` per point
void triangulate(const std::vector<IPoint>& pts,
                 std::vector<std::vector<std::size_t>>& out) {
  std::size_t d = pts[0].size();
  HullResult h = convex_hull(pts);
  if (h.dim != static_cast<int>(d))
    throw std::logic_error("triangulate: degenerate input");
  if (d == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i] < pts[lo]) lo = i;
      if (pts[i] > pts[hi]) hi = i;
    }
    out.push_back({lo, hi});
    return;
  }
  std::size_t apex = h.vertices[0];
  for (const auto& f : h.facets) {
    if (dot(f.normal, pts[apex]) == f.offset) continue;  // cone only over far facets
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(f.normal, pts[i]) == f.offset) tight.push_back(i);
    std::size_t drop = 0;
    while (f.normal[drop] == 0) ++drop;
    std::vector<IPoint> proj;
    for (auto t : tight) {
      IPoint q;
      for (std::size_t i = 0; i < d; ++i)
        if (i != drop) q.push_back(pts[t][i]);
      proj.push_back(std::move(q));
    }
    std::vector<std::vector<std::size_t>> sub;
    triangulate(proj, sub);
    for (auto& s : sub) {
      std::vector<std::size_t> simplex{apex};
      for (auto i : s) simplex.push_back(tight[i]);
      out.push_back(std::move(simplex));
    }
  }
}

}  // namespace

Integer normalized_volume(const LatticePolytope& p) {
  std::size_t n = p.ambient_dim();
  if (p.dim() < static_cast<int>(n)) return 0;
  std::vector<Exponent> pts(p.vertices());
  std::vector<IPoint> ip;
  for (const auto& e : pts) {
    IPoint q;
    for (std::size_t i = 0; i < n; ++i) q.emplace_back(e[i]);
    ip.push_back(std::move(q));
  }
  std::vector<std::vector<std::size_t>> simplices;
  triangulate(ip, simplices);
  Integer vol = 0;
  for (const auto& s : simplices) {
    std::vector<std::vector<Integer>> m;
    for (std::size_t k = 1; k < s.size(); ++k) {
      std::vector<Integer> row;
      for (std::size_t i = 0; i < n; ++i) row.push_back(ip[s[k]][i] - ip[s[0]][i]);
      m.push_back(std::move(row));
    }
    vol += abs(det_int(std::move(m)));
  }
  return vol;
}

}  // namespace spsolve
