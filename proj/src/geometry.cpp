#include "polystab/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polystab {
namespace {

struct Rref {
  std::vector<QVec> rows;  // nonzero rows, fully reduced
  std::vector<int> pivots;
};

// Full reduced row echelon form; exact.
Rref rref(std::vector<QVec> rows) {
  Rref out;
  if (rows.empty()) return out;
  size_t dim = rows[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < dim && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Rat inv = 1 / rows[rank][col];
    for (size_t j = col; j < dim; ++j) rows[rank][j] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rat f = rows[r][col];
      for (size_t j = col; j < dim; ++j) rows[r][j] -= f * rows[rank][j];
    }
    out.pivots.push_back(static_cast<int>(col));
    ++rank;
  }
  rows.resize(rank);
  out.rows = std::move(rows);
  return out;
}

// Solve the square system a*x = b by elimination; a must be invertible.
QVec solve_linear(std::vector<QVec> a, QVec b) {
  size_t n = b.size();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw DomainError("singular linear system");
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    Rat inv = 1 / a[c][c];
    for (size_t j = c; j < n; ++j) a[c][j] *= inv;
    b[c] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  return b;
}

Rat dot_ll(const std::vector<long long>& u, const QVec& x) {
  Rat s = 0;
  for (size_t i = 0; i < u.size(); ++i) s += Rat(static_cast<long>(u[i])) * x[i];
  return s;
}

// Facet of the full-dimensional hull in local coordinates.
struct LocalFacet {
  std::vector<long long> normal;  // primitive integer, inward (<n,y> >= offset)
  Rat offset;
};

bool facet_less(const LocalFacet& a, const LocalFacet& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.offset < b.offset;
}

Rat cross2(const QVec& o, const QVec& a, const QVec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew monotone chain on exact coordinates; returns the CCW vertex cycle
// with collinear interior points dropped.
std::vector<QVec> hull_2d(std::vector<QVec> pts) {
  std::sort(pts.begin(), pts.end());
  std::vector<QVec> h;
  for (const auto& p : pts) {
    while (h.size() >= 2 && cross2(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
    h.push_back(p);
  }
  size_t lower = h.size() + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (h.size() >= lower && cross2(h[h.size() - 2], h.back(), *it) <= 0) h.pop_back();
    h.push_back(*it);
  }
  h.pop_back();  // last point repeats the first
  return h;
}

void full_dim_hull(const std::vector<QVec>& ys, int k, std::vector<size_t>& vertex_idx,
                   std::vector<LocalFacet>& facets) {
  size_t m = ys.size();
  if (k == 1) {
    size_t lo = 0, hi = 0;
    for (size_t i = 1; i < m; ++i) {
      if (ys[i][0] < ys[lo][0]) lo = i;
      if (ys[i][0] > ys[hi][0]) hi = i;
    }
    vertex_idx = {lo, hi};
    facets.push_back({{1}, ys[lo][0]});
    facets.push_back({{-1}, -ys[hi][0]});
    return;
  }
  if (k == 2) {
    std::vector<QVec> cyc = hull_2d(ys);
    std::map<QVec, size_t> index;
    for (size_t i = 0; i < m; ++i) index.emplace(ys[i], i);
    for (const auto& v : cyc) vertex_idx.push_back(index.at(v));
    for (size_t i = 0; i < cyc.size(); ++i) {
      const QVec& a = cyc[i];
      const QVec& b = cyc[(i + 1) % cyc.size()];
      QVec n = {a[1] - b[1], b[0] - a[0]};  // inward for a CCW cycle
      auto ni = primitive_integer(n);
      facets.push_back({ni, dot_ll(ni, a)});
    }
    return;
  }

  // k >= 3: enumerate candidate facet hyperplanes through k-subsets of the
  // points and keep the one-sided ones. Input sizes here are small.
  std::set<std::pair<std::vector<long long>, Rat>> seen;
  std::vector<size_t> idx(static_cast<size_t>(k));
  auto consider = [&](const std::vector<size_t>& sel) {
    std::vector<QVec> dirs;
    for (size_t i = 1; i < sel.size(); ++i) {
      QVec d = ys[sel[i]];
      for (int j = 0; j < k; ++j) d[static_cast<size_t>(j)] -= ys[sel[0]][static_cast<size_t>(j)];
      dirs.push_back(std::move(d));
    }
    Rref r = rref(std::move(dirs));
    if (static_cast<int>(r.rows.size()) != k - 1) return;  // not a hyperplane spanner
    // 1-dimensional nullspace gives the normal
    QVec n(static_cast<size_t>(k), Rat(0));
    std::vector<bool> is_pivot(static_cast<size_t>(k), false);
    for (int p : r.pivots) is_pivot[static_cast<size_t>(p)] = true;
    int free_col = -1;
    for (int j = 0; j < k; ++j)
      if (!is_pivot[static_cast<size_t>(j)]) free_col = j;
    n[static_cast<size_t>(free_col)] = 1;
    for (size_t rr = 0; rr < r.rows.size(); ++rr)
      n[static_cast<size_t>(r.pivots[rr])] = -r.rows[rr][static_cast<size_t>(free_col)];
    Rat c = dot(n, ys[sel[0]]);
    bool above = false, below = false;
    for (const auto& y : ys) {
      Rat s = dot(n, y);
      if (s > c) above = true;
      if (s < c) below = true;
      if (above && below) return;
    }
    if (above == below) return;  // all points on the hyperplane
    if (below) {
      for (auto& x : n) x = -x;
      c = -c;
    }
    auto ni = primitive_integer(n);
    Rat off = dot_ll(ni, ys[sel[0]]);
    if (seen.emplace(ni, off).second) facets.push_back({ni, off});
  };
  // iterate k-subsets
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  while (true) {
    consider(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - static_cast<size_t>(k - pos)) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (size_t j = static_cast<size_t>(pos) + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
  }

  // a point is a vertex iff its active facet normals span the space
  for (size_t i = 0; i < m; ++i) {
    std::vector<QVec> active;
    for (const auto& f : facets)
      if (dot_ll(f.normal, ys[i]) == f.offset) active.push_back(to_qvec(f.normal));
    if (static_cast<int>(rref(std::move(active)).rows.size()) == k) vertex_idx.push_back(i);
  }
}

}  // namespace

LatticePolytope convex_hull(const std::vector<QVec>& points) {
  if (points.empty()) throw DomainError("convex hull of empty point set");
  size_t dim = points[0].size();
  if (dim == 0) throw DomainError("convex hull in dimension zero");
  for (const auto& p : points)
    if (p.size() != dim) throw DomainError("convex hull: mixed dimensions");

  std::vector<QVec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolytope poly;
  poly.ambient_dim = static_cast<int>(dim);
  const QVec& p0 = pts[0];

  std::vector<QVec> dirs;
  for (size_t i = 1; i < pts.size(); ++i) {
    QVec d = pts[i];
    for (size_t j = 0; j < dim; ++j) d[j] -= p0[j];
    dirs.push_back(std::move(d));
  }
  Rref basis = rref(std::move(dirs));
  int k = static_cast<int>(basis.rows.size());
  poly.affine_dim = k;

  // affine-hull equalities: nullspace of the basis rows
  {
    std::vector<bool> is_pivot(dim, false);
    for (int p : basis.pivots) is_pivot[static_cast<size_t>(p)] = true;
    for (size_t f = 0; f < dim; ++f) {
      if (is_pivot[f]) continue;
      QVec e(dim, Rat(0));
      e[f] = 1;
      for (size_t r = 0; r < basis.rows.size(); ++r)
        e[static_cast<size_t>(basis.pivots[r])] = -basis.rows[r][f];
      auto ei = primitive_integer(e);
      if (ei[0] < 0 || (ei[0] == 0 && [&] {  // first nonzero positive
            for (long long x : ei)
              if (x != 0) return x < 0;
            return false;
          }()))
        for (auto& x : ei) x = -x;
      poly.equalities.push_back({ei, dot_ll(ei, p0)});
    }
    std::sort(poly.equalities.begin(), poly.equalities.end(), [](const Equality& a, const Equality& b) {
      if (a.normal != b.normal) return a.normal < b.normal;
      return a.offset < b.offset;
    });
  }

  if (k == 0) {
    poly.vertices = {p0};
    return poly;
  }

  // local coordinates: RREF pivots read coefficients off directly
  std::vector<QVec> ys;
  ys.reserve(pts.size());
  for (const auto& p : pts) {
    QVec y(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j)
      y[static_cast<size_t>(j)] = p[static_cast<size_t>(basis.pivots[j])] - p0[static_cast<size_t>(basis.pivots[j])];
    ys.push_back(std::move(y));
  }

  std::vector<size_t> vertex_idx;
  std::vector<LocalFacet> local;
  full_dim_hull(ys, k, vertex_idx, local);

  for (size_t i : vertex_idx) poly.vertices.push_back(pts[i]);
  std::sort(poly.vertices.begin(), poly.vertices.end());
  poly.vertices.erase(std::unique(poly.vertices.begin(), poly.vertices.end()), poly.vertices.end());

  // lift local facets: choose the ambient normal inside the span of the
  // basis rows (Gram solve), which makes the lift canonical
  std::vector<QVec> gram(static_cast<size_t>(k), QVec(static_cast<size_t>(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      gram[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          dot(basis.rows[static_cast<size_t>(i)], basis.rows[static_cast<size_t>(j)]);
  for (const auto& f : local) {
    QVec rhs(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) rhs[static_cast<size_t>(j)] = Rat(static_cast<long>(f.normal[static_cast<size_t>(j)]));
    QVec z = solve_linear(gram, rhs);
    QVec ambient(dim, Rat(0));
    for (int i = 0; i < k; ++i)
      for (size_t j = 0; j < dim; ++j) ambient[j] += z[static_cast<size_t>(i)] * basis.rows[static_cast<size_t>(i)][j];
    auto ni = primitive_integer(ambient);
    // positive rescaling keeps orientation; recompute the offset from a
    // supporting vertex to stay exact
    Rat scale = 0;
    for (size_t j = 0; j < dim; ++j)
      if (ambient[j] != 0) {
        scale = Rat(static_cast<long>(ni[j])) / ambient[j];
        break;
      }
    Rat off = (f.offset + dot(ambient, p0)) * scale;
    poly.halfspaces.push_back({ni, off});
  }
  std::sort(poly.halfspaces.begin(), poly.halfspaces.end(), [](const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  });

  // exactness audit: every vertex must satisfy every constraint
  for (const auto& v : poly.vertices) {
    for (const auto& h : poly.halfspaces)
      if (dot_ll(h.normal, v) < h.offset) throw std::logic_error("hull: vertex violates facet");
    for (const auto& e : poly.equalities)
      if (dot_ll(e.normal, v) != e.offset) throw std::logic_error("hull: vertex violates equality");
  }
  return poly;
}

Rat minimize_linear(const LatticePolytope& p, const std::vector<long long>& u) {
  if (static_cast<int>(u.size()) != p.ambient_dim)
    throw DomainError("minimize_linear: dimension mismatch");
  Rat best;
  bool first = true;
  for (const auto& v : p.vertices) {
    Rat s = dot_ll(u, v);
    if (first || s < best) {
      best = s;
      first = false;
    }
  }
  if (first) throw DomainError("minimize_linear: polytope has no vertices");
  return best;
}

Rat minimize_linear(const LatticePolytope& p, const QVec& u) {
  if (static_cast<int>(u.size()) != p.ambient_dim)
    throw DomainError("minimize_linear: dimension mismatch");
  Rat best;
  bool first = true;
  for (const auto& v : p.vertices) {
    Rat s = dot(u, v);
    if (first || s < best) {
      best = s;
      first = false;
    }
  }
  if (first) throw DomainError("minimize_linear: polytope has no vertices");
  return best;
}

ContainmentResult contains_polytope(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim != q.ambient_dim) throw DomainError("contains_polytope: dimension mismatch");
  std::optional<std::vector<long long>> cert;
  for (const auto& v : p.vertices) {
    for (const auto& e : q.equalities) {
      Rat s = dot_ll(e.normal, v);
      if (s == e.offset) continue;
      cert = e.normal;
      if (s > e.offset)
        for (auto& x : *cert) x = -x;
      break;
    }
    if (cert) break;
    for (const auto& h : q.halfspaces) {
      if (dot_ll(h.normal, v) >= h.offset) continue;
      cert = h.normal;
      break;
    }
    if (cert) break;
  }
  ContainmentResult r;
  if (!cert) {
    r.contained = true;
    return r;
  }
  r.contained = false;
  r.certificate = std::move(*cert);
  r.min_p = minimize_linear(p, *r.certificate);
  r.min_q = minimize_linear(q, *r.certificate);
  if (!(r.min_q > r.min_p)) throw std::logic_error("separation certificate failed to replay");
  return r;
}

QVec quotient_project(const QVec& x) {
  if (x.empty()) throw DomainError("quotient_project: empty vector");
  return project_sum_zero(x);
}

LatticePolytope scale_polytope(const LatticePolytope& p, const Rat& k) {
  if (k <= 0) throw DomainError("scale_polytope: factor must be positive");
  LatticePolytope out = p;
  for (auto& v : out.vertices)
    for (auto& c : v) c *= k;
  for (auto& h : out.halfspaces) h.offset *= k;
  for (auto& e : out.equalities) e.offset *= k;
  return out;
}

}  // namespace polystab
