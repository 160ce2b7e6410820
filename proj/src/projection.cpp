#include "zonocut/projection.hpp"

#include <algorithm>
#include <map>

#include "zonocut/simplex.hpp"

namespace zono {

Rat cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

void Polygon2::canonicalize_rotation() {
  if (points.size() < 2) return;
  auto it = std::min_element(points.begin(), points.end());
  std::rotate(points.begin(), it, points.end());
}

Polygon2 hull2(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Polygon2 poly;
  if (pts.size() <= 2) {
    poly.points = std::move(pts);
    return poly;
  }
  std::vector<Vec2> h(2 * pts.size());
  size_t k = 0;
  for (const Vec2& p : pts) {  // lower hull
    while (k >= 2 && cross(h[k - 2], h[k - 1], p).sign() <= 0) --k;
    h[k++] = p;
  }
  size_t lower = k + 1;
  for (size_t i = pts.size() - 1; i-- > 0;) {  // upper hull
    const Vec2& p = pts[i];
    while (k >= lower && cross(h[k - 2], h[k - 1], p).sign() <= 0) --k;
    h[k++] = p;
  }
  h.resize(k - 1);  // last point equals the first
  poly.points = std::move(h);
  return poly;
}

std::pair<bool, SurvivalCertificate> survives(const DualZonotope& dz, const SignVector& face_sign, int k) {
  const int d = dz.dim();
  if (k < 1 || k >= d) throw std::invalid_argument("survives: require 1 <= k < d");
  RatMat N = normals_matrix(dz, face_sign);  // throws if not realizable
  RatMat T(N.rows(), d - k);
  for (int r = 0; r < N.rows(); ++r)
    for (int c = 0; c < d - k; ++c) T(r, c) = N(r, k + c);
  SurvivalCertificate cert;
  cert.face_sign = face_sign;
  cert.truncated_normals = T;
  bool ok = false;
  if (rank(T) == d - k) {
    cert.positive_combination = feasible_strictly_positive_combination(T);
    ok = cert.positive_combination.has_value();
  }
  return {ok, std::move(cert)};
}

Polygon2 shadow_polygon(const DualZonotope& dz) {
  if (dz.dim() < 2) throw std::invalid_argument("shadow_polygon: require d >= 2");
  std::vector<Vec2> pts;
  for (const DualVertex& v : dz.vertices()) pts.push_back({v.point[0], v.point[1]});
  return hull2(std::move(pts));
}

Polygon2 polar_polygon(const Polygon2& P) {
  if (P.degenerate()) throw std::invalid_argument("polar_polygon: degenerate polygon");
  const size_t n = P.points.size();
  Polygon2 out;
  out.points.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const Vec2& v = P.points[i];
    const Vec2& w = P.points[(i + 1) % n];
    Rat det = v.x * w.y - v.y * w.x;  // triangle (0, v, w) orientation
    if (det.sign() <= 0) throw std::invalid_argument("polar_polygon: origin not strictly interior");
    out.points.push_back({(w.y - v.y) / det, (v.x - w.x) / det});
  }
  out.canonicalize_rotation();
  return out;
}

Polygon2 section_polygon(const ArrangementMatrix& A) {
  DualZonotope dz(A);
  return polar_polygon(shadow_polygon(dz));
}

std::vector<SignVector> shadow_boundary_walk(const DualZonotope& dz) {
  if (dz.dim() < 3) throw std::invalid_argument("shadow_boundary_walk: require d >= 3");
  const std::vector<DualVertex>& verts = dz.vertices();
  Polygon2 hull = shadow_polygon(dz);
  if (hull.degenerate()) throw AmbiguousShadowError("shadow_boundary_walk: shadow is not full-dimensional");

  std::map<Vec2, std::vector<size_t>> by_proj;
  for (size_t i = 0; i < verts.size(); ++i)
    by_proj[{verts[i].point[0], verts[i].point[1]}].push_back(i);

  std::vector<size_t> cycle_verts;
  for (const Vec2& p : hull.points) {
    const std::vector<size_t>& owners = by_proj.at(p);
    if (owners.size() != 1)
      throw AmbiguousShadowError("shadow_boundary_walk: several vertices project to one shadow vertex");
    cycle_verts.push_back(owners[0]);
  }

  const size_t n = cycle_verts.size();
  std::vector<SignVector> cycle;
  for (size_t i = 0; i < n; ++i) {
    const DualVertex& a = verts[cycle_verts[i]];
    const DualVertex& b = verts[cycle_verts[(i + 1) % n]];
    // a point in the relative interior of the segment [a, b] labels the
    // smallest face containing both endpoints
    SignVector e = sign_map(dz.arrangement(), vec_add(a.point, b.point));
    if (!e.extends(a.sign) || !e.extends(b.sign) || face_dimension(dz, e) != 1)
      throw AmbiguousShadowError("shadow_boundary_walk: consecutive shadow vertices not joined by an edge");
    // a 2-face projecting onto this boundary segment would land a third
    // vertex inside it
    Vec2 p{a.point[0], a.point[1]}, q{b.point[0], b.point[1]};
    for (size_t w = 0; w < verts.size(); ++w) {
      if (w == cycle_verts[i] || w == cycle_verts[(i + 1) % n]) continue;
      Vec2 r{verts[w].point[0], verts[w].point[1]};
      if (cross(p, q, r).is_zero() && std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
          std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y))
        throw AmbiguousShadowError("shadow_boundary_walk: a higher-dimensional face projects onto a shadow edge");
    }
    cycle.push_back(std::move(e));
  }

  // canonical rotation: lexicographically smallest sign vector first
  size_t best = 0;
  for (size_t i = 1; i < n; ++i)
    if (cycle[i] < cycle[best]) best = i;
  std::rotate(cycle.begin(), cycle.begin() + best, cycle.end());
  return cycle;
}

unsigned long long facet_upper_bound(int m, int d) {
  if (m < d || d < 2) throw std::invalid_argument("facet_upper_bound: require m >= d >= 2");
  unsigned long long res = 1;
  for (int i = 0; i < d - 1; ++i) {
    unsigned __int128 t = static_cast<unsigned __int128>(res) * (m - i);
    t /= (i + 1);  // exact: the partial product is binomial(m, i+1)
    if (t > ~0ULL) throw std::overflow_error("facet_upper_bound: overflow");
    res = static_cast<unsigned long long>(t);
  }
  unsigned __int128 t = static_cast<unsigned __int128>(res) * 2;
  if (t > ~0ULL) throw std::overflow_error("facet_upper_bound: overflow");
  return static_cast<unsigned long long>(t);
}

}  // namespace zono
