#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zonocut/zonotope.hpp"

namespace zono {

struct Vec2 {
  Rat x, y;
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

// (a - o) x (b - o)
Rat cross(const Vec2& o, const Vec2& a, const Vec2& b);

// Strictly convex polygon: counterclockwise vertex list without collinear
// midpoints, starting at the lexicographically smallest vertex. Fewer than 3
// points mean a degenerate hull (segment or point).
struct Polygon2 {
  std::vector<Vec2> points;
  size_t size() const { return points.size(); }
  bool degenerate() const { return points.size() < 3; }
  // rotate so the lexicographically smallest vertex comes first
  void canonicalize_rotation();
};

// Exact convex hull (monotone chain). Duplicates merged; points interior to
// hull edges are not vertices.
Polygon2 hull2(std::vector<Vec2> pts);

struct SurvivalCertificate {
  SignVector face_sign;
  RatMat truncated_normals{0, 0};
  // present iff the truncated normals have full rank d-k and admit a strictly
  // positive dependency; entries >= 1 with lambda^T truncated_normals = 0
  std::optional<RatVec> positive_combination;
};

// Does the face labeled face_sign survive the orthogonal projection to the
// first k coordinates? True iff the rows of its normals matrix, truncated to
// the last d-k coordinates, positively span R^{d-k}.
std::pair<bool, SurvivalCertificate> survives(const DualZonotope& dz, const SignVector& face_sign, int k);

// Convex hull of the dual vertices projected to the first two coordinates.
Polygon2 shadow_polygon(const DualZonotope& dz);

// Polar dual of a polygon with the origin strictly inside: edge on
// { x : a . x = 1 }  ->  vertex a. Involutive on such polygons.
Polygon2 polar_polygon(const Polygon2& P);

// Central 2D-cut of the primal zonotope by the plane of the first two
// coordinates, computed as the polar of the dual shadow.
Polygon2 section_polygon(const ArrangementMatrix& A);

// Cyclic sequence of the edge sign vectors whose projections trace the
// boundary of the shadow polygon, rotated to the lexicographically smallest
// element. Throws AmbiguousShadowError when the shadow is non-generic (two
// vertices share a projection, or consecutive hull vertices are not joined by
// an edge of the dual zonotope).
std::vector<SignVector> shadow_boundary_walk(const DualZonotope& dz);

// 2 * binomial(m, d-1): no d-zonotope shadow/section can beat this.
unsigned long long facet_upper_bound(int m, int d);

}  // namespace zono
