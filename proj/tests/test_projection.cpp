#include <random>
#include <set>

#include "doctest.h"
#include "zonocut/construction.hpp"

using namespace zono;

namespace {

Polygon2 make_poly(std::initializer_list<std::pair<int, int>> pts) {
  Polygon2 p;
  for (auto [x, y] : pts) p.points.push_back({Rat(x), Rat(y)});
  return p;
}

}  // namespace

TEST_CASE("hull basics") {
  // triangle corners plus centroid
  std::vector<Vec2> tri{{Rat(0), Rat(0)}, {Rat(3), Rat(0)}, {Rat(0), Rat(3)}, {Rat(1), Rat(1)}};
  CHECK(hull2(tri).size() == 3);

  // collinear points collapse to a segment
  std::vector<Vec2> line{{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}, {Rat(3), Rat(3)}};
  Polygon2 seg = hull2(line);
  CHECK(seg.degenerate());
  REQUIRE(seg.size() == 2);
  CHECK(seg.points[0] == Vec2{Rat(0), Rat(0)});
  CHECK(seg.points[1] == Vec2{Rat(3), Rat(3)});

  // edge midpoints are not hull vertices
  std::vector<Vec2> sq{{Rat(1), Rat(1)},  {Rat(-1), Rat(1)}, {Rat(-1), Rat(-1)}, {Rat(1), Rat(-1)},
                       {Rat(0), Rat(1)},  {Rat(0), Rat(-1)}, {Rat(1), Rat(0)},   {Rat(-1), Rat(0)},
                       {Rat(0), Rat(0)}};
  CHECK(hull2(sq).size() == 4);

  // counterclockwise orientation: positive doubled area
  Polygon2 h = hull2(sq);
  Rat area2;
  for (size_t i = 0; i < h.size(); ++i) {
    const Vec2& a = h.points[i];
    const Vec2& b = h.points[(i + 1) % h.size()];
    area2 += a.x * b.y - b.x * a.y;
  }
  CHECK(area2 > Rat(0));
}

TEST_CASE("survival under projection to the first coordinate") {
  // the axis-aligned square has both extreme edges parallel to the projection
  // kernel: nothing survives, opposite pairs {(1),(-1)} never arise
  DualZonotope square(ArrangementMatrix(RatMat{{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}}));
  for (const DualVertex& v : square.vertices()) {
    auto [ok, cert] = survives(square, v.sign, 1);
    CHECK(cert.truncated_normals.cols() == 1);
    CHECK(!ok);
  }

  // a skew 4-gon: exactly the two x-extreme vertices survive
  DualZonotope skew(ArrangementMatrix(RatMat{{Rat(1), Rat(2)}, {Rat(1), Rat(-1)}}));
  int surviving = 0;
  for (const DualVertex& v : skew.vertices()) {
    auto [ok, cert] = survives(skew, v.sign, 1);
    if (ok) {
      ++surviving;
      REQUIRE(cert.positive_combination.has_value());
      const RatVec& lambda = *cert.positive_combination;
      CHECK(is_zero_vec(vec_mat(lambda, cert.truncated_normals)));
      for (const Rat& l : lambda) CHECK(l >= Rat(1));
      CHECK(rank(cert.truncated_normals) == 1);
    }
  }
  CHECK(surviving == 2);
  CHECK_THROWS_AS(survives(skew, skew.vertices().front().sign, 0), std::invalid_argument);
  CHECK_THROWS_AS(survives(skew, skew.vertices().front().sign, 2), std::invalid_argument);
}

TEST_CASE("shadow of the 5-line instance is the 10-gon itself") {
  DualZonotope dz(easteregg_matrix(EasterEggParams(2, 1)));
  Polygon2 shadow = shadow_polygon(dz);
  CHECK(shadow.size() == 10);
  CHECK(shadow.size() == dz.vertices().size());
}

TEST_CASE("shadow is centrally symmetric and within the facet bound") {
  for (auto params : {EasterEggParams(2, 1), EasterEggParams(3, 1)}) {
    DualZonotope dz(easteregg_matrix(params));
    Polygon2 shadow = shadow_polygon(dz);
    std::set<std::pair<std::string, std::string>> pts;
    for (const Vec2& p : shadow.points) pts.insert({p.x.str(), p.y.str()});
    for (const Vec2& p : shadow.points) CHECK(pts.count({(-p.x).str(), (-p.y).str()}) == 1);
    CHECK(shadow.size() <= facet_upper_bound(params.zone_count(), params.d));
  }
}

TEST_CASE("polar of the square is the diamond, and polarity is involutive") {
  Polygon2 square = hull2({{Rat(1), Rat(1)}, {Rat(-1), Rat(1)}, {Rat(-1), Rat(-1)}, {Rat(1), Rat(-1)}});
  Polygon2 diamond = polar_polygon(square);
  REQUIRE(diamond.size() == 4);
  std::set<std::pair<std::string, std::string>> pts;
  for (const Vec2& p : diamond.points) pts.insert({p.x.str(), p.y.str()});
  CHECK(pts == std::set<std::pair<std::string, std::string>>{{"1", "0"}, {"-1", "0"}, {"0", "1"}, {"0", "-1"}});

  Polygon2 back = polar_polygon(diamond);
  Polygon2 canon = square;
  canon.canonicalize_rotation();
  CHECK(back.points == canon.points);

  // origin on the boundary: not strictly interior
  Polygon2 shifted = make_poly({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  CHECK_THROWS_AS(polar_polygon(shifted), std::invalid_argument);
}

TEST_CASE("polar is involutive on easter-egg shadows") {
  for (auto params : {EasterEggParams(2, 1), EasterEggParams(3, 1)}) {
    DualZonotope dz(easteregg_matrix(params));
    Polygon2 shadow = shadow_polygon(dz);
    Polygon2 twice = polar_polygon(polar_polygon(shadow));
    Polygon2 canon = shadow;
    canon.canonicalize_rotation();
    CHECK(twice.points == canon.points);
  }
}

TEST_CASE("section vertex count equals shadow vertex count") {
  for (auto params : {EasterEggParams(2, 1), EasterEggParams(3, 1)}) {
    ArrangementMatrix A = easteregg_matrix(params);
    DualZonotope dz(A);
    CHECK(section_polygon(A).size() == shadow_polygon(dz).size());
  }
}

TEST_CASE("boundary walk of the 3-dimensional instance") {
  EasterEggParams params(3, 1);
  DualZonotope dz(easteregg_matrix(params));
  auto cycle = shadow_boundary_walk(dz);
  Polygon2 shadow = shadow_polygon(dz);
  CHECK(cycle.size() == shadow.size());
  CHECK(cycle.size() == 60);

  // consecutive edges share an endpoint: a common vertex label refines both
  const auto& verts = dz.vertices();
  for (size_t i = 0; i < cycle.size(); ++i) {
    const SignVector& e = cycle[i];
    const SignVector& f = cycle[(i + 1) % cycle.size()];
    bool share = false;
    for (const DualVertex& v : verts)
      if (e.extends(v.sign) && f.extends(v.sign)) share = true;
    CHECK(share);
  }

  std::set<SignVector> from_walk(cycle.begin(), cycle.end());
  auto S = surviving_edge_signs(params);
  CHECK(from_walk == std::set<SignVector>(S.begin(), S.end()));

  CHECK_THROWS_AS(shadow_boundary_walk(DualZonotope(easteregg_matrix(EasterEggParams(2, 1)))),
                  std::invalid_argument);
}

TEST_CASE("walk rejects a shadow edge generated by a vertical 2-face") {
  // the regions of this arrangement include facets with horizontal normals
  // (e.g. the all-plus region, normal (2,5,0)), which project onto shadow
  // edges: the boundary cannot be matched to a cycle of edges
  RatMat M{{Rat(0), Rat(1), Rat(1)},
           {Rat(0), Rat(1), Rat(-1)},
           {Rat(1), Rat(0), Rat(1)},
           {Rat(1), Rat(3), Rat(-1)}};
  DualZonotope dz{ArrangementMatrix(M)};
  CHECK_THROWS_AS(shadow_boundary_walk(dz), AmbiguousShadowError);
}

TEST_CASE("on the construction instances survival and hull membership coincide") {
  // both instances are generic for the projection: no facet normal vanishes
  // in the last coordinate and vertex projections are injective, so the
  // sufficient survival condition is also necessary
  for (int d : {3, 4}) {
    DualZonotope dz(easteregg_matrix(EasterEggParams(d, 1)));
    std::set<std::pair<std::string, std::string>> hull_pts;
    for (const Vec2& p : shadow_polygon(dz).points) hull_pts.insert({p.x.str(), p.y.str()});
    size_t surviving = 0;
    for (const DualVertex& v : dz.vertices()) {
      bool on_hull = hull_pts.count({v.point[0].str(), v.point[1].str()}) > 0;
      bool ok = survives(dz, v.sign, 2).first;
      CHECK(ok == on_hull);
      surviving += ok;
    }
    CHECK(surviving == (d == 3 ? 60 : 300));
  }
}

TEST_CASE("survival matches hull membership on random generic instances") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> entry(-5, 5);
  std::uniform_int_distribution<int> rows(3, 6);
  int accepted = 0;
  while (accepted < 6) {
    RatMat M(rows(rng), 3);
    for (int r = 0; r < M.rows(); ++r)
      for (int c = 0; c < 3; ++c) M(r, c) = Rat(entry(rng));
    try {
      ArrangementMatrix A(M);
      DualZonotope dz(std::move(A));
      std::set<std::pair<std::string, std::string>> proj;
      bool generic = true;
      for (const DualVertex& v : dz.vertices())
        if (!proj.insert({v.point[0].str(), v.point[1].str()}).second) generic = false;
      if (generic)
        for (const FacetInequality& f : facet_inequalities(dz))
          if (f.normal[2].is_zero()) generic = false;
      if (generic && shadow_polygon(dz).degenerate()) generic = false;
      if (!generic) continue;
      ++accepted;

      std::set<std::pair<std::string, std::string>> hull_pts;
      for (const Vec2& p : shadow_polygon(dz).points) hull_pts.insert({p.x.str(), p.y.str()});
      for (const DualVertex& v : dz.vertices()) {
        bool on_hull = hull_pts.count({v.point[0].str(), v.point[1].str()}) > 0;
        CHECK(survives(dz, v.sign, 2).first == on_hull);
      }
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
}

TEST_CASE("facet upper bound values") {
  CHECK(facet_upper_bound(10, 3) == 90);
  CHECK(facet_upper_bound(5, 2) == 10);
  CHECK(facet_upper_bound(15, 4) == 910);
  CHECK_THROWS_AS(facet_upper_bound(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(facet_upper_bound(4, 1), std::invalid_argument);
}
