#include <set>

#include "doctest.h"
#include "zonocut/construction.hpp"
#include "zonocut/verify.hpp"

using namespace zono;

TEST_CASE("parameters derive n, m, alpha") {
  EasterEggParams p(3, 1);
  CHECK(p.n() == 5);
  CHECK(p.zone_count() == 10);
  CHECK(p.alpha() == Rat(1, 6));
  CHECK(p.eps(1) == Rat(1));
  CHECK(p.eps(2) == Rat(1, 6));
  CHECK_THROWS_AS(EasterEggParams(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(EasterEggParams(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(p.eps(3), std::invalid_argument);
}

TEST_CASE("block right-hand sides") {
  BlockRhs r = block_rhs(1);
  CHECK(r.b == RatVec{Rat(1), Rat(0), Rat(-1)});
  CHECK(r.b_prime == RatVec{Rat(-1, 2), Rat(1, 2)});
  // strictly monotone, pairwise gaps at least 1/2 between the merged families
  BlockRhs r2 = block_rhs(2);
  for (size_t i = 1; i < r2.b.size(); ++i) CHECK(r2.b[i - 1] > r2.b[i]);
  for (size_t i = 1; i < r2.b_prime.size(); ++i) CHECK(r2.b_prime[i - 1] < r2.b_prime[i]);
  for (const Rat& x : r2.b)
    for (const Rat& y : r2.b_prime) CHECK((x - y).abs() >= Rat(1, 2));
}

TEST_CASE("the 5x2 matrix is transcribed exactly") {
  ArrangementMatrix A = easteregg_matrix(EasterEggParams(2, 1));
  RatMat expect{{Rat(1), Rat(1)},
                {Rat(0), Rat(1)},
                {Rat(-1), Rat(1)},
                {Rat(-1, 2), Rat(-1)},
                {Rat(1, 2), Rat(-1)}};
  CHECK(A.matrix() == expect);
}

TEST_CASE("the 10x3 matrix scales its second block by alpha") {
  ArrangementMatrix A = easteregg_matrix(EasterEggParams(3, 1));
  Rat a(1, 6);
  // block 1: (b; b') | (1; -1) | (1; 1)
  CHECK(A.matrix()(0, 0) == Rat(1));
  CHECK(A.matrix()(0, 1) == Rat(1));
  CHECK(A.matrix()(0, 2) == Rat(1));
  CHECK(A.matrix()(3, 0) == Rat(-1, 2));
  CHECK(A.matrix()(3, 1) == Rat(-1));
  CHECK(A.matrix()(3, 2) == Rat(1));
  // block 2: alpha^2 (b; b') | 0 | alpha (1; -1)
  CHECK(A.matrix()(5, 0) == a * a);
  CHECK(A.matrix()(5, 1) == Rat(0));
  CHECK(A.matrix()(5, 2) == a);
  CHECK(A.matrix()(9, 0) == a * a * Rat(1, 2));
  CHECK(A.matrix()(9, 2) == -a);
}

TEST_CASE("construction matrices have full rank for d = 2, 3, 4") {
  for (int d : {2, 3, 4}) {
    ArrangementMatrix A = easteregg_matrix(EasterEggParams(d, 1));
    CHECK(A.zone_count() == 5 * (d - 1));
    CHECK(rank(A.matrix()) == d);
  }
}

TEST_CASE("selected vertex signs: counts, zeros, block sums") {
  EasterEggParams p2(2, 1);
  auto s2 = selected_vertex_signs(p2);
  CHECK(s2.size() == 5);
  std::set<int> zero_positions;
  for (const auto& s : s2) {
    auto z = s.zero_positions();
    REQUIRE(z.size() == 1);
    zero_positions.insert(z[0]);
    CHECK(s.sum() == 0);
  }
  CHECK(zero_positions == std::set<int>{0, 1, 2, 3, 4});

  EasterEggParams p3(3, 1);
  auto s3 = selected_vertex_signs(p3);
  CHECK(s3.size() == 25);
  for (const auto& s : s3) {
    CHECK(s.zero_count() == 2);
    // per-block sums vanish
    for (int blk = 0; blk < 2; ++blk) {
      int sum = 0;
      for (int j = 0; j < 5; ++j) sum += s.at(blk * 5 + j);
      CHECK(sum == 0);
    }
  }
  CHECK(selected_vertex_signs(EasterEggParams(4, 1)).size() == 125);
}

TEST_CASE("surviving edge signs: counts and closure under negation") {
  CHECK_THROWS_AS(surviving_edge_signs(EasterEggParams(2, 1)), std::invalid_argument);

  auto s3 = surviving_edge_signs(EasterEggParams(3, 1));
  CHECK(s3.size() == 60);
  std::set<SignVector> set3(s3.begin(), s3.end());
  for (const auto& s : s3) {
    CHECK(set3.count(s.negated()) == 1);
    CHECK(s.zero_count() == 1);
    // last block is zero-free with sum +-1
    int sum = 0;
    bool zero_free = true;
    for (int j = 5; j < 10; ++j) {
      sum += s.at(j);
      zero_free = zero_free && s.at(j) != 0;
    }
    CHECK(zero_free);
    CHECK((sum == 1 || sum == -1));
  }
  CHECK(surviving_edge_signs(EasterEggParams(4, 1)).size() == 300);
}

TEST_CASE("the family scales beyond k = 1: the n = 9 instance") {
  EasterEggParams p(3, 2);
  CHECK(p.n() == 9);
  CHECK(selected_vertex_signs(p).size() == 81);
  auto S = surviving_edge_signs(p);
  CHECK(S.size() == 180);  // 2 n^{d-2} (n+1)
  DualZonotope dz(easteregg_matrix(p));
  CHECK(shadow_polygon(dz).size() == predicted_shadow_vertices(3, 9));
  auto cycle = shadow_boundary_walk(dz);
  CHECK(cycle.size() == 180);
  CHECK(std::set<SignVector>(cycle.begin(), cycle.end()) == std::set<SignVector>(S.begin(), S.end()));
}

TEST_CASE("prediction formulas") {
  CHECK(predicted_shadow_vertices(3, 5) == 60);
  CHECK(predicted_shadow_vertices(4, 5) == 300);
  CHECK(predicted_shadow_vertices(2, 5) == 12);  // known to overshoot the 10-gon
  CHECK_THROWS_AS(predicted_shadow_vertices(3, 4), std::invalid_argument);

  CHECK(predicted_product_shadow_vertices(3, 4) == 4);
  CHECK(predicted_product_shadow_vertices(5, 8) == 16);
  CHECK_THROWS_AS(predicted_product_shadow_vertices(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(predicted_product_shadow_vertices(4, 4), std::invalid_argument);
}

TEST_CASE("polytope vertex enumeration") {
  RatMat box{{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(-1)}};
  auto verts = polytope_vertices(box, {Rat(1), Rat(2), Rat(3), Rat(4)});
  CHECK(verts.size() == 4);  // the box [-2,1] x [-4,3]
  CHECK(compare_vec(verts.front(), {Rat(-2), Rat(-4)}) == 0);
  CHECK(compare_vec(verts.back(), {Rat(1), Rat(3)}) == 0);
}

TEST_CASE("facet embedding of the square") {
  FacetSpec square{RatMat{{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(-1)}},
                   RatVec{Rat(1), Rat(1), Rat(1), Rat(1)}};
  ArrangementMatrix A = embed_facet(square);
  CHECK(A.zone_count() == 4);
  CHECK(A.dim() == 3);
  RatVec sum(3);
  for (int r = 0; r < 4; ++r) sum = vec_add(sum, A.row(r));
  CHECK(sum == RatVec{Rat(1), Rat(0), Rat(0)});

  // the slice at x0 = 1 is the (recentered) square itself
  DualZonotope dz(std::move(A));
  std::vector<RatVec> slice;
  for (const DualVertex& v : dz.vertices())
    if (v.point[0] == Rat(1)) slice.push_back(dehomogenize(v.point));
  CHECK(slice.size() == 4);
  for (const RatVec& s : slice) {
    CHECK(s[0].abs() == Rat(1));
    CHECK(s[1].abs() == Rat(1));
  }
}

TEST_CASE("facet embedding rejects bad inputs") {
  // unbounded: halfplane strip normals do not positively span
  FacetSpec strip{RatMat{{Rat(0), Rat(1)}, {Rat(0), Rat(-1)}, {Rat(1), Rat(0)}},
                  RatVec{Rat(1), Rat(1), Rat(1)}};
  CHECK_THROWS_AS(embed_facet(strip), std::invalid_argument);

  // lower-dimensional: a segment in the plane
  FacetSpec flat{RatMat{{Rat(0), Rat(1)}, {Rat(0), Rat(-1)}, {Rat(1), Rat(0)}, {Rat(-1), Rat(0)}},
                 RatVec{Rat(0), Rat(0), Rat(1), Rat(1)}};
  CHECK_THROWS_AS(embed_facet(flat), std::invalid_argument);
}

TEST_CASE("full embedding checks for square and hexagon") {
  CheckResult res = verify_facet_embedding();
  CHECK(res.pass);
}

TEST_CASE("perturbed projection keeps a maximal facet on the shadow") {
  CheckResult res = verify_symmetric_projection(1, 1);
  CHECK(res.pass);
  CHECK(res.details["projection_rank"].get<int>() == 2);
  CHECK(res.details["image_polygon_vertices"].get<size_t>() >= res.details["facet_vertices"].get<size_t>());
}

TEST_CASE("projection search validates its inputs") {
  DualZonotope dz(easteregg_matrix(EasterEggParams(3, 1)));
  CHECK_THROWS_AS(cs_shadow_projection(dz, SignVector(10)), std::invalid_argument);
  DualZonotope flat(easteregg_matrix(EasterEggParams(2, 1)));
  CHECK_THROWS_AS(cs_shadow_projection(flat, SignVector::parse("+++++")), std::invalid_argument);
}
