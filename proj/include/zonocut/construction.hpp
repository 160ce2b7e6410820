#pragma once

#include <vector>

#include "zonocut/projection.hpp"

namespace zono {

// Parameters of the easter-egg family: dimension d >= 2 and block parameter
// k >= 1 give n = 4k+1 hyperplanes per family, m = n(d-1) zones in total, and
// the geometric scale alpha = 1/(n+1).
struct EasterEggParams {
  int d;
  int k;

  EasterEggParams(int d_, int k_) : d(d_), k(k_) {
    if (d < 2 || k < 1) throw std::invalid_argument("EasterEggParams: require d >= 2 and k >= 1");
  }

  int n() const { return 4 * k + 1; }
  int zone_count() const { return n() * (d - 1); }
  Rat alpha() const { return Rat(1, n() + 1); }
  Rat eps(int block) const;    // alpha^{block-1}, blocks are 1-based
  Rat delta(int block) const;  // equal to eps by construction
};

// Right-hand-side columns shared by all blocks:
// b  = (k, k-1, ..., -k)                length 2k+1, strictly decreasing
// b' = (-k+1/2, ..., k-1/2)             length 2k, strictly increasing
struct BlockRhs {
  RatVec b;
  RatVec b_prime;
};
BlockRhs block_rhs(int k);

// The n(d-1) x d matrix whose block i has column 0 = alpha^{2(i-1)} (b; b'),
// column i = alpha^{i-1} (1; -1), column i+1 = alpha^{i-1} (1; 1) (omitted
// for i = d-1), zeros elsewhere.
ArrangementMatrix easteregg_matrix(const EasterEggParams& params);

// The n^{d-1} vertex sign vectors: per block one zero and balanced signs
// (block sum 0), following the two admissible shapes. Sorted.
std::vector<SignVector> selected_vertex_signs(const EasterEggParams& params);

// The set S of edge sign vectors: blocks 1..d-2 as for the selected vertices,
// the last block zero-free with block sum +-1, plus all negatives. Sorted;
// cardinality 2 n^{d-2} (n+1). Throws for d = 2 (at that dimension the
// pattern set degenerates; the dual is a 2n-gon with 2n boundary edges).
std::vector<SignVector> surviving_edge_signs(const EasterEggParams& params);

// 2 n^{d-1} + 2 n^{d-2}, the guaranteed shadow vertex count of the family.
// Requires n = 1 (mod 4) and d >= 2. For d = 2 the formula value 12 (k = 1)
// exceeds the actual 10-gon; callers should surface that caveat rather than
// assert equality.
unsigned long long predicted_shadow_vertices(int d, long long n);

// (2n/(d-1))^{(d-1)/2}: the shadow size achievable by embedding a deformed
// product of polygons as a facet. Requires odd d >= 3 and n an even multiple
// of (d-1)/2.
unsigned long long predicted_product_shadow_vertices(int d, long long n);

// Inequality description A_F x <= b_F of a bounded full-dimensional
// (d-1)-polytope whose rows positively span R^{d-1}.
struct FacetSpec {
  RatMat A_F;
  RatVec b_F;
};

// Vertices of { x : A x <= b } by exhaustive basis enumeration, sorted.
// Exact and intended for desk-scale inputs; also serves as the
// inequality-route cross-check for vertex sets obtained geometrically.
std::vector<RatVec> polytope_vertices(const RatMat& A, const RatVec& b);

// A d-dimensional dual zonotope with n zones having a facet affinely
// equivalent to F, lying in the hyperplane x0 = 1. The input is recentered
// about its vertex barycenter, the rows (-b_i, A_i) are scaled by a strictly
// positive dependency of the rows of A_F, and the scaled rows sum exactly to
// (1, 0, ..., 0).
ArrangementMatrix embed_facet(const FacetSpec& F);

struct CsProjectionOptions {
  unsigned seed = 1;
  int max_draws = 16;       // generic in-facet directions to try
  int max_halvings = 40;    // smallest perturbation 2^-max_halvings
};

// For a 3-dimensional dual zonotope and a k-vertex facet G (zero-free sign
// vector): an exact rank-2 projection R^3 -> R^2 whose image polygon has at
// least k vertices. Found by perturbing an in-facet generic direction by
// +-eps * normal(G), halving eps until the boundary chains of G and of -G
// together place k distinct vertices on the shadow boundary. Throws
// SearchFailure when the bounded search fails.
RatMat cs_shadow_projection(const DualZonotope& dz, const SignVector& facet_sign,
                            const CsProjectionOptions& opts = {});

}  // namespace zono
