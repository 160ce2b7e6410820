#pragma once

#include <string>

#include "zonocut/io.hpp"

namespace zono {

struct CheckResult {
  std::string name;
  bool pass = false;
  Json details;  // counts, sample certificates, first counterexample on failure
};

// Vertex selection: the n^{d-1} sign vectors are realizable generic vertices
// of the affine arrangement obeying the coordinate bound |v_{i+1}| <
// alpha^{i-1}/4, and every one-row-per-block choice reproduces one of them.
CheckResult verify_selected_vertices(int d, int k);

// Edge survival: the 2 n^{d-2} (n+1) edge sign vectors have face dimension 1,
// survive the projection to the first two coordinates, have all 2^{d-2}
// facet refinements realizable, and each refinement normal obeys the
// sign/magnitude bound |a(F)_i| >= alpha^{i-1} with the forced sign.
CheckResult verify_surviving_edges(int d, int k, int jobs = 1);

// The shadow boundary is a single closed cycle whose edge set equals the
// surviving edge set.
CheckResult verify_boundary_walk(int d, int k);

// Facet embedding for the square and a hexagon: scaled rows sum to e0 and
// the slice at x0 = 1 is affinely equivalent to the input, witnessed by a
// solved affine map matching vertices exactly.
CheckResult verify_facet_embedding();

// Perturbed projection of the 3-dimensional instance: the returned rank-2
// projection keeps every vertex of a maximal facet on the shadow.
CheckResult verify_symmetric_projection(int k, unsigned seed = 1);

// Survival test vs. convex hull membership on seeded random generic
// instances (d = 3, m <= 6, integer entries in [-5, 5]).
CheckResult verify_survival_oracle(int trials, unsigned seed, int jobs = 1);

// Full deterministic report for one parameter set: counts, predictions,
// bounds, verification results, d = 2 caveats.
Json run_report(int d, int k, int jobs = 1);

}  // namespace zono
