#pragma once

#include <vector>

#include "zonocut/errors.hpp"
#include "zonocut/linalg.hpp"
#include "zonocut/sign_vector.hpp"

namespace zono {

// An m x d matrix A of full column rank defining, at once, the central
// arrangement { a_j x = 0 } in R^d, its affine slice at x0 = 1 in R^{d-1},
// the zonotope generated by the rows, and the dual zonotope.
//
// Construction validates the standing assumptions: rank d, no row a rational
// multiple of another, no row a multiple of (1, 0, ..., 0).
class ArrangementMatrix {
 public:
  explicit ArrangementMatrix(RatMat A);

  int zone_count() const { return A_.rows(); }  // m
  int dim() const { return A_.cols(); }         // d
  const RatMat& matrix() const { return A_; }
  RatVec row(int j) const { return A_.row(j); }

 private:
  RatMat A_;
};

SignVector sign_map(const ArrangementMatrix& A, const RatVec& x);

RatVec homogenize(const RatVec& coords);   // prepend 1
RatVec dehomogenize(const RatVec& x);      // divide by x0, drop it; throws AtInfinityError if x0 = 0

// 1-dimensional face of the central arrangement. Directions are canonical:
// entries reduced and scaled so the first nonzero coordinate is +1 or -1;
// both antipodal rays of a kernel line are listed.
struct ArrangementRay {
  RatVec direction;
  SignVector sign;
  std::vector<int> incident_rows;  // rows j with a_j . direction = 0
};

// Vertex of the affine arrangement: a ray with direction_0 > 0 scaled to
// x0 = 1. generic means exactly d-1 incident hyperplanes.
struct AffineVertex {
  RatVec coords;  // in R^{d-1}
  SignVector sign;
  std::vector<int> incident_rows;
  bool generic = false;
};

// All rays, sorted by canonical direction; each (d-1)-subset of rows of rank
// d-1 contributes its two kernel directions, deduplicated geometrically.
std::vector<ArrangementRay> enumerate_rays(const ArrangementMatrix& A);

// Rays with direction_0 != 0, dehomogenized, deduplicated by coordinates,
// sorted by coordinates; sign taken on the x0 > 0 side.
std::vector<AffineVertex> enumerate_affine_vertices(const ArrangementMatrix& A);

// Membership of sigma in the sign vector system of the arrangement, decided
// exactly: a_j x = 0 on zeros and sigma_j a_j x >= 1 elsewhere (the system is
// homogeneous, so >= 1 captures strict positivity).
bool realizable(const ArrangementMatrix& A, const SignVector& sigma);

// A point witnessing realizability, or absent.
std::optional<RatVec> realization_point(const ArrangementMatrix& A, const SignVector& sigma);

// All zero-free realizable sign vectors (regions of the central arrangement),
// obtained by expanding the zeros of every ray sign vector and filtering by
// realizability. Sorted; closed under negation.
std::vector<SignVector> region_sign_vectors(const ArrangementMatrix& A);

// A * T for invertible d x d T: the same dual zonotope in new coordinates.
// Composing with the fixed projection to the first two coordinates realizes
// arbitrary 2D projections.
ArrangementMatrix change_basis(const ArrangementMatrix& A, const RatMat& T);

}  // namespace zono
