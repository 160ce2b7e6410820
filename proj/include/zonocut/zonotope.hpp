#pragma once

#include <mutex>
#include <optional>
#include <vector>

#include "zonocut/arrangement.hpp"

namespace zono {

struct DualVertex {
  RatVec point;  // on the boundary: support_eval(point) = 1
  SignVector sign;
};

struct FacetInequality {
  RatVec normal;      // sigma A; the inequality is normal . x <= 1
  SignVector region;  // the zero-free sign vector sigma
};

struct ZonotopeVertex {
  RatVec point;  // sum of region_sign_j * a_j, a row vector
  SignVector region_sign;
};

struct ZonotopeVertexSet {
  std::vector<ZonotopeVertex> vertices;
};

// sum_j |a_j x|
Rat support_eval(const ArrangementMatrix& A, const RatVec& x);

// The dual zonotope { x : sum |a_j x| <= 1 }. Vertex and region lists are
// computed on first use and cached; the caches are write-once, so concurrent
// readers are fine.
class DualZonotope {
 public:
  explicit DualZonotope(ArrangementMatrix A) : A_(std::move(A)) {}

  const ArrangementMatrix& arrangement() const { return A_; }
  int dim() const { return A_.dim(); }

  // one vertex per arrangement ray, at direction / f_A(direction)
  const std::vector<DualVertex>& vertices() const;
  const std::vector<SignVector>& region_signs() const;

 private:
  ArrangementMatrix A_;
  mutable std::mutex mu_;
  mutable std::optional<std::vector<DualVertex>> vertices_;
  mutable std::optional<std::vector<SignVector>> regions_;
};

// One inequality per region; by the fan correspondence each is facet-defining.
std::vector<FacetInequality> facet_inequalities(const DualZonotope& dz);

// Matrix of facet normals N_F for the face labeled face_sign: rows are
// sigma A over all realizable zero-free expansions sigma of face_sign,
// sorted by sigma. Throws if face_sign is not realizable.
RatMat normals_matrix(const DualZonotope& dz, const SignVector& face_sign);

// Vertices of the (primal) zonotope: sigma A per region sigma.
ZonotopeVertexSet zonotope_vertices(const ArrangementMatrix& A);

// Dimension of the face of the dual zonotope labeled sigma:
// d - rank(rows at zeros of sigma) - 1. The all-zero label (the center, not a
// proper face) yields -1. Throws if sigma is not realizable.
int face_dimension(const DualZonotope& dz, const SignVector& sigma);

}  // namespace zono
