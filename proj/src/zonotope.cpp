#include "zonocut/zonotope.hpp"

#include <algorithm>

namespace zono {

Rat support_eval(const ArrangementMatrix& A, const RatVec& x) {
  if (static_cast<int>(x.size()) != A.dim()) throw std::invalid_argument("support_eval: dimension mismatch");
  Rat s;
  for (int j = 0; j < A.zone_count(); ++j) s += dot(A.row(j), x).abs();
  return s;
}

const std::vector<DualVertex>& DualZonotope::vertices() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!vertices_) {
    std::vector<DualVertex> vs;
    for (const ArrangementRay& r : enumerate_rays(A_)) {
      Rat f = support_eval(A_, r.direction);
      DualVertex v;
      v.point = vec_scale(Rat(1) / f, r.direction);
      v.sign = r.sign;
      vs.push_back(std::move(v));
    }
    vertices_ = std::move(vs);
  }
  return *vertices_;
}

const std::vector<SignVector>& DualZonotope::region_signs() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!regions_) regions_ = region_sign_vectors(A_);
  return *regions_;
}

std::vector<FacetInequality> facet_inequalities(const DualZonotope& dz) {
  std::vector<FacetInequality> out;
  for (const SignVector& sigma : dz.region_signs()) {
    FacetInequality f;
    RatVec coeff(sigma.size());
    for (size_t j = 0; j < sigma.size(); ++j) coeff[j] = Rat(sigma.at(j));
    f.normal = vec_mat(coeff, dz.arrangement().matrix());
    f.region = sigma;
    out.push_back(std::move(f));
  }
  return out;
}

RatMat normals_matrix(const DualZonotope& dz, const SignVector& face_sign) {
  const ArrangementMatrix& A = dz.arrangement();
  if (!realizable(A, face_sign)) throw std::invalid_argument("normals_matrix: sign vector is not realizable");
  std::vector<int> zeros = face_sign.zero_positions();
  std::vector<SignVector> expansions;
  size_t count = size_t(1) << zeros.size();
  for (size_t mask = 0; mask < count; ++mask) {
    SignVector s = face_sign;
    for (size_t t = 0; t < zeros.size(); ++t) s.set(zeros[t], (mask >> t) & 1 ? 1 : -1);
    if (realizable(A, s)) expansions.push_back(std::move(s));
  }
  std::sort(expansions.begin(), expansions.end());
  RatMat N(static_cast<int>(expansions.size()), A.dim());
  for (size_t i = 0; i < expansions.size(); ++i) {
    RatVec coeff(expansions[i].size());
    for (size_t j = 0; j < coeff.size(); ++j) coeff[j] = Rat(expansions[i].at(j));
    N.set_row(static_cast<int>(i), vec_mat(coeff, A.matrix()));
  }
  return N;
}

ZonotopeVertexSet zonotope_vertices(const ArrangementMatrix& A) {
  ZonotopeVertexSet out;
  for (const SignVector& sigma : region_sign_vectors(A)) {
    ZonotopeVertex v;
    RatVec coeff(sigma.size());
    for (size_t j = 0; j < sigma.size(); ++j) coeff[j] = Rat(sigma.at(j));
    v.point = vec_mat(coeff, A.matrix());
    v.region_sign = sigma;
    out.vertices.push_back(std::move(v));
  }
  return out;
}

int face_dimension(const DualZonotope& dz, const SignVector& sigma) {
  const ArrangementMatrix& A = dz.arrangement();
  if (!realizable(A, sigma)) throw std::invalid_argument("face_dimension: sign vector is not realizable");
  std::vector<int> zeros = sigma.zero_positions();
  std::vector<RatVec> rows;
  rows.reserve(zeros.size());
  for (int j : zeros) rows.push_back(A.row(j));
  int r = zeros.empty() ? 0 : rank(RatMat::from_rows(rows, A.dim()));
  return A.dim() - r - 1;
}

}  // namespace zono
