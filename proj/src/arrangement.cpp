#include "zonocut/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "zonocut/simplex.hpp"

namespace zono {

namespace {

// Scale a nonzero vector so its first nonzero coordinate is +1.
RatVec canonical_line_rep(const RatVec& v) {
  for (const Rat& x : v) {
    if (!x.is_zero()) {
      RatVec out(v.size());
      for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / x;
      return out;
    }
  }
  throw std::invalid_argument("canonical_line_rep: zero vector");
}

struct VecLess {
  bool operator()(const RatVec& a, const RatVec& b) const { return compare_vec(a, b) < 0; }
};

}  // namespace

ArrangementMatrix::ArrangementMatrix(RatMat A) : A_(std::move(A)) {
  const int m = A_.rows(), d = A_.cols();
  if (m < 1 || d < 1) throw std::invalid_argument("ArrangementMatrix: empty matrix");
  for (int j = 0; j < m; ++j) {
    RatVec r = A_.row(j);
    if (is_zero_vec(r)) throw std::invalid_argument("ArrangementMatrix: row " + std::to_string(j) + " is zero");
    bool e0_multiple = true;
    for (int c = 1; c < d; ++c)
      if (!r[c].is_zero()) { e0_multiple = false; break; }
    if (e0_multiple)
      throw std::invalid_argument("ArrangementMatrix: row " + std::to_string(j) +
                                  " is a multiple of the first unit vector");
  }
  // canonical_line_rep is invariant under scaling by any nonzero rational,
  // negative ones included, so equal reps mean parallel rows
  std::map<RatVec, int, VecLess> lines;
  for (int j = 0; j < m; ++j) {
    RatVec rep = canonical_line_rep(A_.row(j));
    auto [it, fresh] = lines.emplace(std::move(rep), j);
    if (!fresh)
      throw std::invalid_argument("ArrangementMatrix: row " + std::to_string(j) +
                                  " is a multiple of row " + std::to_string(it->second));
  }
  if (rank(A_) != d) throw std::invalid_argument("ArrangementMatrix: rank below ambient dimension");
}

SignVector sign_map(const ArrangementMatrix& A, const RatVec& x) {
  if (static_cast<int>(x.size()) != A.dim()) throw std::invalid_argument("sign_map: dimension mismatch");
  SignVector s(A.zone_count());
  for (int j = 0; j < A.zone_count(); ++j) s.set(j, dot(A.row(j), x).sign());
  return s;
}

RatVec homogenize(const RatVec& coords) {
  RatVec x(coords.size() + 1);
  x[0] = Rat(1);
  for (size_t i = 0; i < coords.size(); ++i) x[i + 1] = coords[i];
  return x;
}

RatVec dehomogenize(const RatVec& x) {
  if (x.empty()) throw std::invalid_argument("dehomogenize: empty vector");
  if (x[0].is_zero()) throw AtInfinityError("dehomogenize: point at infinity (x0 = 0)");
  RatVec c(x.size() - 1);
  for (size_t i = 1; i < x.size(); ++i) c[i - 1] = x[i] / x[0];
  return c;
}

std::vector<ArrangementRay> enumerate_rays(const ArrangementMatrix& A) {
  const int m = A.zone_count(), d = A.dim();
  std::set<RatVec, VecLess> lines;

  std::vector<int> idx(d - 1);
  for (int i = 0; i < d - 1; ++i) idx[i] = i;
  if (d - 1 > m) return {};
  for (;;) {
    RatMat S(d - 1, d);
    for (int i = 0; i < d - 1; ++i) S.set_row(i, A.row(idx[i]));
    std::vector<RatVec> kb = kernel_basis(S);
    if (kb.size() == 1) lines.insert(canonical_line_rep(kb[0]));

    int i = d - 2;
    while (i >= 0 && idx[i] == m - (d - 1) + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < d - 1; ++j) idx[j] = idx[j - 1] + 1;
  }

  std::vector<ArrangementRay> rays;
  for (const RatVec& u : lines) {
    for (const RatVec& dir : {u, vec_scale(Rat(-1), u)}) {
      ArrangementRay r;
      r.direction = dir;  // first nonzero is +1 on one ray, -1 on its antipode
      r.sign = sign_map(A, r.direction);
      r.incident_rows = r.sign.zero_positions();
      rays.push_back(std::move(r));
    }
  }
  std::sort(rays.begin(), rays.end(),
            [](const ArrangementRay& a, const ArrangementRay& b) { return compare_vec(a.direction, b.direction) < 0; });
  return rays;
}

std::vector<AffineVertex> enumerate_affine_vertices(const ArrangementMatrix& A) {
  std::map<RatVec, AffineVertex, VecLess> verts;
  for (const ArrangementRay& r : enumerate_rays(A)) {
    if (r.direction[0].sign() <= 0) continue;
    AffineVertex v;
    v.coords = dehomogenize(r.direction);
    v.sign = r.sign;
    v.incident_rows = r.incident_rows;
    v.generic = static_cast<int>(r.incident_rows.size()) == A.dim() - 1;
    verts.emplace(v.coords, std::move(v));
  }
  std::vector<AffineVertex> out;
  out.reserve(verts.size());
  for (auto& [c, v] : verts) out.push_back(std::move(v));
  return out;
}

std::optional<RatVec> realization_point(const ArrangementMatrix& A, const SignVector& sigma) {
  if (sigma.size() != static_cast<size_t>(A.zone_count()))
    throw std::invalid_argument("realizable: sign vector length mismatch");
  std::vector<RatVec> eq, ge;
  for (int j = 0; j < A.zone_count(); ++j) {
    int s = sigma.at(j);
    if (s == 0)
      eq.push_back(A.row(j));
    else
      ge.push_back(vec_scale(Rat(s), A.row(j)));
  }
  RatMat E = RatMat::from_rows(eq, A.dim());
  RatMat G = RatMat::from_rows(ge, A.dim());
  return lp_feasible(E, RatVec(eq.size()), G, RatVec(ge.size(), Rat(1)));
}

bool realizable(const ArrangementMatrix& A, const SignVector& sigma) {
  return realization_point(A, sigma).has_value();
}

std::vector<SignVector> region_sign_vectors(const ArrangementMatrix& A) {
  std::set<SignVector> candidates;
  for (const ArrangementRay& r : enumerate_rays(A)) {
    std::vector<int> zeros = r.sign.zero_positions();
    size_t count = size_t(1) << zeros.size();
    for (size_t mask = 0; mask < count; ++mask) {
      SignVector s = r.sign;
      for (size_t t = 0; t < zeros.size(); ++t) s.set(zeros[t], (mask >> t) & 1 ? 1 : -1);
      candidates.insert(std::move(s));
    }
  }
  std::vector<SignVector> regions;
  for (const SignVector& s : candidates)
    if (realizable(A, s)) regions.push_back(s);
  return regions;
}

ArrangementMatrix change_basis(const ArrangementMatrix& A, const RatMat& T) {
  if (T.rows() != A.dim() || T.cols() != A.dim())
    throw std::invalid_argument("change_basis: T must be d x d");
  if (rank(T) != T.rows()) throw std::invalid_argument("change_basis: T is singular");
  return ArrangementMatrix(mat_mul(A.matrix(), T));
}

}  // namespace zono
