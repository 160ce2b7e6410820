#include "zonocut/construction.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "zonocut/simplex.hpp"

namespace zono {

Rat EasterEggParams::eps(int block) const {
  if (block < 1 || block > d - 1) throw std::invalid_argument("EasterEggParams: block out of range");
  return Rat::pow(alpha(), static_cast<unsigned long>(block - 1));
}

Rat EasterEggParams::delta(int block) const { return eps(block); }

BlockRhs block_rhs(int k) {
  if (k < 1) throw std::invalid_argument("block_rhs: require k >= 1");
  BlockRhs r;
  for (int i = 0; i <= 2 * k; ++i) r.b.push_back(Rat(k - i));
  for (int i = 0; i < 2 * k; ++i) r.b_prime.push_back(Rat(2 * (i - k) + 1, 2));
  return r;
}

ArrangementMatrix easteregg_matrix(const EasterEggParams& params) {
  const int d = params.d, n = params.n();
  BlockRhs rhs = block_rhs(params.k);
  RatMat A(params.zone_count(), d);
  for (int block = 1; block <= d - 1; ++block) {
    const int base = (block - 1) * n;
    const Rat scale = params.delta(block);             // alpha^{block-1}
    const Rat col0 = params.eps(block) * scale;        // alpha^{2(block-1)}
    for (int r = 0; r < n; ++r) {
      bool b_part = r <= 2 * params.k;
      const Rat& rhs_entry = b_part ? rhs.b[r] : rhs.b_prime[r - (2 * params.k + 1)];
      A(base + r, 0) = col0 * rhs_entry;
      A(base + r, block) = b_part ? scale : -scale;
      if (block < d - 1) A(base + r, block + 1) = scale;
    }
  }
  return ArrangementMatrix(std::move(A));
}

namespace {

// The sign pattern of the block vertex lying on block row `zero_pos`
// (0-based within the block): one zero, entries balanced to sum 0.
std::vector<int8_t> block_vertex_pattern(int k, int zero_pos) {
  const int nb = 2 * k + 1;  // b rows
  const int n = 4 * k + 1;
  std::vector<int8_t> p(n);
  if (zero_pos < nb) {
    int t = zero_pos;  // b rows: +^t 0 -^{2k-t};  b' rows: -^t +^{2k-t}
    for (int j = 0; j < nb; ++j) p[j] = static_cast<int8_t>(j < t ? 1 : (j == t ? 0 : -1));
    for (int j = 0; j < 2 * k; ++j) p[nb + j] = static_cast<int8_t>(j < t ? -1 : 1);
  } else {
    int t = zero_pos - nb;  // b rows: +^{t+1} -^{2k-t};  b' rows: -^t 0 +^{2k-1-t}
    for (int j = 0; j < nb; ++j) p[j] = static_cast<int8_t>(j <= t ? 1 : -1);
    for (int j = 0; j < 2 * k; ++j) p[nb + j] = static_cast<int8_t>(j < t ? -1 : (j == t ? 0 : 1));
  }
  return p;
}

// Zero-free last-block patterns with sum +-1: b rows +^p -^{2k+1-p},
// b' rows -^q +^{2k-q}, with q = p (sum -1) or q = p-1 (sum +1).
std::vector<std::vector<int8_t>> block_edge_patterns(int k) {
  const int nb = 2 * k + 1;
  const int n = 4 * k + 1;
  std::vector<std::vector<int8_t>> out;
  auto make = [&](int p, int q) {
    std::vector<int8_t> v(n);
    for (int j = 0; j < nb; ++j) v[j] = static_cast<int8_t>(j < p ? 1 : -1);
    for (int j = 0; j < 2 * k; ++j) v[nb + j] = static_cast<int8_t>(j < q ? -1 : 1);
    out.push_back(std::move(v));
  };
  for (int p = 0; p <= 2 * k; ++p) make(p, p);
  for (int p = 1; p <= 2 * k + 1; ++p) make(p, p - 1);
  return out;
}

std::vector<SignVector> compose_blocks(const EasterEggParams& params,
                                       const std::vector<std::vector<std::vector<int8_t>>>& choices) {
  std::vector<SignVector> out;
  std::vector<size_t> pick(choices.size(), 0);
  for (;;) {
    std::vector<int8_t> s;
    s.reserve(static_cast<size_t>(params.zone_count()));
    for (size_t blk = 0; blk < choices.size(); ++blk) {
      const std::vector<int8_t>& p = choices[blk][pick[blk]];
      s.insert(s.end(), p.begin(), p.end());
    }
    out.emplace_back(std::move(s));
    size_t i = choices.size();
    while (i-- > 0) {
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
      if (i == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
  }
}

}  // namespace

std::vector<SignVector> selected_vertex_signs(const EasterEggParams& params) {
  std::vector<std::vector<int8_t>> per_block;
  for (int j = 0; j < params.n(); ++j) per_block.push_back(block_vertex_pattern(params.k, j));
  std::vector<std::vector<std::vector<int8_t>>> choices(params.d - 1, per_block);
  return compose_blocks(params, choices);
}

std::vector<SignVector> surviving_edge_signs(const EasterEggParams& params) {
  if (params.d == 2)
    throw std::invalid_argument(
        "surviving_edge_signs: d = 2 unsupported (the pattern count 2n^{d-2}(n+1) exceeds the "
        "2n boundary edges of the 2n-gon; all of its edges survive trivially)");
  std::vector<std::vector<int8_t>> vertex_block;
  for (int j = 0; j < params.n(); ++j) vertex_block.push_back(block_vertex_pattern(params.k, j));
  std::vector<std::vector<std::vector<int8_t>>> choices(params.d - 2, vertex_block);
  choices.push_back(block_edge_patterns(params.k));
  std::vector<SignVector> half = compose_blocks(params, choices);
  std::set<SignVector> all;
  for (const SignVector& s : half) {
    all.insert(s.negated());
    all.insert(s);
  }
  return {all.begin(), all.end()};
}

namespace {

unsigned long long checked_pow(long long base, int e) {
  unsigned __int128 r = 1;
  for (int i = 0; i < e; ++i) {
    r *= static_cast<unsigned long long>(base);
    if (r > ~0ULL) throw std::overflow_error("predicted count overflow");
  }
  return static_cast<unsigned long long>(r);
}

}  // namespace

unsigned long long predicted_shadow_vertices(int d, long long n) {
  if (d < 2) throw std::invalid_argument("predicted_shadow_vertices: require d >= 2");
  if (n < 5 || n % 4 != 1) throw std::invalid_argument("predicted_shadow_vertices: require n = 1 (mod 4), n >= 5");
  return 2 * checked_pow(n, d - 1) + 2 * checked_pow(n, d - 2);
}

unsigned long long predicted_product_shadow_vertices(int d, long long n) {
  if (d < 3 || d % 2 == 0)
    throw std::invalid_argument("predicted_product_shadow_vertices: require odd d >= 3");
  long long q = (d - 1) / 2;
  if (n <= 0 || n % q != 0 || (n / q) % 2 != 0)
    throw std::invalid_argument("predicted_product_shadow_vertices: n must be an even multiple of (d-1)/2");
  return checked_pow(2 * n / (d - 1), static_cast<int>(q));
}

namespace {
struct VecLess {
  bool operator()(const RatVec& a, const RatVec& b) const { return compare_vec(a, b) < 0; }
};
}  // namespace

std::vector<RatVec> polytope_vertices(const RatMat& A, const RatVec& b) {
  const int n = A.rows(), dim = A.cols();
  std::set<RatVec, VecLess> verts;
  std::vector<int> idx(dim);
  for (int i = 0; i < dim; ++i) idx[i] = i;
  if (dim > n) return {};
  for (;;) {
    RatMat S(dim, dim);
    RatVec rhs(dim);
    for (int i = 0; i < dim; ++i) {
      S.set_row(i, A.row(idx[i]));
      rhs[i] = b[idx[i]];
    }
    if (rank(S) == dim) {
      RatVec v = *solve(S, rhs);
      bool inside = true;
      for (int r = 0; r < n && inside; ++r) inside = dot(A.row(r), v) <= b[r];
      if (inside) verts.insert(std::move(v));
    }
    int i = dim - 1;
    while (i >= 0 && idx[i] == n - dim + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < dim; ++j) idx[j] = idx[j - 1] + 1;
  }
  return {verts.begin(), verts.end()};
}

ArrangementMatrix embed_facet(const FacetSpec& F) {
  const int n = F.A_F.rows();
  const int fdim = F.A_F.cols();
  if (static_cast<int>(F.b_F.size()) != n) throw std::invalid_argument("embed_facet: b_F length mismatch");
  if (n < fdim + 1) throw std::invalid_argument("embed_facet: too few inequalities");

  if (rank(F.A_F) != fdim)
    throw std::invalid_argument("embed_facet: normals do not span (lower-dimensional F)");
  auto lambda = feasible_strictly_positive_combination(F.A_F);
  if (!lambda)
    throw std::invalid_argument("embed_facet: rows of A_F do not positively span (F unbounded)");

  // recenter about the vertex barycenter so every offset becomes positive
  std::vector<RatVec> verts = polytope_vertices(F.A_F, F.b_F);
  if (verts.empty()) throw std::invalid_argument("embed_facet: F has no vertices");
  RatVec center(fdim);
  for (const RatVec& v : verts) center = vec_add(center, v);
  center = vec_scale(Rat(1, static_cast<long>(verts.size())), center);
  RatVec b_shift = vec_sub(F.b_F, mat_vec(F.A_F, center));
  for (const Rat& bi : b_shift)
    if (bi.sign() <= 0)
      throw std::invalid_argument("embed_facet: F is not full-dimensional");

  Rat total;  // sum lambda_i b_i > 0
  for (int i = 0; i < n; ++i) total += (*lambda)[i] * b_shift[i];
  if (total.sign() == 0) throw std::invalid_argument("embed_facet: degenerate scaling");

  RatMat out(n, fdim + 1);
  for (int i = 0; i < n; ++i) {
    Rat c = (*lambda)[i] / total;
    out(i, 0) = c * b_shift[i];
    for (int j = 0; j < fdim; ++j) out(i, j + 1) = -c * F.A_F(i, j);
  }
  return ArrangementMatrix(std::move(out));
}

RatMat cs_shadow_projection(const DualZonotope& dz, const SignVector& facet_sign,
                            const CsProjectionOptions& opts) {
  if (dz.dim() != 3) throw std::invalid_argument("cs_shadow_projection: require d = 3");
  if (!facet_sign.zero_free()) throw std::invalid_argument("cs_shadow_projection: facet sign must be zero-free");
  if (!realizable(dz.arrangement(), facet_sign))
    throw std::invalid_argument("cs_shadow_projection: facet sign not realizable");

  RatVec coeff(facet_sign.size());
  for (size_t j = 0; j < facet_sign.size(); ++j) coeff[j] = Rat(facet_sign.at(j));
  RatVec normal = vec_mat(coeff, dz.arrangement().matrix());

  std::vector<RatVec> facet_pts;
  for (const DualVertex& v : dz.vertices())
    if (facet_sign.extends(v.sign)) facet_pts.push_back(v.point);
  if (facet_pts.size() < 3) throw std::invalid_argument("cs_shadow_projection: facet has fewer than 3 vertices");

  std::vector<RatVec> in_facet = kernel_basis(RatMat::from_rows({normal}, 3));

  std::mt19937 rng(opts.seed);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 8);

  // Looking almost edge-on at G, one boundary chain of G reaches the
  // silhouette directly and the complementary chain reaches it on the
  // antipodal facet -G. Accept the projection when the facet vertices project
  // injectively and the two chains together put at least as many distinct
  // vertices on the shadow boundary as G has.
  const size_t k_target = facet_pts.size();
  auto projected_hull_keeps_facet = [&](const RatMat& P) {
    std::vector<Vec2> all;
    for (const DualVertex& v : dz.vertices()) {
      RatVec q = mat_vec(P, v.point);
      all.push_back({q[0], q[1]});
    }
    Polygon2 hull = hull2(all);
    std::set<Vec2> hull_verts(hull.points.begin(), hull.points.end());
    std::set<Vec2> images, traced;
    for (const RatVec& v : facet_pts) {
      RatVec q = mat_vec(P, v);
      Vec2 img{q[0], q[1]};
      if (!images.insert(img).second) return false;  // two facet vertices collide
      if (hull_verts.count(img)) {
        traced.insert(img);
        traced.insert({-img.x, -img.y});  // the mirrored chain on -G
      }
    }
    return traced.size() >= k_target;
  };

  for (int draw = 0; draw < opts.max_draws; ++draw) {
    Rat t = draw == 0 ? Rat(0) : Rat(num(rng), den(rng));
    RatVec dir = vec_add(in_facet[0], vec_scale(t, in_facet[1]));
    // generic within the facet plane: no two facet vertices aligned with dir
    bool generic = true;
    for (size_t a = 0; a < facet_pts.size() && generic; ++a)
      for (size_t b = a + 1; b < facet_pts.size() && generic; ++b) {
        RatVec diff = vec_sub(facet_pts[a], facet_pts[b]);
        if (rank(RatMat::from_rows({diff, dir}, 3)) < 2) generic = false;
      }
    if (!generic) continue;

    Rat eps(1);
    for (int h = 0; h <= opts.max_halvings; ++h, eps /= Rat(2)) {
      for (int s : {1, -1}) {
        RatVec axis = vec_add(dir, vec_scale(Rat(s) * eps, normal));
        std::vector<RatVec> rows = kernel_basis(RatMat::from_rows({axis}, 3));
        RatMat P = RatMat::from_rows(rows, 3);
        if (projected_hull_keeps_facet(P)) return P;
      }
    }
  }
  throw SearchFailure("cs_shadow_projection: no admissible perturbation found within configured bounds");
}

}  // namespace zono
