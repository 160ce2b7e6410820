#include "zonocut/simplex.hpp"

namespace zono {

namespace {

// Phase-I simplex on  D z = g, z >= 0  (g >= 0 after row flips), minimizing
// the sum of one artificial variable per row. Bland's rule on both the
// entering and the leaving choice guarantees termination. Returns the basic
// solution restricted to the structural columns, or absent if the optimum is
// positive.
std::optional<RatVec> phase_one(const RatMat& D, const RatVec& g) {
  const int m = D.rows();
  const int n = D.cols();
  const int total = n + m;  // structural + artificial

  // tableau rows 0..m-1: constraints, row m: reduced costs; column 'total': rhs
  RatMat T(m + 1, total + 1);
  for (int i = 0; i < m; ++i) {
    int flip = g[i].sign() < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) T(i, j) = Rat(flip) * D(i, j);
    T(i, n + i) = Rat(1);
    T(i, total) = Rat(flip) * g[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  // objective = sum of artificials; reduced cost row = -sum of constraint rows
  for (int j = 0; j <= total; ++j) {
    Rat s;
    for (int i = 0; i < m; ++i) s -= T(i, j);
    T(m, j) = s;
  }
  for (int i = 0; i < m; ++i) T(m, n + i) = Rat(0);

  for (;;) {
    int enter = -1;
    for (int j = 0; j < total; ++j)
      if (T(m, j).sign() < 0) { enter = j; break; }
    if (enter < 0) break;

    int leave = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (T(i, enter).sign() <= 0) continue;
      Rat ratio = T(i, total) / T(i, enter);
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return std::nullopt;  // unbounded; cannot happen for phase I

    Rat pivot = T(leave, enter);
    for (int j = 0; j <= total; ++j) T(leave, j) /= pivot;
    for (int i = 0; i <= m; ++i) {
      if (i == leave || T(i, enter).is_zero()) continue;
      Rat f = T(i, enter);
      for (int j = 0; j <= total; ++j) T(i, j) -= f * T(leave, j);
    }
    basis[leave] = enter;
  }

  if (!T(m, total).is_zero()) return std::nullopt;  // optimum = -T(m,total) > 0

  RatVec z(n);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) z[basis[i]] = T(i, total);
  return z;
}

}  // namespace

std::optional<RatVec> lp_feasible(const RatMat& E, const RatVec& f,
                                  const RatMat& G, const RatVec& h) {
  if (E.rows() != static_cast<int>(f.size()) || G.rows() != static_cast<int>(h.size()))
    throw std::invalid_argument("lp_feasible: dimension mismatch");
  int q = E.rows() > 0 ? E.cols() : G.cols();
  if ((E.rows() > 0 && E.cols() != q) || (G.rows() > 0 && G.cols() != q))
    throw std::invalid_argument("lp_feasible: inconsistent variable count");

  // z = [x+, x-, s];  E(x+ - x-) = f;  G(x+ - x-) - s = h
  const int me = E.rows(), mg = G.rows();
  RatMat D(me + mg, 2 * q + mg);
  RatVec g(me + mg);
  for (int i = 0; i < me; ++i) {
    for (int j = 0; j < q; ++j) {
      D(i, j) = E(i, j);
      D(i, q + j) = -E(i, j);
    }
    g[i] = f[i];
  }
  for (int i = 0; i < mg; ++i) {
    for (int j = 0; j < q; ++j) {
      D(me + i, j) = G(i, j);
      D(me + i, q + j) = -G(i, j);
    }
    D(me + i, 2 * q + i) = Rat(-1);
    g[me + i] = h[i];
  }

  auto z = phase_one(D, g);
  if (!z) return std::nullopt;
  RatVec x(q);
  for (int j = 0; j < q; ++j) x[j] = (*z)[j] - (*z)[q + j];
  return x;
}

std::optional<RatVec> feasible_strictly_positive_combination(const RatMat& M) {
  const int p = M.rows();
  if (p == 0) return std::nullopt;
  RatVec ones(p, Rat(1));
  return lp_feasible(M.transposed(), RatVec(M.cols()), RatMat::identity(p), ones);
}

}  // namespace zono
