#include "zonocut/linalg.hpp"

#include <algorithm>

namespace zono {

RatMat::RatMat(std::initializer_list<std::initializer_list<Rat>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
  a_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("RatMat: ragged initializer");
    for (const auto& x : r) a_.push_back(x);
  }
}

RatMat RatMat::identity(int n) {
  RatMat I(n, n);
  for (int i = 0; i < n; ++i) I(i, i) = Rat(1);
  return I;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows, int cols) {
  RatMat M(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < M.rows(); ++r) M.set_row(r, rows[r]);
  return M;
}

RatVec RatMat::row(int r) const {
  RatVec v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

void RatMat::set_row(int r, const RatVec& v) {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("RatMat: row length mismatch");
  for (int c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

RatMat RatMat::transposed() const {
  RatMat T(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) T(c, r) = (*this)(r, c);
  return T;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec mat_vec(const RatMat& M, const RatVec& x) {
  if (static_cast<int>(x.size()) != M.cols()) throw std::invalid_argument("mat_vec: dimension mismatch");
  RatVec y(M.rows());
  for (int r = 0; r < M.rows(); ++r) {
    Rat s;
    for (int c = 0; c < M.cols(); ++c) s += M(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

RatVec vec_mat(const RatVec& y, const RatMat& M) {
  if (static_cast<int>(y.size()) != M.rows()) throw std::invalid_argument("vec_mat: dimension mismatch");
  RatVec x(M.cols());
  for (int c = 0; c < M.cols(); ++c) {
    Rat s;
    for (int r = 0; r < M.rows(); ++r) s += y[r] * M(r, c);
    x[c] = s;
  }
  return x;
}

RatMat mat_mul(const RatMat& A, const RatMat& B) {
  if (A.cols() != B.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  RatMat C(A.rows(), B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j) {
      Rat s;
      for (int k = 0; k < A.cols(); ++k) s += A(i, k) * B(k, j);
      C(i, j) = s;
    }
  return C;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: dimension mismatch");
  RatVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: dimension mismatch");
  RatVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

RatVec vec_scale(const Rat& t, const RatVec& a) {
  RatVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = t * a[i];
  return c;
}

bool is_zero_vec(const RatVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x.is_zero(); });
}

int compare_vec(const RatVec& a, const RatVec& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return 0;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMat& M) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < M.cols() && r < M.rows(); ++c) {
    int p = -1;
    for (int i = r; i < M.rows(); ++i)
      if (!M(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < M.cols(); ++j) std::swap(M(p, j), M(r, j));
    Rat inv = Rat(1) / M(r, c);
    for (int j = c; j < M.cols(); ++j) M(r, j) *= inv;
    for (int i = 0; i < M.rows(); ++i) {
      if (i == r || M(i, c).is_zero()) continue;
      Rat f = M(i, c);
      for (int j = c; j < M.cols(); ++j) M(i, j) -= f * M(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(const RatMat& M) {
  RatMat R = M;
  return static_cast<int>(rref(R).size());
}

std::optional<RatVec> solve(const RatMat& M, const RatVec& b) {
  if (static_cast<int>(b.size()) != M.rows()) throw std::invalid_argument("solve: dimension mismatch");
  RatMat Ab(M.rows(), M.cols() + 1);
  for (int r = 0; r < M.rows(); ++r) {
    for (int c = 0; c < M.cols(); ++c) Ab(r, c) = M(r, c);
    Ab(r, M.cols()) = b[r];
  }
  std::vector<int> pivots = rref(Ab);
  if (!pivots.empty() && pivots.back() == M.cols()) return std::nullopt;  // row (0 ... 0 | 1)
  RatVec x(M.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = Ab(static_cast<int>(i), M.cols());
  return x;
}

std::vector<RatVec> kernel_basis(const RatMat& M) {
  RatMat R = M;
  std::vector<int> pivots = rref(R);
  std::vector<bool> is_pivot(M.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int c = 0; c < M.cols(); ++c) {
    if (is_pivot[c]) continue;
    RatVec v(M.cols());
    v[c] = Rat(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -R(static_cast<int>(i), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace zono
