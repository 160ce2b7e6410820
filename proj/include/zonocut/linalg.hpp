#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "zonocut/rat.hpp"

namespace zono {

using RatVec = std::vector<Rat>;

// Dense rational matrix, row-major. Dimensions are fixed at construction.
class RatMat {
 public:
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RatMat: negative dimension");
  }
  RatMat(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMat identity(int n);
  static RatMat from_rows(const std::vector<RatVec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  RatVec row(int r) const;
  void set_row(int r, const RatVec& v);
  RatMat transposed() const;

  friend bool operator==(const RatMat& a, const RatMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

Rat dot(const RatVec& a, const RatVec& b);
RatVec mat_vec(const RatMat& M, const RatVec& x);   // M x
RatVec vec_mat(const RatVec& y, const RatMat& M);   // y^T M
RatMat mat_mul(const RatMat& A, const RatMat& B);
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& t, const RatVec& a);
bool is_zero_vec(const RatVec& a);

// Lexicographic order on rational vectors; used for canonical sorting.
int compare_vec(const RatVec& a, const RatVec& b);

int rank(const RatMat& M);

// One exact solution of M x = b (free variables set to 0), or absent if the
// system is inconsistent.
std::optional<RatVec> solve(const RatMat& M, const RatVec& b);

// Basis of { x : M x = 0 }. Empty iff M has full column rank.
std::vector<RatVec> kernel_basis(const RatMat& M);

}  // namespace zono
