#pragma once

#include <optional>
#include <vector>

#include "kashina/gaussrat.hpp"

namespace kashina {

using Vec = std::vector<GaussRat>;

// Dense matrix over Q(i), row-major. Everything here is exact; pivoting is
// deterministic (first nonzero in column order) so kernels are reproducible.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  GaussRat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const GaussRat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_zero() const;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const GaussRat& c) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  Mat transpose() const;

  int rank() const;
  // Basis of the right kernel, echelon-normalized: one vector per free column,
  // unit entry at its free column, RREF back-substituted entries elsewhere.
  std::vector<Vec> kernel_basis() const;
  std::optional<Vec> solve(const Vec& b) const;  // one solution of A x = b, or nullopt
  std::optional<Mat> inverse() const;
  GaussRat det() const;  // square only

 private:
  int rows_, cols_;
  std::vector<GaussRat> a_;
};

// Kronecker product; kron(A,B)(u (x) v) = Au (x) Bv with index i*dimB + j.
Mat kron(const Mat& a, const Mat& b);

// Matrix on V_{dims[0]} (x) ... (x) V_{dims[n-1]} permuting tensor factors: the image of
// basis vector e_{i_1} (x) ... (x) e_{i_n} is the basis vector whose factor at slot
// perm[k] is e_{i_k} (perm is a bijection of {0..n-1}).
Mat permute_factors(int n, const std::vector<int>& dims, const std::vector<int>& perm);

}  // namespace kashina
