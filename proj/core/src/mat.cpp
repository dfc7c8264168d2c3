#include "kashina/mat.hpp"

#include <stdexcept>

namespace kashina {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GaussRat(1);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch in +");
  Mat r(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch in -");
  Mat r(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Mat: shape mismatch in *");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const GaussRat& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const GaussRat& bkj = o.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Mat Mat::operator*(const GaussRat& c) const {
  Mat r(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
  return r;
}

Vec Mat::apply(const Vec& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("Mat: shape mismatch in apply");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns in order.
// Pivot choice: first row with nonzero entry in the leftmost unfinished column.
std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    GaussRat inv = m.at(row, col).inv();
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      GaussRat f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int Mat::rank() const {
  Mat m = *this;
  return int(rref(m).size());
}

std::vector<Vec> Mat::kernel_basis() const {
  Mat m = *this;
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols_);
    v[free] = GaussRat(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(int(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> Mat::solve(const Vec& b) const {
  if (int(b.size()) != rows_) throw std::invalid_argument("Mat: rhs size mismatch in solve");
  Mat aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
  Vec x(cols_);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), cols_);
  return x;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("Mat: inverse of non-square");
  Mat aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = GaussRat(1);
  }
  std::vector<int> pivots = rref(aug);
  if (int(pivots.size()) != rows_ || pivots.back() != rows_ - 1) return std::nullopt;
  Mat inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

GaussRat Mat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("Mat: det of non-square");
  Mat m = *this;
  GaussRat d(1);
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int p = -1;
    for (int i = row; i < rows_; ++i)
      if (!m.at(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return GaussRat(0);
    if (p != row) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(row, j));
      d = -d;
    }
    d *= m.at(row, col);
    GaussRat inv = m.at(row, col).inv();
    for (int i = row + 1; i < rows_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      GaussRat f = m.at(i, col) * inv;
      for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    ++row;
  }
  return row == rows_ ? d : GaussRat(0);
}

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (!b.at(k, l).is_zero()) r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

Mat permute_factors(int n, const std::vector<int>& dims, const std::vector<int>& perm) {
  if (int(dims.size()) != n || int(perm.size()) != n) throw std::invalid_argument("permute_factors: bad sizes");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) throw std::invalid_argument("permute_factors: not a permutation");
    seen[p] = true;
  }
  std::vector<int> out_dims(n);
  for (int k = 0; k < n; ++k) out_dims[perm[k]] = dims[k];
  long total = 1;
  for (int d : dims) total *= d;
  std::vector<long> in_stride(n, 1), out_stride(n, 1);
  for (int k = n - 2; k >= 0; --k) in_stride[k] = in_stride[k + 1] * dims[k + 1];
  for (int k = n - 2; k >= 0; --k) out_stride[k] = out_stride[k + 1] * out_dims[k + 1];
  const int total_i = int(total);
  Mat r(total_i, total_i);
  std::vector<int> idx(n, 0);
  for (long col = 0; col < total; ++col) {
    long row = 0;
    for (int k = 0; k < n; ++k) row += idx[k] * out_stride[perm[k]];
    r.at(int(row), int(col)) = GaussRat(1);
    for (int k = n - 1; k >= 0; --k) {
      if (++idx[k] < dims[k]) break;
      idx[k] = 0;
    }
  }
  return r;
}

}  // namespace kashina
