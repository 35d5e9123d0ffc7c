#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperlace {

// Row-major dense matrix, sized at construction, zero-filled by default.
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  bool operator==(const DenseMatrix& other) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

inline DenseMatrix transpose(const DenseMatrix& m) {
  DenseMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

inline DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  return c;
}

inline double frobenius_norm(const DenseMatrix& m) {
  double acc = 0.0;
  for (double v : m.data()) acc += v * v;
  return std::sqrt(acc);
}

inline double max_abs(const DenseMatrix& m) {
  double r = 0.0;
  for (double v : m.data()) r = std::max(r, std::fabs(v));
  return r;
}

inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shapes differ");
  double r = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    r = std::max(r, std::fabs(a.data()[i] - b.data()[i]));
  return r;
}

// Symmetric matrix with full row-major storage. set() writes both triangles,
// so entry (i,j) and entry (j,i) are always the same stored value.
class DenseSymmetricMatrix {
public:
  DenseSymmetricMatrix() = default;
  explicit DenseSymmetricMatrix(std::size_t dim, double fill = 0.0)
      : dim_(dim), data_(dim * dim, fill) {}

  std::size_t dim() const { return dim_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  void set(std::size_t i, std::size_t j, double v) {
    data_[i * dim_ + j] = v;
    data_[j * dim_ + i] = v;
  }

  const std::vector<double>& data() const { return data_; }

  static DenseSymmetricMatrix identity(std::size_t n) {
    DenseSymmetricMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
  }

  DenseMatrix as_dense() const {
    DenseMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
    return m;
  }

  // Wraps a square matrix produced by a floating-point product. Asymmetry
  // above rel_tol (relative to the entry scale) means the input was not a
  // symmetric operator to begin with, so that is rejected rather than hidden;
  // below it, storage is made exactly symmetric via (M + M^T)/2.
  static DenseSymmetricMatrix symmetrized(const DenseMatrix& m, double rel_tol = 1e-12) {
    if (m.rows() != m.cols()) throw std::invalid_argument("symmetrized: matrix not square");
    const std::size_t n = m.rows();
    double scale = std::max(1.0, max_abs(m));
    for (double v : m.data())
      if (!std::isfinite(v)) throw std::invalid_argument("symmetrized: non-finite entry");
    DenseSymmetricMatrix s(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (std::fabs(m(i, j) - m(j, i)) > rel_tol * scale)
          throw std::invalid_argument("symmetrized: asymmetry exceeds " + std::to_string(rel_tol) +
                                      " relative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        s.set(i, j, (m(i, j) + m(j, i)) / 2.0);
      }
    return s;
  }

  bool operator==(const DenseSymmetricMatrix& other) const = default;

private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

inline double frobenius_norm(const DenseSymmetricMatrix& m) {
  double acc = 0.0;
  for (double v : m.data()) acc += v * v;
  return std::sqrt(acc);
}

inline double max_abs(const DenseSymmetricMatrix& m) {
  double r = 0.0;
  for (double v : m.data()) r = std::max(r, std::fabs(v));
  return r;
}

inline double max_abs_diff(const DenseSymmetricMatrix& a, const DenseSymmetricMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimensions differ");
  double r = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    r = std::max(r, std::fabs(a.data()[i] - b.data()[i]));
  return r;
}

// Principal submatrix obtained by dropping one row and the same-indexed column.
inline DenseSymmetricMatrix drop_index(const DenseSymmetricMatrix& m, std::size_t index) {
  if (index >= m.dim()) throw std::out_of_range("drop_index: index out of range");
  DenseSymmetricMatrix s(m.dim() - 1);
  for (std::size_t i = 0, si = 0; i < m.dim(); ++i) {
    if (i == index) continue;
    for (std::size_t j = 0, sj = 0; j < m.dim(); ++j) {
      if (j == index) continue;
      s.set(si, sj, m(i, j));
      ++sj;
    }
    ++si;
  }
  return s;
}

}  // namespace hyperlace
