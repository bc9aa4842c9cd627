#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dkp/errors.hpp"
#include "dkp/rational.hpp"

namespace dkp {

/// Scalars the dense kernels work over: an exact field with conjugation.
template <typename T>
concept ExactField = requires(T a, T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { conj(a) } -> std::convertible_to<T>;
  T(0);
  T(1);
};

/// Dense row-major matrix. Equality is exact entrywise equality.
template <ExactField T>
class DenseMatrix {
 public:
  using value_type = T;

  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  DenseMatrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw ShapeError("ragged initializer list");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }
  static DenseMatrix zero(std::size_t rows, std::size_t cols) { return DenseMatrix(rows, cols); }
  static DenseMatrix diagonal(const std::vector<T>& d) {
    DenseMatrix m(d.size(), d.size());
    for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
    return m;
  }
  /// Columns must all be n x 1 with the same n.
  static DenseMatrix from_columns(const std::vector<DenseMatrix>& columns, std::size_t rows_if_empty = 0) {
    const std::size_t n = columns.empty() ? rows_if_empty : columns.front().rows();
    DenseMatrix m(n, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].cols() != 1 || columns[j].rows() != n)
        throw ShapeError("from_columns: column " + std::to_string(j) + " has shape " + columns[j].shape_string());
      for (std::size_t i = 0; i < n; ++i) m(i, j) = columns[j](i, 0);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& entries() const { return data_; }

  DenseMatrix column(std::size_t j) const {
    DenseMatrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }
  std::vector<DenseMatrix> columns() const {
    std::vector<DenseMatrix> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return dkp::is_zero(x); });
  }
  std::size_t nonzero_count() const {
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [](const T& x) { return !dkp::is_zero(x); }));
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    require_square("trace");
    T acc(0);
    for (std::size_t k = 0; k < rows_; ++k) acc += (*this)(k, k);
    return acc;
  }

  DenseMatrix& operator+=(const DenseMatrix& o) {
    require_same_shape(o, "mat_add");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  DenseMatrix& operator-=(const DenseMatrix& o) {
    require_same_shape(o, "mat_sub");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  DenseMatrix& operator*=(const T& c) {
    if (dkp::is_zero(c)) {
      std::fill(data_.begin(), data_.end(), T(0));
      return *this;
    }
    for (auto& x : data_)
      if (!dkp::is_zero(x)) x *= c;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator-(DenseMatrix a) { return a *= T(-1); }
  friend DenseMatrix operator*(const T& c, DenseMatrix a) { return a *= c; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_)
      throw ShapeError("mat_mul: shape mismatch " + a.shape_string() + " vs " + b.shape_string());
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (dkp::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (!dkp::is_zero(bkj)) c(i, j) += aik * bkj;
        }
      }
    return c;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const DenseMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << to_string(m(i, j));
    }
    return os << ']';
  }

 private:
  void require_same_shape(const DenseMatrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ShapeError(std::string(op) + ": shape mismatch " + shape_string() + " vs " + o.shape_string());
  }
  void require_square(const char* op) const {
    if (!is_square()) throw ShapeError(std::string(op) + ": matrix is not square (" + shape_string() + ")");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = DenseMatrix<GaussianRational>;
using RationalMatrix = DenseMatrix<Rational>;

template <ExactField T>
DenseMatrix<T> mat_add(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  return a + b;
}
template <ExactField T>
DenseMatrix<T> mat_mul(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  return a * b;
}
template <ExactField T>
DenseMatrix<T> scalar_mul(const T& c, const DenseMatrix<T>& a) {
  return c * a;
}

/// (a^dagger)_{ij} = conj(a_{ji})
template <ExactField T>
DenseMatrix<T> conj_transpose(const DenseMatrix<T>& a) {
  DenseMatrix<T> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = conj(a(i, j));
  return t;
}

template <ExactField T>
DenseMatrix<T> kron(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  DenseMatrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& aij = a(i, j);
      if (is_zero(aij)) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) k(i * b.rows() + r, j * b.cols() + c) = aij * b(r, c);
    }
  return k;
}

/// ab - ba
template <ExactField T>
DenseMatrix<T> commutator(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw ShapeError("commutator: shape mismatch " + a.shape_string() + " vs " + b.shape_string());
  return a * b - b * a;
}

template <ExactField T>
DenseMatrix<T> anticommutator(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw ShapeError("anticommutator: shape mismatch " + a.shape_string() + " vs " + b.shape_string());
  return a * b + b * a;
}

/// [a; b]
template <ExactField T>
DenseMatrix<T> vstack(const std::vector<DenseMatrix<T>>& blocks) {
  if (blocks.empty()) return {};
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw ShapeError("vstack: column mismatch " + blocks.front().shape_string() + " vs " + b.shape_string());
    rows += b.rows();
  }
  DenseMatrix<T> out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) out(r0 + i, j) = b(i, j);
    r0 += b.rows();
  }
  return out;
}

/// Block-diagonal matrix with the given square blocks.
template <ExactField T>
DenseMatrix<T> block_diagonal(const std::vector<DenseMatrix<T>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  DenseMatrix<T> out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw ShapeError("block_diagonal: block is not square (" + b.shape_string() + ")");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return out;
}

/// Row-major vectorization into an (rows*cols) x 1 column.
template <ExactField T>
DenseMatrix<T> vectorize(const DenseMatrix<T>& a) {
  DenseMatrix<T> v(a.rows() * a.cols(), 1);
  for (std::size_t k = 0; k < a.entries().size(); ++k) v(k, 0) = a.entries()[k];
  return v;
}

template <ExactField T>
DenseMatrix<T> unvectorize(const DenseMatrix<T>& v, std::size_t rows, std::size_t cols) {
  if (v.cols() != 1 || v.rows() != rows * cols)
    throw ShapeError("unvectorize: " + v.shape_string() + " cannot be reshaped to " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  DenseMatrix<T> a(rows, cols);
  for (std::size_t k = 0; k < rows * cols; ++k) a(k / cols, k % cols) = v(k, 0);
  return a;
}

template <ExactField T>
DenseMatrix<T> power(const DenseMatrix<T>& a, std::size_t exponent) {
  if (!a.is_square()) throw ShapeError("power: matrix is not square (" + a.shape_string() + ")");
  DenseMatrix<T> result = DenseMatrix<T>::identity(a.rows());
  for (std::size_t k = 0; k < exponent; ++k) result = result * a;
  return result;
}

inline bool all_canonical(const Matrix& m) {
  return std::all_of(m.entries().begin(), m.entries().end(), [](const auto& z) { return is_canonical(z); });
}

}  // namespace dkp
