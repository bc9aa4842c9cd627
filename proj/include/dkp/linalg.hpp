#pragma once

// Exact elimination kernels: RREF, kernels, linear solves, inverses, and the
// vectorized Sylvester-family solver used for commutants and intertwiners.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dkp/errors.hpp"
#include "dkp/matrix.hpp"

namespace dkp {

template <ExactField T>
struct RrefResult {
  DenseMatrix<T> reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Gauss-Jordan elimination. The pivot in each column is the first nonzero
/// entry at or below the current row, so the output is deterministic.
template <ExactField T>
RrefResult<T> rref(DenseMatrix<T> m) {
  RrefResult<T> out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));

    const T inv = T(1) / m(r, c);
    support.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (!is_zero(m(r, j))) {
        m(r, j) *= inv;
        support.push_back(j);
      }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const T f = m(i, c);
      for (std::size_t j : support) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

template <ExactField T>
std::size_t rank(const DenseMatrix<T>& a) {
  return rref(a).rank;
}

/// Basis of the right kernel in the standard free-variable form: one vector
/// per free column with a 1 in that slot and 0 in every other free slot.
template <ExactField T>
std::vector<DenseMatrix<T>> null_space(const DenseMatrix<T>& a) {
  const auto r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<DenseMatrix<T>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    DenseMatrix<T> v(a.cols(), 1);
    v(f, 0) = T(1);
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
      const T& x = r.reduced(k, f);
      if (!is_zero(x)) v(r.pivots[k], 0) = T(0) - x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <ExactField T>
DenseMatrix<T> hstack(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack: row mismatch " + a.shape_string() + " vs " + b.shape_string());
  DenseMatrix<T> out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

/// Some X with a X = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
template <ExactField T>
std::optional<DenseMatrix<T>> solve(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve: row mismatch " + a.shape_string() + " vs " + b.shape_string());
  const auto r = rref(hstack(a, b));
  DenseMatrix<T> x(a.cols(), b.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) {
    if (r.pivots[k] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[k], j) = r.reduced(k, a.cols() + j);
  }
  return x;
}

template <ExactField T>
std::optional<DenseMatrix<T>> inverse(const DenseMatrix<T>& a) {
  if (!a.is_square()) throw ShapeError("inverse: matrix is not square (" + a.shape_string() + ")");
  const std::size_t n = a.rows();
  if (n == 0) return a;
  const auto r = rref(hstack(a, DenseMatrix<T>::identity(n)));
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  DenseMatrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

template <ExactField T>
bool is_invertible(const DenseMatrix<T>& a) {
  return a.is_square() && rank(a) == a.rows();
}

/// Canonical (RREF) basis of the span of the given columns.
template <ExactField T>
std::vector<DenseMatrix<T>> column_span_basis(const std::vector<DenseMatrix<T>>& columns) {
  if (columns.empty()) return {};
  const auto r = rref(DenseMatrix<T>::from_columns(columns).transpose());
  std::vector<DenseMatrix<T>> basis;
  for (std::size_t k = 0; k < r.rank; ++k) {
    DenseMatrix<T> v(r.reduced.cols(), 1);
    for (std::size_t j = 0; j < r.reduced.cols(); ++j) v(j, 0) = r.reduced(k, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <ExactField T>
struct SylvesterPair {
  DenseMatrix<T> a;  // n x n, acts on the right of X
  DenseMatrix<T> b;  // m x m, acts on the left of X
};

/// Basis of { X (m x n) : X a_k = b_k X for every pair }, obtained as the
/// kernel of the stacked vectorized system.
template <ExactField T>
std::vector<DenseMatrix<T>> solve_sylvester_family(const std::vector<SylvesterPair<T>>& pairs) {
  if (pairs.empty()) throw PreconditionError("solve_sylvester_family: empty family");
  const std::size_t n = pairs.front().a.rows(), m = pairs.front().b.rows();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [a, b] = pairs[k];
    if (!a.is_square() || !b.is_square() || a.rows() != n || b.rows() != m)
      throw ShapeError("solve_sylvester_family: inconsistent dimensions across pairs (pair 0 has " +
                       pairs.front().a.shape_string() + " / " + pairs.front().b.shape_string() + ", pair " +
                       std::to_string(k) + " has " + a.shape_string() + " / " + b.shape_string() + ")");
  }
  const std::size_t unknowns = m * n;
  DenseMatrix<T> system(pairs.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (const auto& [a, b] : pairs) {
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c, ++row) {
        // (X a)_{rc} - (b X)_{rc}
        for (std::size_t k = 0; k < n; ++k)
          if (!is_zero(a(k, c))) system(row, r * n + k) += a(k, c);
        for (std::size_t k = 0; k < m; ++k)
          if (!is_zero(b(r, k))) system(row, k * n + c) -= b(r, k);
      }
  }
  std::vector<DenseMatrix<T>> out;
  for (const auto& v : null_space(system)) out.push_back(unvectorize(v, m, n));
  return out;
}

/// Monic minimal polynomial, coefficients from the constant term upward.
template <ExactField T>
std::vector<T> minimal_polynomial(const DenseMatrix<T>& c) {
  if (!c.is_square()) throw ShapeError("minimal_polynomial: matrix is not square (" + c.shape_string() + ")");
  const std::size_t n = c.rows();
  std::vector<DenseMatrix<T>> powers{vectorize(DenseMatrix<T>::identity(n))};
  DenseMatrix<T> current = DenseMatrix<T>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    current = current * c;
    const auto v = vectorize(current);
    if (auto coeffs = solve(DenseMatrix<T>::from_columns(powers), v)) {
      std::vector<T> poly;
      for (std::size_t j = 0; j < k; ++j) poly.push_back(T(0) - (*coeffs)(j, 0));
      poly.push_back(T(1));
      return poly;
    }
    powers.push_back(v);
  }
  throw std::logic_error("minimal_polynomial: degree exceeded matrix size");
}

}  // namespace dkp
