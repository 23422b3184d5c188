#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyac/errors.hpp"

// Small dense exact linear algebra over any field type providing
// +,-,*,/ and is_zero().  Desk-scale sizes; plain Gaussian elimination.

namespace polyac {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
std::size_t row_echelon(Matrix<T>& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    const T inv = T(1) / a[rank][col];
    for (std::size_t j = col; j < cols; ++j) a[rank][j] = a[rank][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col].is_zero()) continue;
      const T factor = a[i][col];
      for (std::size_t j = col; j < cols; ++j)
        a[i][j] = a[i][j] - factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

template <class T>
std::size_t rank(Matrix<T> a) {
  return row_echelon(a);
}

/// Solves a*x = b; nullopt when the system is inconsistent.  When the
/// solution space is positive-dimensional, free variables are set to 0.
template <class T>
std::optional<std::vector<T>> solve(Matrix<T> a, const std::vector<T>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  row_echelon(a);
  std::vector<T> x(cols, T(0));
  for (std::size_t i = 0; i < rows; ++i) {
    std::size_t lead = 0;
    while (lead < cols && a[i][lead].is_zero()) ++lead;
    if (lead == cols) {
      if (!a[i][cols].is_zero()) return std::nullopt;
      continue;
    }
    x[lead] = a[i][cols];
  }
  return x;
}

template <class T>
T determinant(Matrix<T> a) {
  const std::size_t n = a.size();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return T(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = T(0) - det;
    }
    det = det * a[col][col];
    const T inv = T(1) / a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      const T factor = a[i][col] * inv;
      for (std::size_t j = col; j < n; ++j)
        a[i][j] = a[i][j] - factor * a[col][j];
    }
  }
  return det;
}

}  // namespace polyac
