#pragma once

#include <vector>

#include "nat/rational.hpp"

namespace nat {

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;

inline IntMat int_matrix(int rows, int cols) { return IntMat(rows, std::vector<Int>(cols, 0)); }

inline IntMat transpose(const IntMat& a) {
  if (a.empty()) return {};
  IntMat t(a[0].size(), std::vector<Int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline IntMat matmul(const IntMat& a, const IntMat& b) {
  if (a.empty() || b.empty()) return int_matrix(static_cast<int>(a.size()), b.empty() ? 0 : static_cast<int>(b[0].size()));
  IntMat c(a.size(), std::vector<Int>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline IntMat matadd(const IntMat& a, const IntMat& b) {
  IntMat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) c[i][j] += b[i][j];
  return c;
}

inline bool is_zero(const IntMat& a) {
  for (const auto& row : a)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
inline int rank(IntMat a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  Int prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// Basis of the right kernel {x : a x = 0}, as columns, via rational RREF.
/// Deterministic: free columns in increasing order, pivot entries set to 1.
inline RatMat kernel_basis(const IntMat& a0) {
  const int rows = static_cast<int>(a0.size());
  const int cols = rows ? static_cast<int>(a0[0].size()) : 0;
  RatMat a(rows, std::vector<Rat>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = Rat(a0[i][j]);

  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != Rat(0)) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    Rat p = a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == Rat(0)) continue;
      Rat f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<char> is_pivot(cols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  RatMat basis(cols);  // one row per coordinate; columns are kernel vectors
  int nullity = cols - r;
  for (int i = 0; i < cols; ++i) basis[i].assign(nullity, Rat(0));
  int k = 0;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis[free][k] = Rat(1);
    for (int pr = 0; pr < r; ++pr) basis[pivot_col[pr]][k] = -a[pr][free];
    ++k;
  }
  return basis;
}

/// Solve A X = B exactly where A has full column rank; returns X.
/// Throws InvalidInput when the system is inconsistent or rank-deficient.
inline RatMat solve_full_column_rank(const RatMat& A, const RatMat& B) {
  const int rows = static_cast<int>(A.size());
  const int cols = rows ? static_cast<int>(A[0].size()) : 0;
  const int bcols = B.empty() ? 0 : static_cast<int>(B[0].size());
  RatMat aug(rows, std::vector<Rat>(cols + bcols));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = A[i][j];
    for (int j = 0; j < bcols; ++j) aug[i][cols + j] = B[i][j];
  }
  int r = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (aug[i][c] != Rat(0)) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw InvalidInput("solve: matrix is rank deficient");
    std::swap(aug[r], aug[pivot]);
    Rat p = aug[r][c];
    for (int j = c; j < cols + bcols; ++j) aug[r][j] /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || aug[i][c] == Rat(0)) continue;
      Rat f = aug[i][c];
      for (int j = c; j < cols + bcols; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < cols) throw InvalidInput("solve: matrix is rank deficient");
  for (int i = r; i < rows; ++i)
    for (int j = 0; j < bcols; ++j)
      if (aug[i][cols + j] != Rat(0)) throw InvalidInput("solve: inconsistent system");
  RatMat X(cols, std::vector<Rat>(bcols));
  for (int pr = 0; pr < r; ++pr)
    for (int j = 0; j < bcols; ++j) X[pivot_col[pr]][j] = aug[pr][cols + j];
  return X;
}

}  // namespace nat
