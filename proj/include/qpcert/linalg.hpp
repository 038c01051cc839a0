#pragma once

#include <vector>

#include "qpcert/rational.hpp"
#include "qpcert/symmat.hpp"

namespace qpcert {

// Dense rational matrix, row major.
using Mat = std::vector<RatVec>;

inline Mat mat_from_sym(const SymMat& m) {
  Mat rows(m.dim(), RatVec(m.dim()));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) rows[i][j] = m(i, j);
  return rows;
}

// Full description of the solution set of M x = rhs.
struct LinearSolution {
  enum Kind { Unique, Affine, Empty } kind = Empty;
  RatVec particular;        // valid unless Empty
  std::vector<RatVec> kernel;  // basis of the null space; empty iff Unique
};

// Exact Gauss-Jordan. Accepts any m x n rational matrix.
inline LinearSolution solve_linear(Mat m, RatVec rhs) {
  const std::size_t rows = m.size();
  if (rows != rhs.size()) throw std::invalid_argument("solve_linear: row/rhs mismatch");
  const std::size_t cols = rows ? m[0].size() : 0;
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");

  std::vector<std::size_t> pivot_col;  // pivot column of row r
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    std::swap(rhs[p], rhs[r]);
    const Rat inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (rhs[i] != 0) return {};  // inconsistent

  LinearSolution sol;
  sol.particular.assign(cols, Rat(0));
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    is_pivot[pivot_col[i]] = true;
    sol.particular[pivot_col[i]] = rhs[i];
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec basis(cols, Rat(0));
    basis[c] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) basis[pivot_col[i]] = -m[i][c];
    sol.kernel.push_back(std::move(basis));
  }
  sol.kind = sol.kernel.empty() ? LinearSolution::Unique : LinearSolution::Affine;
  return sol;
}

inline std::vector<RatVec> kernel_basis(const Mat& m) {
  RatVec zero(m.size(), Rat(0));
  return solve_linear(m, zero).kernel;
}

inline int mat_rank(Mat m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

inline Rat determinant(Mat m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace qpcert
