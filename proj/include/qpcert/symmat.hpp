#pragma once

#include <stdexcept>

#include "qpcert/rational.hpp"

namespace qpcert {

// Dense symmetric rational matrix. Only the upper triangle is stored, so the
// matrix is exactly symmetric by construction.
class SymMat {
 public:
  explicit SymMat(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("SymMat: dim must be >= 1");
    tri_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, Rat(0));
  }

  static SymMat identity(int n) {
    SymMat m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  static SymMat ones(int n) {
    SymMat m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m.set(i, j, 1);
    return m;
  }

  int dim() const { return n_; }

  const Rat& operator()(int i, int j) const { return tri_[index(i, j)]; }

  void set(int i, int j, Rat v) { tri_[index(i, j)] = std::move(v); }

  void add(int i, int j, const Rat& v) { tri_[index(i, j)] += v; }

  RatVec mul(const RatVec& x) const {
    if (static_cast<int>(x.size()) != n_)
      throw std::invalid_argument("SymMat::mul: dimension mismatch");
    RatVec y(n_, Rat(0));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  // x^T M x
  Rat quad(const RatVec& x) const {
    if (static_cast<int>(x.size()) != n_)
      throw std::invalid_argument("SymMat::quad: dimension mismatch");
    Rat s = 0;
    for (int i = 0; i < n_; ++i) {
      s += (*this)(i, i) * x[i] * x[i];
      for (int j = i + 1; j < n_; ++j) s += 2 * (*this)(i, j) * x[i] * x[j];
    }
    return s;
  }

  SymMat principal_submatrix(const std::vector<int>& idx) const {
    if (idx.empty()) throw std::invalid_argument("principal_submatrix: empty index set");
    SymMat sub(static_cast<int>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a; b < idx.size(); ++b) sub.set(static_cast<int>(a), static_cast<int>(b), (*this)(idx[a], idx[b]));
    return sub;
  }

  bool operator==(const SymMat& o) const { return n_ == o.n_ && tri_ == o.tri_; }

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("SymMat index");
    if (i > j) std::swap(i, j);
    // row-major upper triangle
    return static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2 + j;
  }

  int n_;
  std::vector<Rat> tri_;
};

inline SymMat sym_add(const SymMat& a, const SymMat& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("sym_add: dimension mismatch");
  SymMat out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j) out.set(i, j, a(i, j) + b(i, j));
  return out;
}

inline SymMat sym_scale(const SymMat& a, const Rat& s) {
  SymMat out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j) out.set(i, j, a(i, j) * s);
  return out;
}

}  // namespace qpcert
