#pragma once

#include <optional>

#include "qpcert/linalg.hpp"
#include "qpcert/rational.hpp"
#include "qpcert/symmat.hpp"

namespace qpcert {

// Verdict for semidefiniteness questions. When the property fails, `witness`
// is a nonzero vector and `value` = witness^T M witness violates it
// (value < 0 for is_psd, value <= 0 for is_pd).
struct DefinitenessVerdict {
  bool holds = false;
  RatVec witness;
  Rat value;
};

namespace detail {

// Symmetric pivoted elimination. Returns a witness w with w^T M w < 0, or
// nothing when M is PSD. Witnesses found in a Schur complement are lifted
// back through the pivot: for M = [[d, c^T],[c, B]] with d > 0 and
// S = B - c c^T / d, setting w_pivot = -(c^T y)/d gives w^T M w = y^T S y.
inline std::optional<RatVec> psd_witness(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return std::nullopt;

  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] < 0) {
      RatVec w(n, Rat(0));
      w[i] = 1;
      return w;
    }
  }

  std::size_t pivot = n;
  for (std::size_t i = 0; i < n && pivot == n; ++i)
    if (m[i][i] > 0) pivot = i;

  if (pivot == n) {
    // All diagonal entries are zero; any off-diagonal nonzero is indefinite.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (m[i][j] != 0) {
          RatVec w(n, Rat(0));
          w[i] = 1;
          w[j] = m[i][j] > 0 ? Rat(-1) : Rat(1);
          return w;
        }
    return std::nullopt;  // zero matrix
  }

  const Rat& d = m[pivot][pivot];
  Mat schur(n - 1, RatVec(n - 1));
  std::vector<std::size_t> rest;
  rest.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    if (i != pivot) rest.push_back(i);
  for (std::size_t a = 0; a < rest.size(); ++a)
    for (std::size_t b = 0; b < rest.size(); ++b)
      schur[a][b] = m[rest[a]][rest[b]] - m[rest[a]][pivot] * m[pivot][rest[b]] / d;

  auto sub = psd_witness(schur);
  if (!sub) return std::nullopt;
  RatVec w(n, Rat(0));
  Rat proj = 0;
  for (std::size_t a = 0; a < rest.size(); ++a) {
    w[rest[a]] = (*sub)[a];
    proj += m[pivot][rest[a]] * (*sub)[a];
  }
  w[pivot] = -proj / d;
  return w;
}

}  // namespace detail

inline DefinitenessVerdict is_psd(const SymMat& m) {
  DefinitenessVerdict v;
  auto w = detail::psd_witness(mat_from_sym(m));
  if (!w) {
    v.holds = true;
    return v;
  }
  v.holds = false;
  v.witness = std::move(*w);
  v.value = m.quad(v.witness);
  return v;
}

inline DefinitenessVerdict is_pd(const SymMat& m) {
  DefinitenessVerdict v = is_psd(m);
  if (!v.holds) return v;  // value < 0 also refutes PD
  auto kern = kernel_basis(mat_from_sym(m));
  if (!kern.empty()) {
    v.holds = false;
    v.witness = kern.front();
    v.value = 0;
    return v;
  }
  v.holds = true;
  return v;
}

}  // namespace qpcert
