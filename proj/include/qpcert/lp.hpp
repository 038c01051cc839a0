#pragma once

#include <optional>

#include "qpcert/linalg.hpp"
#include "qpcert/polytope.hpp"
#include "qpcert/rational.hpp"

namespace qpcert {

struct LpResult {
  enum Status { Optimal, Infeasible, Unbounded } status = Infeasible;
  Rat value;
  RatVec argmin;
};

namespace detail {

// Exact tableau simplex. Bland's rule throughout, so termination needs no
// tolerances or anti-cycling perturbation.
class SimplexTableau {
 public:
  SimplexTableau(Mat a, RatVec b, std::vector<std::size_t> basis)
      : a_(std::move(a)), b_(std::move(b)), basis_(std::move(basis)) {}

  enum Outcome { Opt, Unbd };

  Outcome minimize(const RatVec& cost) {
    // reduced-cost row, canonicalized against the current basis
    cost_ = cost;
    obj_ = 0;
    for (std::size_t r = 0; r < rows(); ++r) {
      const Rat f = cost_[basis_[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols(); ++j) cost_[j] -= f * a_[r][j];
      obj_ -= f * b_[r];
    }
    for (;;) {
      std::size_t enter = cols();
      for (std::size_t j = 0; j < cols(); ++j)
        if (cost_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == cols()) return Opt;
      std::size_t leave = rows();
      std::optional<Rat> best;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (a_[r][enter] <= 0) continue;
        Rat ratio = b_[r] / a_[r][enter];
        if (!best || ratio < *best ||
            (ratio == *best && basis_[r] < basis_[leave])) {
          best = ratio;
          leave = r;
        }
      }
      if (leave == rows()) return Unbd;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t j) {
    const Rat inv = 1 / a_[r][j];
    for (auto& v : a_[r]) v *= inv;
    b_[r] *= inv;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || a_[i][j] == 0) continue;
      const Rat f = a_[i][j];
      for (std::size_t k = 0; k < cols(); ++k) a_[i][k] -= f * a_[r][k];
      b_[i] -= f * b_[r];
    }
    if (cost_[j] != 0) {
      const Rat f = cost_[j];
      for (std::size_t k = 0; k < cols(); ++k) cost_[k] -= f * a_[r][k];
      obj_ -= f * b_[r];
    }
    basis_[r] = j;
  }

  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return a_.empty() ? 0 : a_[0].size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const RatVec& rhs() const { return b_; }
  Rat objective() const { return -obj_; }
  Mat& body() { return a_; }
  RatVec& rhs_mut() { return b_; }
  std::vector<std::size_t>& basis_mut() { return basis_; }

 private:
  Mat a_;
  RatVec b_;
  std::vector<std::size_t> basis_;
  RatVec cost_;
  Rat obj_ = 0;  // negated running objective of the canonical cost row
};

inline std::optional<Rat> max_step(const Polytope& p, const RatVec& x, const RatVec& d) {
  std::optional<Rat> t;
  for (const auto& c : p.ineqs) {
    const Rat s = dot(c.a, d);
    if (s <= 0) continue;
    Rat cand = (c.b - dot(c.a, x)) / s;
    if (!t || cand < *t) t = cand;
  }
  return t;
}

// Walk from an optimal point to an optimal vertex: while the active rows are
// rank deficient, move along their null space (objective is constant there at
// an optimum) until a new constraint becomes tight.
inline void crawl_to_vertex(const Polytope& p, const RatVec& obj, RatVec& x) {
  for (int guard = 0; guard <= p.dim; ++guard) {
    Mat active;
    for (const auto& c : p.eqs) active.push_back(c.a);
    for (const auto& c : p.ineqs)
      if (dot(c.a, x) == c.b) active.push_back(c.a);
    std::vector<RatVec> kern;
    if (active.empty()) {
      for (int i = 0; i < p.dim; ++i) kern.push_back(unit_vec(p.dim, i));
    } else {
      kern = kernel_basis(active);
    }
    if (kern.empty()) return;  // vertex
    const RatVec& d = kern.front();
    if (dot(obj, d) != 0) return;
    if (auto t = max_step(p, x, d)) {
      x = vec_add(x, scaled(d, *t));
      continue;
    }
    RatVec nd = scaled(d, Rat(-1));
    if (auto t = max_step(p, x, nd)) {
      x = vec_add(x, scaled(nd, *t));
      continue;
    }
    return;  // polytope contains a whole line through x
  }
}

}  // namespace detail

// Exact minimization of obj^T x over p. When bounded, the reported argmin is
// a vertex whenever the polytope is pointed.
inline LpResult lp_min(const RatVec& obj, const Polytope& p) {
  if (static_cast<int>(obj.size()) != p.dim)
    throw std::invalid_argument("lp_min: objective dimension mismatch");
  const int n = p.dim;
  const std::size_t m = p.ineqs.size() + p.eqs.size();
  if (m == 0) {
    // whole space: bounded only for the zero objective
    if (!is_zero_vec(obj)) return {LpResult::Unbounded, 0, {}};
    return {LpResult::Optimal, 0, RatVec(n, Rat(0))};
  }
  const std::size_t n_slack = p.ineqs.size();
  // columns: u (n), v (n), slacks, artificials
  const std::size_t n_struct = 2 * static_cast<std::size_t>(n) + n_slack;
  const std::size_t n_cols = n_struct + m;

  Mat a(m, RatVec(n_cols, Rat(0)));
  RatVec b(m, Rat(0));
  std::vector<std::size_t> basis(m);
  std::size_t row = 0;
  auto fill_row = [&](const LinCon& c, bool ineq, std::size_t slack_idx) {
    for (int j = 0; j < n; ++j) {
      a[row][j] = c.a[j];
      a[row][n + j] = -c.a[j];
    }
    if (ineq) a[row][2 * n + slack_idx] = 1;
    b[row] = c.b;
    if (b[row] < 0) {
      for (auto& v : a[row]) v = -v;
      b[row] = -b[row];
    }
    a[row][n_struct + row] = 1;  // artificial
    basis[row] = n_struct + row;
    ++row;
  };
  for (std::size_t i = 0; i < p.ineqs.size(); ++i) fill_row(p.ineqs[i], true, i);
  for (const auto& c : p.eqs) fill_row(c, false, 0);

  detail::SimplexTableau tab(std::move(a), std::move(b), std::move(basis));

  // phase 1
  RatVec phase1(n_cols, Rat(0));
  for (std::size_t j = n_struct; j < n_cols; ++j) phase1[j] = 1;
  tab.minimize(phase1);
  if (tab.objective() != 0) return {LpResult::Infeasible, 0, {}};

  // Drive leftover artificials out of the basis; an all-zero row is redundant
  // and harmless (its artificial stays basic at level zero and phase 2 forbids
  // re-entering artificial columns by cost +1 with value pinned at 0).
  for (std::size_t r = 0; r < tab.rows(); ++r) {
    if (tab.basis()[r] < n_struct) continue;
    for (std::size_t j = 0; j < n_struct; ++j)
      if (tab.body()[r][j] != 0) {
        tab.pivot(r, j);
        break;
      }
  }

  // phase 2; artificial columns keep cost +1 so Bland never re-enters them
  RatVec phase2(n_cols, Rat(0));
  for (int j = 0; j < n; ++j) {
    phase2[j] = obj[j];
    phase2[n + j] = -obj[j];
  }
  for (std::size_t j = n_struct; j < n_cols; ++j) phase2[j] = 1;
  if (tab.minimize(phase2) == detail::SimplexTableau::Unbd)
    return {LpResult::Unbounded, 0, {}};

  RatVec x(n, Rat(0));
  for (std::size_t r = 0; r < tab.rows(); ++r) {
    const std::size_t bj = tab.basis()[r];
    if (bj < static_cast<std::size_t>(n))
      x[bj] += tab.rhs()[r];
    else if (bj < static_cast<std::size_t>(2 * n))
      x[bj - n] -= tab.rhs()[r];
  }
  detail::crawl_to_vertex(p, obj, x);
  return {LpResult::Optimal, dot(obj, x), std::move(x)};
}

// Feasibility probe.
inline bool lp_feasible(const Polytope& p) {
  return lp_min(RatVec(p.dim, Rat(0)), p).status == LpResult::Optimal;
}

// Lexicographically smallest point of a polytope (coordinate by coordinate).
// Requires each sequential restriction to be bounded below in that coordinate.
inline std::optional<RatVec> lex_min_point(Polytope p) {
  if (!lp_feasible(p)) return std::nullopt;
  RatVec fixed(p.dim, Rat(0));
  for (int i = 0; i < p.dim; ++i) {
    LpResult r = lp_min(unit_vec(p.dim, i), p);
    if (r.status != LpResult::Optimal) return std::nullopt;  // unbounded coordinate
    fixed[i] = r.value;
    p.add_eq(unit_vec(p.dim, i), r.value);
  }
  return fixed;
}

}  // namespace qpcert
