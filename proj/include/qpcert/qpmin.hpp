#pragma once

#include <optional>

#include "qpcert/definiteness.hpp"
#include "qpcert/lp.hpp"
#include "qpcert/qp.hpp"
#include "qpcert/quartic.hpp"

namespace qpcert {

struct QpMinResult {
  enum Status { Optimal, Infeasible, Unbounded } status = Infeasible;
  Rat value;
  RatVec argmin;
};

inline constexpr int kDefaultQpDimCap = 12;
inline constexpr int kMaxEnumeratedConstraints = 22;

namespace detail {

struct QpCandidate {
  RatVec x;
  Rat value;
};

// Stationary points of qp restricted to each face, by enumerating every
// subset of inequality constraints as the active set. The face's affine hull
// x0 + N t (N a null-space basis of the active rows) reduces stationarity to
//   N^T Q N t = -(1/2) N^T (2 Q x0 + c),
// a system in dim(N) unknowns. On an affine solution family the objective is
// constant, so one feasible representative per family suffices; it is chosen
// lexicographically for determinism. Active sets with dependent rows are
// skipped: their face also arises from an independent subset.
inline std::vector<QpCandidate> qp_candidates(const QpInstance& qp) {
  const int n = qp.feasible.dim;
  const auto& ineqs = qp.feasible.ineqs;
  const auto& eqs = qp.feasible.eqs;
  const std::size_t m = ineqs.size();
  if (m > kMaxEnumeratedConstraints)
    throw ResourceError("exact_qp_min: too many constraints to enumerate");

  std::vector<QpCandidate> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Mat rows;
    RatVec rhs;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) {
        rows.push_back(ineqs[i].a);
        rhs.push_back(ineqs[i].b);
      }
    for (const auto& c : eqs) {
      rows.push_back(c.a);
      rhs.push_back(c.b);
    }
    if (rows.size() > static_cast<std::size_t>(n)) continue;  // never independent

    RatVec x0(n, Rat(0));
    Mat span;  // null-space basis of the active rows
    if (rows.empty()) {
      for (int i = 0; i < n; ++i) span.push_back(unit_vec(n, i));
    } else {
      LinearSolution face = solve_linear(rows, rhs);
      if (face.kind == LinearSolution::Empty) continue;
      if (face.kernel.size() != static_cast<std::size_t>(n) - rows.size())
        continue;  // dependent rows
      x0 = std::move(face.particular);
      span = std::move(face.kernel);
    }

    Mat dirs;
    if (!span.empty()) {
      // reduced stationarity system over the face's parameters
      const std::size_t d = span.size();
      std::vector<RatVec> qn(d);
      for (std::size_t j = 0; j < d; ++j) qn[j] = qp.Q.mul(span[j]);
      Mat red(d, RatVec(d));
      RatVec rrhs(d);
      RatVec g0 = qp.Q.mul(x0);
      for (std::size_t i = 0; i < g0.size(); ++i) g0[i] = 2 * g0[i] + qp.c[i];
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) red[a][b] = 2 * dot(span[a], qn[b]);
        rrhs[a] = -dot(span[a], g0);
      }
      LinearSolution st = solve_linear(std::move(red), std::move(rrhs));
      if (st.kind == LinearSolution::Empty) continue;  // no stationary point on this face
      for (std::size_t j = 0; j < d; ++j)
        x0 = vec_add(x0, scaled(span[j], st.particular[j]));
      for (const auto& kv : st.kernel) {
        RatVec dir(n, Rat(0));
        for (std::size_t j = 0; j < d; ++j) dir = vec_add(dir, scaled(span[j], kv[j]));
        dirs.push_back(std::move(dir));  // independent since span has full column rank
      }
    }

    if (dirs.empty()) {
      if (qp.feasible.contains(x0)) out.push_back({x0, qp.objective(x0)});
      continue;
    }

    // feasible representative of the family x0 + D t
    Polytope tp;
    tp.dim = static_cast<int>(dirs.size());
    for (const auto& con : ineqs) {
      RatVec row(tp.dim);
      for (int j = 0; j < tp.dim; ++j) row[j] = dot(con.a, dirs[j]);
      if (is_zero_vec(row)) {
        if (dot(con.a, x0) > con.b) {
          tp.add_ineq(std::move(row), Rat(-1));  // family entirely infeasible
        }
        continue;
      }
      tp.add_ineq(std::move(row), con.b - dot(con.a, x0));
    }
    std::optional<RatVec> t = lex_min_point(tp);
    if (!t) {
      LpResult any = lp_min(RatVec(tp.dim, Rat(0)), tp);
      if (any.status != LpResult::Optimal) continue;
      t = any.argmin;
    }
    RatVec x = x0;
    for (int j = 0; j < tp.dim; ++j) x = vec_add(x, scaled(dirs[j], (*t)[j]));
    if (qp.feasible.contains(x)) out.push_back({x, qp.objective(x)});
  }
  return out;
}

inline QpMinResult pick_min(const std::vector<QpCandidate>& cands) {
  const QpCandidate* best = nullptr;
  for (const auto& c : cands) {
    if (!best || c.value < best->value ||
        (c.value == best->value && lex_less(c.x, best->x)))
      best = &c;
  }
  if (!best) throw std::logic_error("exact_qp_min: no stationary candidate on a feasible polytope");
  return {QpMinResult::Optimal, best->value, best->x};
}

inline Polytope recession_cone_box(const Polytope& p) {
  Polytope cone;
  cone.dim = p.dim;
  for (const auto& c : p.ineqs) cone.add_ineq(c.a, 0);
  for (const auto& c : p.eqs) cone.add_eq(c.a, 0);
  add_box(cone, 1);
  return dedup_ineqs(cone);
}

inline bool recession_cone_nontrivial(const Polytope& cone_box) {
  for (int i = 0; i < cone_box.dim; ++i) {
    if (lp_min(unit_vec(cone_box.dim, i), cone_box).value < 0) return true;
    if (lp_min(unit_vec(cone_box.dim, i, Rat(-1)), cone_box).value < 0) return true;
  }
  return false;
}

}  // namespace detail

// Exact global minimum of a quadratic over a polyhedron by full active-set
// enumeration. Exponential in the constraint count; dim is capped because no
// general efficient method exists.
inline QpMinResult exact_qp_min(const QpInstance& qp, int cap = kDefaultQpDimCap,
                                bool assume_bounded = false) {
  if (qp.feasible.dim > cap)
    throw ResourceError("exact_qp_min: dimension " + std::to_string(qp.feasible.dim) +
                        " exceeds cap " + std::to_string(cap));
  if (!lp_feasible(qp.feasible)) return {QpMinResult::Infeasible, 0, {}};

  Polytope cone_box = assume_bounded ? Polytope{} : detail::recession_cone_box(qp.feasible);
  if (!assume_bounded && detail::recession_cone_nontrivial(cone_box)) {
    // negative curvature over the recession cone (cross-section by the box)
    QpInstance cone_qp = make_qp(qp.Q, RatVec(qp.feasible.dim, Rat(0)), cone_box);
    auto cone_cands = detail::qp_candidates(cone_qp);
    QpMinResult curv = detail::pick_min(cone_cands);
    if (curv.value < 0) return {QpMinResult::Unbounded, 0, {}};
    // zero-curvature recession directions with negative linear slope
    for (const auto& cand : cone_cands) {
      if (cand.value != 0 || is_zero_vec(cand.x)) continue;
      RatVec slope = qp.Q.mul(cand.x);
      for (Rat& s : slope) s *= 2;
      LpResult lr = lp_min(slope, qp.feasible);
      if (lr.status == LpResult::Unbounded) return {QpMinResult::Unbounded, 0, {}};
      if (lr.value + dot(qp.c, cand.x) < 0) return {QpMinResult::Unbounded, 0, {}};
    }
  }
  return detail::pick_min(detail::qp_candidates(qp));
}

// Motzkin-Straus value: max of x^T A x over the standard simplex.
inline Rat ms_max(const Graph& g, int cap = kDefaultQpDimCap) {
  SymMat neg = sym_scale(g.adjacency(), Rat(-1));
  QpInstance qp = make_qp(std::move(neg), RatVec(g.order(), Rat(0)),
                          standard_simplex(g.order()), "motzkin-straus");
  return -exact_qp_min(qp, cap, /*assume_bounded=*/true).value;
}

struct CopositivityVerdict {
  bool copositive = false;
  RatVec witness;  // simplex point with witness^T M witness < 0 when not copositive
  Rat value;       // the violating quadratic value
};

// Copositivity decided on the simplex cross-section of the orthant; valid by
// homogeneity of the quadratic form.
inline CopositivityVerdict is_copositive(const SymMat& m, int cap = kDefaultQpDimCap) {
  QpInstance qp = make_qp(m, RatVec(m.dim(), Rat(0)), standard_simplex(m.dim()), "copositivity");
  QpMinResult r = exact_qp_min(qp, cap, /*assume_bounded=*/true);
  CopositivityVerdict v;
  v.value = r.value;
  if (r.value >= 0) {
    v.copositive = true;
  } else {
    v.copositive = false;
    v.witness = r.argmin;
  }
  return v;
}

struct QuarticPdVerdict {
  bool positive_definite = false;
  // When not PD: y >= 0, y != 0 on the simplex with q(y) <= 0, standing for
  // any sign pattern of sqrt(y) via p(sqrt(y)) = q(y).
  RatVec witness_y;
  Rat value;
};

// The quartic p positive definite iff min of y^T M y over the simplex is > 0
// (substitute y = x^2 and rescale).
inline QuarticPdVerdict is_pd_quartic(const QuarticInstance& inst, int cap = kDefaultQpDimCap) {
  QpInstance qp = make_qp(inst.M, RatVec(inst.M.dim(), Rat(0)),
                          standard_simplex(inst.M.dim()), "quartic-pd");
  QpMinResult r = exact_qp_min(qp, cap, /*assume_bounded=*/true);
  QuarticPdVerdict v;
  v.value = r.value;
  if (r.value > 0) {
    v.positive_definite = true;
  } else {
    v.positive_definite = false;
    v.witness_y = r.argmin;
  }
  return v;
}

}  // namespace qpcert
