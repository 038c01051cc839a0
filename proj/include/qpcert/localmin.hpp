#pragma once

#include <optional>
#include <random>

#include "qpcert/definiteness.hpp"
#include "qpcert/qpmin.hpp"

namespace qpcert {

// Candidate support of a nonzero second-order point: (M)_S is PSD and carries
// a strictly positive kernel vector y.
struct SosSupport {
  VertexSet support;
  RatVec kernel_witness;  // y > 0 with (M)_S y = 0
};

// All supports S such that (M)_S is PSD and a strictly positive y with
// (M)_S y = 0 exists. Strict positivity is decided exactly: y > 0 somewhere in
// the kernel iff {B t >= 1} is feasible for a kernel basis B (scaling).
inline std::vector<SosSupport> enumerate_sos_supports(const QuarticInstance& inst) {
  const int n = inst.M.dim();
  std::vector<SosSupport> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    SymMat sub = inst.M.principal_submatrix(s);
    if (!is_psd(sub).holds) continue;
    auto kern = kernel_basis(mat_from_sym(sub));
    if (kern.empty()) continue;
    Polytope tp;
    tp.dim = static_cast<int>(kern.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      RatVec row(tp.dim);
      for (int j = 0; j < tp.dim; ++j) row[j] = -kern[j][i];
      tp.add_ineq(std::move(row), Rat(-1));  // sum_j B[j][i] t_j >= 1
    }
    LpResult feas = lp_min(RatVec(tp.dim, Rat(0)), tp);
    if (feas.status != LpResult::Optimal) continue;
    RatVec y(s.size(), Rat(0));
    for (std::size_t i = 0; i < s.size(); ++i)
      for (int j = 0; j < tp.dim; ++j) y[i] += kern[j][i] * feas.argmin[j];
    out.push_back({std::move(s), std::move(y)});
  }
  return out;
}

struct LocalMinCertificate {
  enum Kind { OriginPD, KktConeCopositive, DescentSequence, SupportAnalysis } kind = OriginPD;
  RatVec multipliers;  // KktConeCopositive: nonnegative multipliers on active rows
  RatVec direction;    // DescentSequence: feasible direction with descent
  RatVec witness;      // OriginPD: none; SupportAnalysis: y with q(y) < 0
  Rat value;           // quadratic value behind the verdict
  std::vector<SosSupport> supports;  // SupportAnalysis payload (must be empty)
};

struct ExistenceResult {
  bool answer = false;  // a local minimizer exists
  bool strict = false;  // when it exists, the origin is a strict local minimizer
  LocalMinCertificate cert;
};

// Existence of a local minimizer of the quartic p for noninteger k > 0: equivalent
// to positive definiteness of the quartic, decided by exact simplex
// minimization (no alpha oracle on this path).
inline ExistenceResult has_local_min_quartic(const QuarticInstance& inst,
                                             int cap = kDefaultQpDimCap) {
  if (inst.integer_k || inst.k <= 0)
    throw std::invalid_argument(
        "has_local_min_quartic: requires noninteger positive k; the equivalence "
        "fails for integer k");
  QuarticPdVerdict pd = is_pd_quartic(inst, cap);
  ExistenceResult res;
  if (pd.positive_definite) {
    res.answer = true;
    res.strict = true;
    res.cert.kind = LocalMinCertificate::OriginPD;
    res.cert.value = pd.value;  // min of q over the simplex, > 0
    return res;
  }
  res.answer = false;
  res.strict = false;
  res.cert.kind = LocalMinCertificate::SupportAnalysis;
  res.cert.witness = pd.witness_y;  // q(y) < 0; scaling y toward 0 keeps q negative
  res.cert.value = pd.value;
  res.cert.supports = enumerate_sos_supports(inst);
  return res;
}

// The orthant QP with k = r - 1/2. Existence of a local
// minimizer routed through the exact p/q correspondence; square roots are
// never taken numerically.
inline ExistenceResult has_local_min_qp_orthant(const Graph& g, int r,
                                                int cap = kDefaultQpDimCap) {
  if (r < 1 || r > g.order())
    throw std::invalid_argument("has_local_min_qp_orthant: r out of range [1, n]");
  return has_local_min_quartic(build_reduction(g, r), cap);
}

struct PointCertification {
  bool local_min = false;
  std::string reason;
  LocalMinCertificate cert;
};

// Exact local-minimality test at a feasible point of a QP: stationarity with
// nonnegative multipliers on active rows, plus copositivity of Q on the
// critical cone (decided on the box cross-section of the cone).
inline PointCertification certify_qp_point(const QpInstance& qp, const RatVec& xbar,
                                           int cap = kDefaultQpDimCap) {
  const int n = qp.feasible.dim;
  if (n > cap) throw ResourceError("certify_qp_point: dimension exceeds cap");
  if (!qp.feasible.contains(xbar))
    throw std::invalid_argument("certify_qp_point: point is not feasible");

  const RatVec g = qp.gradient(xbar);
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < qp.feasible.ineqs.size(); ++i)
    if (dot(qp.feasible.ineqs[i].a, xbar) == qp.feasible.ineqs[i].b) active.push_back(i);
  const std::size_t na = active.size(), ne = qp.feasible.eqs.size();

  // multipliers: lambda >= 0 on active rows, mu free on equalities, with
  // sum lambda_s a_s + sum mu_e a_e = -g
  Polytope mp;
  mp.dim = static_cast<int>(na + ne);
  for (std::size_t s = 0; s < na; ++s) mp.add_ineq(unit_vec(mp.dim, static_cast<int>(s), Rat(-1)), 0);
  for (int i = 0; i < n; ++i) {
    RatVec row(mp.dim, Rat(0));
    for (std::size_t s = 0; s < na; ++s) row[s] = qp.feasible.ineqs[active[s]].a[i];
    for (std::size_t e = 0; e < ne; ++e) row[na + e] = qp.feasible.eqs[e].a[i];
    mp.add_eq(std::move(row), -g[i]);
  }
  LpResult mult = lp_min(RatVec(mp.dim, Rat(0)), mp);

  PointCertification out;
  if (mult.status != LpResult::Optimal) {
    // not a KKT point; produce a feasible descent direction
    Polytope dp;
    dp.dim = n;
    for (std::size_t s = 0; s < na; ++s) dp.add_ineq(qp.feasible.ineqs[active[s]].a, 0);
    for (const auto& c : qp.feasible.eqs) dp.add_eq(c.a, 0);
    add_box(dp, 1);
    LpResult desc = lp_min(g, dedup_ineqs(dp));
    out.local_min = false;
    out.reason = "stationarity fails: no nonnegative multipliers exist";
    out.cert.kind = LocalMinCertificate::DescentSequence;
    out.cert.direction = desc.argmin;
    out.cert.value = desc.value;  // g^T d < 0
    return out;
  }

  // critical cone cross-section
  Polytope cone;
  cone.dim = n;
  for (std::size_t s = 0; s < na; ++s) cone.add_ineq(qp.feasible.ineqs[active[s]].a, 0);
  for (const auto& c : qp.feasible.eqs) cone.add_eq(c.a, 0);
  if (!is_zero_vec(g)) cone.add_eq(g, 0);
  add_box(cone, 1);
  QpInstance cone_qp = make_qp(qp.Q, RatVec(n, Rat(0)), dedup_ineqs(cone), "critical-cone");
  QpMinResult cm = exact_qp_min(cone_qp, cap, /*assume_bounded=*/true);
  if (cm.value < 0) {
    out.local_min = false;
    out.reason = "negative curvature on the critical cone";
    out.cert.kind = LocalMinCertificate::DescentSequence;
    out.cert.direction = cm.argmin;
    out.cert.value = cm.value;
    return out;
  }
  out.local_min = true;
  out.reason = "KKT point and Q copositive on the critical cone";
  out.cert.kind = LocalMinCertificate::KktConeCopositive;
  out.cert.multipliers = mult.argmin;
  out.cert.value = cm.value;
  return out;
}

// Smallest p / 2^denom_log2 that is >= 3 c^n sqrt(n); exact via the squared
// comparison p^2 >= 9 c^(2n) n 4^denom_log2.
inline Rat dyadic_bound(const Rat& c, int n, int denom_log2 = 16) {
  if (c < 0 || n < 1) throw std::invalid_argument("dyadic_bound: need c >= 0 and n >= 1");
  Rat s = 9 * n;
  for (int i = 0; i < 2 * n; ++i) s *= c;
  Int num = rat_num(s) << (2 * denom_log2);
  Int den = rat_den(s);
  Int target = num / den + (num % den != 0 ? 1 : 0);  // ceil
  Int p = sqrt(target);
  while (p * p < target) ++p;
  return Rat(p, Int(1) << denom_log2);
}

struct RadiusSchedule {
  int levels = 20;        // radii 2^-1 .. 2^-levels
  int random_per_level = 8;
  int halvings = 40;      // exact backtracking depth along one direction
};

struct FalsifierHints {
  std::optional<QuarticInstance> quartic;  // qp minimizes the q form of this instance
  std::optional<RatVec> sqrt_point;        // exact u with u^2 = x (quartic probes)
  std::vector<RatVec> directions;          // extra exact probe directions
};

struct FalsifierResult {
  bool improved = false;  // GiveUp when false; never a certificate of minimality
  RatVec point;           // exact feasible point with objective < base_value
  Rat base_value;
  Rat value;
};

namespace detail {

inline bool line_probe(const QpInstance& qp, const RatVec& x, const Rat& f0,
                       const RatVec& g, const RatVec& d, const Rat& radius,
                       int halvings, FalsifierResult& out) {
  if (is_zero_vec(d)) return false;
  const Rat slope = dot(g, d);
  const Rat curv = qp.Q.quad(d);
  if (slope > 0 || (slope == 0 && curv >= 0)) return false;
  Rat norm1 = 0;
  for (const Rat& v : d) norm1 += abs(v);
  Rat t = radius / norm1;
  for (int h = 0; h < halvings; ++h, t /= 2) {
    if (t * (slope + t * curv) >= 0) continue;
    RatVec y = vec_add(x, scaled(d, t));
    if (!qp.feasible.contains(y)) continue;
    Rat fy = qp.objective(y);
    if (fy < f0) {
      out.improved = true;
      out.point = std::move(y);
      out.value = std::move(fy);
      return true;
    }
  }
  return false;
}

// Probe in sqrt-space: descend on the quartic at u and map back via y = u'^2,
// which keeps the orthant rows feasible automatically.
inline bool quartic_probe(const QpInstance& qp, const QuarticInstance& inst,
                          const RatVec& u, const Rat& f0, const RatVec& du,
                          const Rat& radius, int halvings, FalsifierResult& out) {
  if (is_zero_vec(du)) return false;
  const Rat pu = eval_p(inst, u);
  Rat norm1 = 0;
  for (const Rat& v : du) norm1 += abs(v);
  Rat t = radius / norm1;
  for (int h = 0; h < halvings; ++h, t /= 2) {
    RatVec uprime = vec_add(u, scaled(du, t));
    if (eval_p(inst, uprime) >= pu) continue;
    RatVec y = entrywise_square(uprime);
    if (!qp.feasible.contains(y)) continue;
    Rat fy = qp.objective(y);
    if (fy < f0) {
      out.improved = true;
      out.point = std::move(y);
      out.value = std::move(fy);
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Sound falsifier of local minimality: every reported improvement is feasible
// and strictly better in exact arithmetic. GiveUp is inconclusive.
inline FalsifierResult descent_falsifier_exact(const QpInstance& qp, const RatVec& x,
                                               const RadiusSchedule& sched = {},
                                               const FalsifierHints& hints = {},
                                               std::uint64_t seed = 0) {
  const int n = qp.feasible.dim;
  if (!qp.feasible.contains(x))
    throw std::invalid_argument("descent_falsifier: infeasible start point");
  FalsifierResult out;
  out.base_value = qp.objective(x);
  const RatVec g = qp.gradient(x);

  std::vector<RatVec> structured;
  for (const auto& d : hints.directions) structured.push_back(d);
  if (!is_zero_vec(g)) structured.push_back(scaled(g, Rat(-1)));
  if (!is_zero_vec(x)) {
    structured.push_back(scaled(x, Rat(-1)));  // scaling toward the origin
    structured.push_back(x);                   // scaling away from it
  }
  for (int i = 0; i < n; ++i) {
    structured.push_back(unit_vec(n, i));
    structured.push_back(unit_vec(n, i, Rat(-1)));
  }

  const bool quartic_ok = hints.quartic && hints.sqrt_point &&
                          entrywise_square(*hints.sqrt_point) == x;
  RatVec du_grad, du_curv;
  if (quartic_ok) {
    du_grad = scaled(grad_p(*hints.quartic, *hints.sqrt_point), Rat(-1));
    if (is_zero_vec(du_grad)) {
      auto h = is_psd(hess_p(*hints.quartic, *hints.sqrt_point));
      if (!h.holds) du_curv = h.witness;
    }
  }

  std::mt19937_64 rng(seed);
  Rat radius(1, 2);
  for (int level = 1; level <= sched.levels; ++level, radius /= 2) {
    for (const auto& d : structured)
      if (detail::line_probe(qp, x, out.base_value, g, d, radius, sched.halvings, out)) return out;
    if (quartic_ok) {
      if (detail::quartic_probe(qp, *hints.quartic, *hints.sqrt_point, out.base_value,
                                du_grad, radius, sched.halvings, out))
        return out;
      if (detail::quartic_probe(qp, *hints.quartic, *hints.sqrt_point, out.base_value,
                                du_curv, radius, sched.halvings, out))
        return out;
      if (detail::quartic_probe(qp, *hints.quartic, *hints.sqrt_point, out.base_value,
                                scaled(du_curv, Rat(-1)), radius, sched.halvings, out))
        return out;
    }
    for (int r = 0; r < sched.random_per_level; ++r) {
      RatVec d(n);
      for (int i = 0; i < n; ++i)
        d[i] = Rat(static_cast<long>(rng() % 2001) - 1000, 1000);
      if (detail::line_probe(qp, x, out.base_value, g, d, radius, sched.halvings, out)) return out;
    }
  }
  return out;  // GiveUp
}

// Float entry point: rationalize dyadically, repair plain sign constraints,
// then run the exact falsifier.
inline FalsifierResult descent_falsifier(const QpInstance& qp, const std::vector<double>& x,
                                         const RadiusSchedule& sched = {},
                                         const FalsifierHints& hints = {},
                                         std::uint64_t seed = 0, int denom_log2 = 20) {
  RatVec rx(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) rx[i] = rationalize(x[i], denom_log2);
  if (!qp.feasible.contains(rx)) {
    for (const auto& c : qp.feasible.ineqs) {
      // clamp violated -x_i <= 0 rows
      int nz = -1;
      bool simple = c.b == 0;
      for (int i = 0; i < qp.feasible.dim && simple; ++i) {
        if (c.a[i] == 0) continue;
        simple = c.a[i] == -1 && nz < 0;
        nz = i;
      }
      if (simple && nz >= 0 && rx[nz] < 0) rx[nz] = 0;
    }
  }
  return descent_falsifier_exact(qp, rx, sched, hints, seed);
}

enum class BoundedCase { OriginUnique, AllOnHyperplane };

struct BoundedClassification {
  BoundedCase kind = BoundedCase::OriginUnique;
  Rat k;
  Rat t;
  StableSetResult alpha_witness;
  // empirical confirmation (run when n <= cap)
  bool empirical_run = false;
  bool origin_certified = false;   // OriginUnique: certify_qp_point accepts the origin
  int samples_tested = 0;          // AllOnHyperplane: falsifier probes below the cap
  int samples_improved = 0;
};

namespace detail {

// Deterministic feasible sample with sum x < t, built as an exact square so
// the falsifier can probe in sqrt-space without numeric roots.
inline RatVec square_sample(std::mt19937_64& rng, int n, const Rat& t, RatVec* sqrt_out) {
  RatVec u(n);
  bool nonzero = false;
  for (int i = 0; i < n; ++i) {
    u[i] = Rat(static_cast<long>(rng() % 7), 4);
    if (u[i] != 0) nonzero = true;
  }
  if (!nonzero) u[0] = 1;
  Rat sum_sq = 0;
  for (const Rat& v : u) sum_sq += v * v;
  // largest rho = p/256 with rho^2 * sum_sq <= t/2
  Int p = 0;
  const Rat limit = t / (2 * sum_sq);
  Int lo = 1, hi = 4096;
  for (Int cand = hi; cand >= lo; --cand) {
    if (Rat(cand * cand, 65536) <= limit) {
      p = cand;
      break;
    }
  }
  if (p == 0) p = 1;  // degenerate t; sample may sit slightly above t/2
  Rat rho(p, 256);
  for (Rat& v : u) v *= rho;
  if (sqrt_out) *sqrt_out = u;
  return entrywise_square(u);
}

}  // namespace detail

// Structural classification of the bounded QP with free bound t > 0: the origin is
// the unique local minimizer iff alpha(G) <= r - 1; otherwise every local
// minimizer sits on the hyperplane sum x = t.
inline BoundedClassification classify_bounded_instance(const Graph& g, int r, const Rat& t,
                                                       int cap = 6, int samples = 100,
                                                       std::uint64_t seed = 0,
                                                       bool empirical = true) {
  if (t <= 0) throw std::invalid_argument("classify_bounded_instance: bound t must be positive");
  if (r < 1 || r > g.order())
    throw std::invalid_argument("classify_bounded_instance: r out of range [1, n]");
  QuarticInstance inst = build_reduction(g, r);
  BoundedClassification out;
  out.k = inst.k;
  out.t = t;
  out.alpha_witness = alpha(g);
  out.kind = out.alpha_witness.size <= r - 1 ? BoundedCase::OriginUnique
                                             : BoundedCase::AllOnHyperplane;
  if (!empirical || g.order() > cap) return out;

  out.empirical_run = true;
  QpInstance qp = bounded_qp(inst, t);
  if (out.kind == BoundedCase::OriginUnique) {
    out.origin_certified =
        certify_qp_point(qp, RatVec(g.order(), Rat(0)), std::max(cap, g.order())).local_min;
    return out;
  }
  CopositivityVerdict cop = is_copositive(inst.M);
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    FalsifierHints hints;
    hints.quartic = inst;
    RatVec sqrt_pt;
    RatVec x = detail::square_sample(rng, g.order(), t, &sqrt_pt);
    if (dot(RatVec(g.order(), Rat(1)), x) >= t) continue;
    hints.sqrt_point = std::move(sqrt_pt);
    if (!cop.copositive) hints.directions.push_back(cop.witness);
    ++out.samples_tested;
    if (descent_falsifier_exact(qp, x, {}, hints, rng()).improved) ++out.samples_improved;
  }
  return out;
}

}  // namespace qpcert
