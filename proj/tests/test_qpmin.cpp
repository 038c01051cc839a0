#include <catch_amalgamated.hpp>

#include <random>

#include "qpcert/qpmin.hpp"

using namespace qpcert;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

SymMat murty_q() {
  SymMat q(2);
  q.set(0, 1, 1);
  q.set(1, 1, -2);
  return q;
}

}  // namespace

TEST_CASE("exact_qp_min on pinned convex programs") {
  // min (x-1)^2 = x^2 - 2x + 1 over [0, 3], interior minimum
  SymMat q(1);
  q.set(0, 0, 1);
  Polytope box;
  box.dim = 1;
  box.add_ineq(rat_vec({1}), 3);
  box.add_ineq(rat_vec({-1}), 0);
  QpMinResult r = exact_qp_min(make_qp(q, rat_vec({-2}), box));
  REQUIRE(r.status == QpMinResult::Optimal);
  CHECK(r.value == -1);
  CHECK(r.argmin == rat_vec({1}));

  // same objective over [2, 3]: boundary minimum
  Polytope shifted;
  shifted.dim = 1;
  shifted.add_ineq(rat_vec({1}), 3);
  shifted.add_ineq(rat_vec({-1}), -2);
  r = exact_qp_min(make_qp(q, rat_vec({-2}), shifted));
  REQUIRE(r.status == QpMinResult::Optimal);
  CHECK(r.value == 0);
  CHECK(r.argmin == rat_vec({2}));
}

TEST_CASE("exact_qp_min detects infeasibility and unboundedness") {
  SymMat q(1);
  Polytope empty;
  empty.dim = 1;
  empty.add_ineq(rat_vec({1}), -1);
  empty.add_ineq(rat_vec({-1}), 0);
  CHECK(exact_qp_min(make_qp(q, rat_vec({0}), empty)).status == QpMinResult::Infeasible);

  // negative curvature along a recession direction
  SymMat neg(1);
  neg.set(0, 0, -1);
  CHECK(exact_qp_min(make_qp(neg, rat_vec({0}), orthant(1))).status == QpMinResult::Unbounded);

  // zero curvature, negative slope
  CHECK(exact_qp_min(make_qp(q, rat_vec({-1}), orthant(1))).status == QpMinResult::Unbounded);

  // zero curvature, nonnegative slope: bounded at the origin
  QpMinResult r = exact_qp_min(make_qp(q, rat_vec({1}), orthant(1)));
  REQUIRE(r.status == QpMinResult::Optimal);
  CHECK(r.value == 0);

  // indefinite direction pair over the orthant
  CHECK(exact_qp_min(make_qp(murty_q(), rat_vec({0, 0}), orthant(2))).status ==
        QpMinResult::Unbounded);
}

TEST_CASE("exact_qp_min refuses oversized problems") {
  SymMat q(13);
  CHECK_THROWS_AS(exact_qp_min(make_qp(q, RatVec(13, Rat(0)), orthant(13))), ResourceError);
  Polytope p;
  p.dim = 2;
  for (int i = 0; i < 23; ++i) p.add_ineq(rat_vec({1, 1}), Rat(i + 1));
  CHECK_THROWS_AS(exact_qp_min(make_qp(SymMat(2), rat_vec({0, 0}), p)), ResourceError);
}

TEST_CASE("concave minimization lands on the best box corner") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    // negative definite diagonal plus random symmetric noise kept concave
    SymMat q(n);
    for (int i = 0; i < n; ++i) q.set(i, i, Rat(-4));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) q.set(i, j, Rat(static_cast<long>(rng() % 3) - 1));
    RatVec c(n);
    for (int i = 0; i < n; ++i) c[i] = Rat(static_cast<long>(rng() % 5) - 2);
    Polytope box;
    box.dim = n;
    add_box(box, 1);
    QpInstance qp = make_qp(q, c, box);
    QpMinResult r = exact_qp_min(qp);
    REQUIRE(r.status == QpMinResult::Optimal);
    // corner oracle
    Rat best;
    bool first = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      RatVec v(n);
      for (int i = 0; i < n; ++i) v[i] = (mask >> i & 1) ? Rat(1) : Rat(-1);
      Rat val = qp.objective(v);
      if (first || val < best) best = val;
      first = false;
    }
    CHECK(r.value == best);
    CHECK(qp.feasible.contains(r.argmin));
    CHECK(qp.objective(r.argmin) == r.value);
  }
}

TEST_CASE("random feasible samples never beat the reported minimum") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    SymMat q(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) q.set(i, j, Rat(static_cast<long>(rng() % 7) - 3));
    RatVec c(n);
    for (int i = 0; i < n; ++i) c[i] = Rat(static_cast<long>(rng() % 5) - 2);
    Polytope box;
    box.dim = n;
    add_box(box, 2);
    QpInstance qp = make_qp(q, c, box);
    QpMinResult r = exact_qp_min(qp);
    REQUIRE(r.status == QpMinResult::Optimal);
    for (int s = 0; s < 50; ++s) {
      RatVec x(n);
      for (int i = 0; i < n; ++i) x[i] = Rat(static_cast<long>(rng() % 33) - 16, 8);
      CHECK(qp.objective(x) >= r.value);
    }
  }
}

TEST_CASE("clique-number formula for the simplex maximum") {
  CHECK(ms_max(complete(3)) == Rat(2, 3));
  CHECK(ms_max(cycle(5)) == Rat(1, 2));
  CHECK(ms_max(Graph(3)) == 0);
  CHECK(ms_max(complete(2)) == Rat(1, 2));
}

TEST_CASE("simplex maximum equals 1 - 1/omega on all small graphs") {
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const int w = omega(g).size;
      CHECK(ms_max(g) == Rat(w - 1, w));
    }
}

TEST_CASE("copositivity matches the stability threshold") {
  Graph c5 = cycle(5);  // alpha = 2
  CHECK(is_copositive(build_reduction(c5, 3).M).copositive);       // k = 5/2 > alpha
  CopositivityVerdict v = is_copositive(build_reduction(c5, 2).M); // k = 3/2 < alpha
  REQUIRE_FALSE(v.copositive);
  CHECK(v.value < 0);
  CHECK(build_reduction(c5, 2).M.quad(v.witness) == v.value);
  Rat sum = 0;
  for (const Rat& x : v.witness) {
    CHECK(x >= 0);
    sum += x;
  }
  CHECK(sum == 1);  // witness lives on the simplex
}

TEST_CASE("Murty matrix: not copositive yet the orthant origin question differs") {
  CopositivityVerdict v = is_copositive(murty_q());
  REQUIRE_FALSE(v.copositive);
  CHECK(v.value < 0);
}

TEST_CASE("quartic positive definiteness against the alpha oracle") {
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : enumerate_graphs(n))
      for (int r = 1; r <= n; ++r) {
        QuarticInstance inst = build_reduction(g, r);
        QuarticPdVerdict pd = is_pd_quartic(inst);
        CHECK(pd.positive_definite == (alpha(g).size <= r - 1));
        if (!pd.positive_definite) {
          CHECK(pd.value <= 0);
          CHECK(inst.M.quad(pd.witness_y) == pd.value);
        }
      }
}
