#include <catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "qpcert/lp.hpp"

using namespace qpcert;

namespace {

// Independent LP oracle for bounded polytopes: enumerate every vertex as the
// intersection of dim tight rows, keep feasible ones, take the best value.
std::optional<Rat> vertex_oracle(const RatVec& obj, const Polytope& p) {
  std::vector<LinCon> rows = p.ineqs;
  rows.insert(rows.end(), p.eqs.begin(), p.eqs.end());
  const std::size_t m = rows.size();
  std::optional<Rat> best;
  auto visit = [&](const std::vector<std::size_t>& idx) {
    Mat sys;
    RatVec rhs;
    for (auto i : idx) {
      sys.push_back(rows[i].a);
      rhs.push_back(rows[i].b);
    }
    auto s = solve_linear(sys, rhs);
    if (s.kind != LinearSolution::Unique) return;
    if (!p.contains(s.particular)) return;
    Rat v = dot(obj, s.particular);
    if (!best || v < *best) best = v;
  };
  // all dim-subsets of rows
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (idx.size() == static_cast<std::size_t>(p.dim)) {
      visit(idx);
      return;
    }
    for (std::size_t i = from; i < m; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
  return best;
}

Polytope random_box_polytope(std::mt19937_64& rng, int dim) {
  Polytope p;
  p.dim = dim;
  add_box(p, Rat(2));  // keep it bounded
  const int extra = static_cast<int>(rng() % 4);
  for (int e = 0; e < extra; ++e) {
    RatVec a(dim);
    for (int i = 0; i < dim; ++i) a[i] = Rat(static_cast<long>(rng() % 7) - 3);
    p.add_ineq(std::move(a), Rat(static_cast<long>(rng() % 5)));
  }
  return p;
}

}  // namespace

TEST_CASE("lp_min on a pinned triangle") {
  Polytope p = standard_simplex(3);
  LpResult r = lp_min(rat_vec({3, 1, 2}), p);
  REQUIRE(r.status == LpResult::Optimal);
  CHECK(r.value == 1);
  CHECK(r.argmin == rat_vec({0, 1, 0}));
}

TEST_CASE("lp_min detects infeasibility and unboundedness") {
  Polytope p;
  p.dim = 1;
  p.add_ineq(rat_vec({1}), 0);
  p.add_ineq(rat_vec({-1}), -1);  // x >= 1 and x <= 0
  CHECK(lp_min(rat_vec({1}), p).status == LpResult::Infeasible);
  CHECK_FALSE(lp_feasible(p));

  Polytope q = orthant(2);
  CHECK(lp_min(rat_vec({-1, 0}), q).status == LpResult::Unbounded);
  CHECK(lp_min(rat_vec({1, 1}), q).status == LpResult::Optimal);
  CHECK(lp_feasible(q));
}

TEST_CASE("lp_min handles equality constraints and negative rhs") {
  Polytope p;
  p.dim = 2;
  p.add_eq(rat_vec({1, 1}), Rat(-1));  // x + y = -1
  p.add_ineq(rat_vec({0, 1}), 0);      // y <= 0
  LpResult r = lp_min(rat_vec({1, 0}), p);
  REQUIRE(r.status == LpResult::Optimal);
  CHECK(r.value == -1);  // x = -1, y = 0
}

TEST_CASE("lp_min returns a vertex of a pointed polytope") {
  Polytope p = orthant_capped(3, Rat(5, 2));
  LpResult r = lp_min(rat_vec({0, 0, 0}), p);
  REQUIRE(r.status == LpResult::Optimal);
  // with a zero objective the crawl still ends at a vertex
  int tight = 0;
  for (const auto& c : p.ineqs)
    if (dot(c.a, r.argmin) == c.b) ++tight;
  CHECK(tight >= 3);
}

TEST_CASE("lp_min agrees with the vertex-enumeration oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 4);
    Polytope p = random_box_polytope(rng, dim);
    RatVec obj(dim);
    for (int i = 0; i < dim; ++i) obj[i] = Rat(static_cast<long>(rng() % 9) - 4);
    LpResult r = lp_min(obj, p);
    auto oracle = vertex_oracle(obj, p);
    if (!oracle) {
      CHECK(r.status == LpResult::Infeasible);
      continue;
    }
    REQUIRE(r.status == LpResult::Optimal);
    CHECK(r.value == *oracle);
    CHECK(p.contains(r.argmin));
    CHECK(dot(obj, r.argmin) == r.value);
  }
}

TEST_CASE("lex_min_point") {
  Polytope p = standard_simplex(3);
  auto x = lex_min_point(p);
  REQUIRE(x);
  CHECK(*x == rat_vec({0, 0, 1}));

  Polytope free_line;
  free_line.dim = 1;
  CHECK_FALSE(lex_min_point(free_line));  // unbounded below
}

TEST_CASE("dedup_ineqs keeps the tightest row per direction") {
  Polytope p;
  p.dim = 2;
  p.add_ineq(rat_vec({1, 0}), 3);
  p.add_ineq(rat_vec({2, 0}), 4);  // x <= 2, tighter
  p.add_ineq(rat_vec({0, 0}), 1);  // vacuous
  Polytope d = dedup_ineqs(p);
  REQUIRE(d.ineqs.size() == 1);
  CHECK(d.ineqs[0].b == 2);

  Polytope bad;
  bad.dim = 1;
  bad.add_ineq(rat_vec({0}), Rat(-1));  // 0 <= -1, infeasible marker
  CHECK(dedup_ineqs(bad).ineqs.size() == 1);
}
