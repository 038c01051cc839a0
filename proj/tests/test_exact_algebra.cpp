#include <catch_amalgamated.hpp>

#include <random>

#include "qpcert/definiteness.hpp"
#include "qpcert/linalg.hpp"
#include "qpcert/rational.hpp"
#include "qpcert/symmat.hpp"

using namespace qpcert;

TEST_CASE("rational parsing and printing round-trip") {
  CHECK(rat_str(parse_rat("3/4")) == "3/4");
  CHECK(rat_str(parse_rat("-3/4")) == "-3/4");
  CHECK(rat_str(parse_rat("6/8")) == "3/4");
  CHECK(rat_str(parse_rat("42")) == "42");
  CHECK(parse_rat("2/-4") == Rat(-1, 2));
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
}

TEST_CASE("rationalize produces the nearest dyadic") {
  CHECK(rationalize(0.5, 4) == Rat(1, 2));
  CHECK(rationalize(-0.3, 4) == Rat(-5, 16));
  CHECK(rationalize(1.0 / 3.0, 20) == Rat(349525, 1048576));
}

TEST_CASE("vector helpers") {
  RatVec a = rat_vec({1, 2, 3});
  RatVec b = rat_vec({4, -1, 0});
  CHECK(dot(a, b) == 2);
  CHECK(vec_add(a, b) == rat_vec({5, 1, 3}));
  CHECK(scaled(a, Rat(1, 2)) == RatVec{Rat(1, 2), 1, Rat(3, 2)});
  CHECK(lex_less(rat_vec({1, 2}), rat_vec({1, 3})));
  CHECK_FALSE(lex_less(rat_vec({1, 3}), rat_vec({1, 2})));
  CHECK(is_zero_vec(rat_vec({0, 0})));
  CHECK_FALSE(is_zero_vec(a));
}

TEST_CASE("symmetric matrix storage and products") {
  SymMat m(3);
  m.set(0, 1, Rat(2));
  m.set(2, 2, Rat(-1));
  CHECK(m(1, 0) == 2);
  CHECK(m(0, 1) == 2);
  RatVec x = rat_vec({1, 1, 1});
  CHECK(m.mul(x) == rat_vec({2, 2, -1}));
  CHECK(m.quad(x) == 3);  // 2*2 + (-1)

  SymMat j = SymMat::ones(3);
  SymMat i3 = SymMat::identity(3);
  CHECK(sym_add(j, sym_scale(i3, Rat(-1)))(0, 0) == 0);
  CHECK(sym_add(j, sym_scale(i3, Rat(-1)))(0, 1) == 1);

  SymMat sub = j.principal_submatrix({0, 2});
  CHECK(sub.dim() == 2);
  CHECK(sub(0, 1) == 1);
}

TEST_CASE("solve_linear: unique, affine, empty") {
  // unique: x + y = 3, x - y = 1
  Mat m = {rat_vec({1, 1}), rat_vec({1, -1})};
  auto s = solve_linear(m, rat_vec({3, 1}));
  REQUIRE(s.kind == LinearSolution::Unique);
  CHECK(s.particular == rat_vec({2, 1}));

  // affine: x + y = 1 (one free variable)
  s = solve_linear({rat_vec({1, 1})}, rat_vec({1}));
  REQUIRE(s.kind == LinearSolution::Affine);
  REQUIRE(s.kernel.size() == 1);
  CHECK(dot(rat_vec({1, 1}), s.particular) == 1);
  CHECK(dot(rat_vec({1, 1}), s.kernel[0]) == 0);

  // empty: x = 0 and x = 1
  s = solve_linear({rat_vec({1}), rat_vec({1})}, rat_vec({0, 1}));
  CHECK(s.kind == LinearSolution::Empty);
}

TEST_CASE("solve_linear back-substitution on random systems") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int rows = 1 + static_cast<int>(rng() % 6);
    Mat m(rows, RatVec(n));
    RatVec x(n);
    for (int j = 0; j < n; ++j) x[j] = Rat(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = Rat(static_cast<long>(rng() % 9) - 4);
    RatVec rhs(rows);
    for (int i = 0; i < rows; ++i) rhs[i] = dot(m[i], x);
    auto s = solve_linear(m, rhs);
    REQUIRE(s.kind != LinearSolution::Empty);
    for (int i = 0; i < rows; ++i) CHECK(dot(m[i], s.particular) == rhs[i]);
    for (const auto& k : s.kernel)
      for (int i = 0; i < rows; ++i) CHECK(dot(m[i], k) == 0);
  }
}

TEST_CASE("kernel_basis and rank agree") {
  Mat m = {rat_vec({1, 2, 3}), rat_vec({2, 4, 6}), rat_vec({0, 1, 1})};
  CHECK(mat_rank(m) == 2);
  auto kern = kernel_basis(m);
  REQUIRE(kern.size() == 1);
  for (const auto& row : m) CHECK(dot(row, kern[0]) == 0);
}

TEST_CASE("determinant") {
  CHECK(determinant({rat_vec({2, 1}), rat_vec({1, 2})}) == 3);
  CHECK(determinant({rat_vec({1, 2}), rat_vec({2, 4})}) == 0);
  CHECK(determinant({rat_vec({0, 1}), rat_vec({1, 0})}) == -1);
}

namespace {

// independent PSD oracle: all principal minors nonnegative
bool psd_by_minors(const SymMat& m) {
  const int n = m.dim();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    if (determinant(mat_from_sym(m.principal_submatrix(idx))) < 0) return false;
  }
  return true;
}

// PD oracle: leading principal minors positive
bool pd_by_minors(const SymMat& m) {
  std::vector<int> idx;
  for (int i = 0; i < m.dim(); ++i) {
    idx.push_back(i);
    if (determinant(mat_from_sym(m.principal_submatrix(idx))) <= 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("is_psd on pinned examples") {
  SymMat id = SymMat::identity(3);
  CHECK(is_psd(id).holds);
  CHECK(is_pd(id).holds);

  CHECK(is_psd(SymMat::ones(3)).holds);
  CHECK_FALSE(is_pd(SymMat::ones(3)).holds);
  CHECK(is_pd(SymMat::ones(3)).value == 0);

  SymMat q(2);  // [[0,1],[1,-2]]
  q.set(0, 1, 1);
  q.set(1, 1, -2);
  auto v = is_psd(q);
  REQUIRE_FALSE(v.holds);
  CHECK(v.value < 0);
  CHECK(q.quad(v.witness) == v.value);
  CHECK(q.quad(rat_vec({1, 2})) == -4);
}

TEST_CASE("is_psd matches the principal-minor oracle on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    SymMat m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m.set(i, j, Rat(static_cast<long>(rng() % 9) - 4, 1 + rng() % 2));
    auto v = is_psd(m);
    CHECK(v.holds == psd_by_minors(m));
    if (!v.holds) {
      CHECK(m.quad(v.witness) == v.value);
      CHECK(v.value < 0);
    }
    auto pd = is_pd(m);
    CHECK(pd.holds == pd_by_minors(m));
    if (v.holds && !pd.holds) {
      CHECK_FALSE(is_zero_vec(pd.witness));
      CHECK(m.quad(pd.witness) == 0);
    }
  }
}
