#include <catch_amalgamated.hpp>

#include "qpcert/graph.hpp"

using namespace qpcert;

namespace {

Graph path3() {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

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

}  // namespace

TEST_CASE("dimacs parsing") {
  Graph g = parse_dimacs("c a comment\np edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(g == path3());
  CHECK(parse_dimacs("p col 2 0\n").order() == 2);
  CHECK(parse_dimacs("p edge 3 2\ne 1 2\ne 2 1\n").edges().size() == 1);  // duplicate edge

  CHECK_THROWS_AS(parse_dimacs(""), ParseError);
  CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\nq 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p graph 2 1\n"), ParseError);

  // error messages carry the offending line number
  try {
    parse_dimacs("p edge 2 1\ne 1 3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("dimacs round-trip") {
  Graph g = cycle(5);
  CHECK(parse_dimacs(to_dimacs(g)) == g);
}

TEST_CASE("complement and induced subgraph") {
  Graph g = path3();
  Graph c = complement(g);
  CHECK(c.has_edge(0, 2));
  CHECK_FALSE(c.has_edge(0, 1));
  CHECK(complement(c) == g);

  Graph sub = induced_subgraph(cycle(5), {0, 1, 2});
  CHECK(sub == path3());
  CHECK_THROWS_AS(induced_subgraph(g, {}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(g, {7}), std::invalid_argument);
}

TEST_CASE("alpha and omega on pinned graphs") {
  auto check_alpha = [](const Graph& g, int expect) {
    StableSetResult r = alpha(g);
    CHECK(r.size == expect);
    CHECK(static_cast<int>(r.witness.size()) == expect);
    CHECK(is_stable_set(g, r.witness));
  };
  check_alpha(Graph(1), 1);
  check_alpha(complete(4), 1);
  check_alpha(path3(), 2);
  check_alpha(cycle(5), 2);
  check_alpha(complement(complete(4)), 4);

  CHECK(omega(complete(4)).size == 4);
  CHECK(omega(cycle(5)).size == 2);
  CHECK(is_clique(complete(4), {0, 1, 2, 3}));
  CHECK_FALSE(is_clique(cycle(5), {0, 1, 2}));
}

TEST_CASE("alpha equals omega of the complement on all small graphs") {
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : enumerate_graphs(n)) CHECK(alpha(g).size == omega(complement(g)).size);
}

TEST_CASE("alpha refuses oversized input") {
  CHECK_THROWS_AS(alpha(Graph(25)), ResourceError);
  CHECK_NOTHROW(alpha(Graph(25), 30));
}

TEST_CASE("graph enumeration") {
  CHECK(labeled_graph_count(4) == 64);
  auto all3 = enumerate_graphs(3);
  REQUIRE(all3.size() == 8);
  // each mask appears exactly once
  for (std::uint64_t m = 0; m < 8; ++m) CHECK(all3[m] == graph_from_mask(3, m));
  CHECK_THROWS_AS(enumerate_graphs(7), ResourceError);
  CHECK_THROWS_AS(enumerate_graphs(0), std::invalid_argument);
}
