#pragma once

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>

#include "qpcert/rational.hpp"
#include "qpcert/symmat.hpp"

namespace qpcert {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sorted set of 0-based vertex indices. Rendered 1-based in files and reports.
using VertexSet = std::vector<int>;

// Undirected simple graph: symmetric 0/1 adjacency, zero diagonal.
class Graph {
 public:
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, false) {
    if (n < 1) throw std::invalid_argument("Graph: need at least one vertex");
  }

  int order() const { return n_; }

  bool has_edge(int u, int v) const { return adj_[idx(u, v)]; }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
    adj_[idx(u, v)] = adj_[idx(v, u)] = true;
  }

  SymMat adjacency() const {
    SymMat a(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (has_edge(i, j)) a.set(i, j, 1);
    return a;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (has_edge(i, j)) e.emplace_back(i, j);
    return e;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  std::size_t idx(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("Graph: vertex index");
    return static_cast<std::size_t>(u) * n_ + v;
  }

  int n_;
  std::vector<bool> adj_;
};

// DIMACS .col: "c" comments, one "p edge <n> <m>" header, "e <u> <v>" lines
// (1-based). Duplicate edge lines are tolerated.
inline Graph parse_dimacs(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  auto fail = [&](const std::string& what) {
    throw ParseError("dimacs line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string fmt;
      int m = -1;
      if (!(ls >> fmt >> n >> m) || (fmt != "edge" && fmt != "col") || n < 1 || m < 0)
        fail("malformed problem header");
      if (!edges.empty()) fail("edge line before problem header");
    } else if (tag == "e") {
      if (n < 0) fail("edge line before problem header");
      int u = 0, v = 0;
      if (!(ls >> u >> v)) fail("malformed edge line");
      if (u < 1 || v < 1 || u > n || v > n) fail("vertex index out of range");
      if (u == v) fail("self-loop");
      edges.emplace_back(u - 1, v - 1);
    } else {
      fail("unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw ParseError("dimacs: missing problem header");
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

inline std::string to_dimacs(const Graph& g) {
  auto e = g.edges();
  std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(e.size()) + "\n";
  for (auto [u, v] : e)
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

inline Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.has_edge(i, j)) c.add_edge(i, j);
  return c;
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  for (int v : s)
    if (v < 0 || v >= g.order()) throw std::invalid_argument("induced_subgraph: vertex out of range");
  Graph sub(static_cast<int>(s.size()));
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (g.has_edge(s[a], s[b])) sub.add_edge(static_cast<int>(a), static_cast<int>(b));
  return sub;
}

struct StableSetResult {
  int size = 0;
  VertexSet witness;
};

inline constexpr int kDefaultOracleLimit = 20;

namespace detail {

inline void alpha_search(const Graph& g, int v, VertexSet& current,
                         std::vector<bool>& blocked, StableSetResult& best) {
  const int n = g.order();
  if (static_cast<int>(current.size()) > best.size) {
    best.size = static_cast<int>(current.size());
    best.witness = current;
  }
  if (v == n) return;
  if (static_cast<int>(current.size()) + (n - v) <= best.size) return;  // bound
  if (!blocked[v]) {
    std::vector<int> newly;
    for (int u = v + 1; u < n; ++u)
      if (!blocked[u] && g.has_edge(v, u)) {
        blocked[u] = true;
        newly.push_back(u);
      }
    current.push_back(v);
    alpha_search(g, v + 1, current, blocked, best);
    current.pop_back();
    for (int u : newly) blocked[u] = false;
  }
  alpha_search(g, v + 1, current, blocked, best);
}

}  // namespace detail

// Exhaustive branch and bound. Exponential; refuses n over the limit.
inline StableSetResult alpha(const Graph& g, int limit = kDefaultOracleLimit) {
  if (g.order() > limit)
    throw ResourceError("alpha: graph order " + std::to_string(g.order()) +
                        " exceeds oracle limit " + std::to_string(limit));
  StableSetResult best;
  VertexSet current;
  std::vector<bool> blocked(g.order(), false);
  detail::alpha_search(g, 0, current, blocked, best);
  return best;
}

// omega(G) = alpha of the complement.
inline StableSetResult omega(const Graph& g, int limit = kDefaultOracleLimit) {
  return alpha(complement(g), limit);
}

inline bool is_stable_set(const Graph& g, const VertexSet& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (g.has_edge(s[a], s[b])) return false;
  return true;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (!g.has_edge(s[a], s[b])) return false;
  return true;
}

// Labeled graph on n vertices from an edge bitmask over pairs (i,j), i<j,
// in lexicographic order.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1) g.add_edge(i, j);
  return g;
}

inline std::uint64_t labeled_graph_count(int n) {
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

// All 2^(n(n-1)/2) labeled graphs on n vertices, each exactly once.
inline std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_graphs: n must be >= 1");
  if (n > 6) throw ResourceError("enumerate_graphs: refusing n > 6");
  std::vector<Graph> out;
  out.reserve(labeled_graph_count(n));
  for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask)
    out.push_back(graph_from_mask(n, mask));
  return out;
}

}  // namespace qpcert
