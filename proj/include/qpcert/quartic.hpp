#pragma once

#include <optional>
#include <sstream>

#include "qpcert/graph.hpp"
#include "qpcert/rational.hpp"
#include "qpcert/symmat.hpp"

namespace qpcert {

// Graph-derived matrix k*A + k*I - J, carrying the quadratic form
// q(x) = x^T M x and the quartic form p(x) = (x^2)^T M x^2.
struct QuarticInstance {
  SymMat M;
  Rat k;
  Graph source_graph;
  std::optional<int> r;  // present when k = r - 1/2 came from a reduction
  bool integer_k = false;
};

inline QuarticInstance build(const Graph& g, const Rat& k) {
  if (k <= 0) throw std::invalid_argument("build: k must be positive");
  const int n = g.order();
  SymMat m(n);
  for (int i = 0; i < n; ++i) {
    m.set(i, i, k - 1);
    for (int j = i + 1; j < n; ++j) m.set(i, j, g.has_edge(i, j) ? k - 1 : Rat(-1));
  }
  QuarticInstance inst{std::move(m), k, g, std::nullopt, is_integer(k)};
  return inst;
}

inline QuarticInstance build_reduction(const Graph& g, int r) {
  if (r < 1 || r > g.order())
    throw std::invalid_argument("build_reduction: r out of range [1, n]");
  QuarticInstance inst = build(g, Rat(2 * r - 1, 2));
  inst.r = r;
  return inst;
}

inline void check_dim(const QuarticInstance& inst, const RatVec& x) {
  if (static_cast<int>(x.size()) != inst.M.dim())
    throw std::invalid_argument("quartic: point dimension mismatch");
}

inline RatVec entrywise_square(const RatVec& x) {
  RatVec y(x);
  for (Rat& v : y) v *= v;
  return y;
}

inline Rat eval_q(const QuarticInstance& inst, const RatVec& x) {
  check_dim(inst, x);
  return inst.M.quad(x);
}

inline Rat eval_p(const QuarticInstance& inst, const RatVec& x) {
  check_dim(inst, x);
  return inst.M.quad(entrywise_square(x));
}

// grad p = 4 x ⊙ M x^2
inline RatVec grad_p(const QuarticInstance& inst, const RatVec& x) {
  check_dim(inst, x);
  RatVec g = inst.M.mul(entrywise_square(x));
  for (std::size_t i = 0; i < g.size(); ++i) g[i] *= 4 * x[i];
  return g;
}

// hess p = 8 M ⊙ x x^T + 4 Diag(M x^2)
inline SymMat hess_p(const QuarticInstance& inst, const RatVec& x) {
  check_dim(inst, x);
  const int n = inst.M.dim();
  RatVec mx2 = inst.M.mul(entrywise_square(x));
  SymMat h(n);
  for (int i = 0; i < n; ++i) {
    h.set(i, i, 8 * inst.M(i, i) * x[i] * x[i] + 4 * mx2[i]);
    for (int j = i + 1; j < n; ++j) h.set(i, j, 8 * inst.M(i, j) * x[i] * x[j]);
  }
  return h;
}

// Text format: header (n, k, r, edge list), then the matrix rows as exact
// rationals. Round-trips bit-exactly.
inline std::string serialize(const QuarticInstance& inst) {
  std::ostringstream out;
  const int n = inst.M.dim();
  auto edges = inst.source_graph.edges();
  out << "quartic 1\n";
  out << "n " << n << "\n";
  out << "k " << rat_str(inst.k) << "\n";
  out << "r " << (inst.r ? std::to_string(*inst.r) : "-") << "\n";
  out << "edges " << edges.size() << "\n";
  for (auto [u, v] : edges) out << "e " << u + 1 << " " << v + 1 << "\n";
  out << "M\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out << (j ? " " : "") << rat_str(inst.M(i, j));
    out << "\n";
  }
  return out.str();
}

inline QuarticInstance parse_quartic(std::istream& in) {
  auto expect = [&](const std::string& tag) {
    std::string got;
    if (!(in >> got) || got != tag)
      throw ParseError("quartic instance: expected '" + tag + "', got '" + got + "'");
  };
  expect("quartic");
  int version = 0;
  in >> version;
  if (version != 1) throw ParseError("quartic instance: unsupported version");
  expect("n");
  int n = 0;
  if (!(in >> n) || n < 1) throw ParseError("quartic instance: bad n");
  expect("k");
  std::string ks;
  in >> ks;
  Rat k = parse_rat(ks);
  expect("r");
  std::string rs;
  in >> rs;
  std::optional<int> r;
  if (rs != "-") r = std::stoi(rs);
  expect("edges");
  std::size_t m = 0;
  in >> m;
  Graph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    expect("e");
    int u = 0, v = 0;
    if (!(in >> u >> v) || u < 1 || v < 1 || u > n || v > n || u == v)
      throw ParseError("quartic instance: bad edge");
    g.add_edge(u - 1, v - 1);
  }
  expect("M");
  QuarticInstance inst = build(g, k);
  inst.r = r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string cell;
      if (!(in >> cell)) throw ParseError("quartic instance: truncated matrix");
      if (parse_rat(cell) != inst.M(i, j))
        throw ParseError("quartic instance: matrix row disagrees with k*A + k*I - J");
    }
  return inst;
}

inline QuarticInstance parse_quartic(const std::string& text) {
  std::istringstream in(text);
  return parse_quartic(in);
}

}  // namespace qpcert
