#pragma once

#include <sstream>

#include "qpcert/polytope.hpp"
#include "qpcert/quartic.hpp"
#include "qpcert/rational.hpp"
#include "qpcert/symmat.hpp"

namespace qpcert {

// General quadratic program: minimize x^T Q x + c^T x over a polyhedron.
struct QpInstance {
  SymMat Q;
  RatVec c;
  Polytope feasible;
  std::string provenance;

  Rat objective(const RatVec& x) const { return Q.quad(x) + dot(c, x); }
  RatVec gradient(const RatVec& x) const {
    RatVec g = Q.mul(x);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = 2 * g[i] + c[i];
    return g;
  }
};

inline QpInstance make_qp(SymMat q, RatVec c, Polytope feasible, std::string provenance = "") {
  if (q.dim() != feasible.dim || static_cast<int>(c.size()) != feasible.dim)
    throw std::invalid_argument("make_qp: dimension mismatch");
  return {std::move(q), std::move(c), std::move(feasible), std::move(provenance)};
}

// Minimize q over the nonnegative orthant.
inline QpInstance orthant_qp(const QuarticInstance& inst) {
  const int n = inst.M.dim();
  return make_qp(inst.M, RatVec(n, Rat(0)), orthant(n), "qp-orthant");
}

// Same objective with a free positive bound t on sum x.
inline QpInstance bounded_qp(const QuarticInstance& inst, const Rat& t) {
  if (t <= 0) throw std::invalid_argument("bounded_qp: bound t must be positive");
  const int n = inst.M.dim();
  return make_qp(inst.M, RatVec(n, Rat(0)), orthant_capped(n, t), "bounded-qp");
}

// Text format: "n m", Q rows, c, then one constraint row per line with sense.
// Bit-exact round-trip.
inline std::string serialize(const QpInstance& qp) {
  std::ostringstream out;
  const int n = qp.Q.dim();
  out << "qp 1\n";
  out << "n " << n << " m " << qp.feasible.ineqs.size() + qp.feasible.eqs.size() << "\n";
  out << "provenance " << (qp.provenance.empty() ? "-" : qp.provenance) << "\n";
  out << "Q\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out << (j ? " " : "") << rat_str(qp.Q(i, j));
    out << "\n";
  }
  out << "c\n";
  for (int j = 0; j < n; ++j) out << (j ? " " : "") << rat_str(qp.c[j]);
  out << "\n";
  out << "constraints\n";
  auto row = [&](const LinCon& con, const char* sense) {
    out << sense;
    for (const Rat& a : con.a) out << " " << rat_str(a);
    out << " " << rat_str(con.b) << "\n";
  };
  for (const auto& con : qp.feasible.ineqs) row(con, "le");
  for (const auto& con : qp.feasible.eqs) row(con, "eq");
  return out.str();
}

inline QpInstance parse_qp(std::istream& in) {
  auto expect = [&](const std::string& tag) {
    std::string got;
    if (!(in >> got) || got != tag)
      throw ParseError("qp instance: expected '" + tag + "', got '" + got + "'");
  };
  auto read_rat = [&]() {
    std::string cell;
    if (!(in >> cell)) throw ParseError("qp instance: truncated input");
    return parse_rat(cell);
  };
  expect("qp");
  int version = 0;
  in >> version;
  if (version != 1) throw ParseError("qp instance: unsupported version");
  expect("n");
  int n = 0;
  in >> n;
  expect("m");
  std::size_t m = 0;
  in >> m;
  if (n < 1) throw ParseError("qp instance: bad n");
  expect("provenance");
  std::string prov;
  in >> prov;
  if (prov == "-") prov.clear();
  expect("Q");
  SymMat q(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = read_rat();
      if (j >= i)
        q.set(i, j, v);
      else if (q(i, j) != v)
        throw ParseError("qp instance: Q is not symmetric");
    }
  expect("c");
  RatVec c(n);
  for (int j = 0; j < n; ++j) c[j] = read_rat();
  expect("constraints");
  Polytope p;
  p.dim = n;
  for (std::size_t i = 0; i < m; ++i) {
    std::string sense;
    if (!(in >> sense) || (sense != "le" && sense != "eq"))
      throw ParseError("qp instance: bad constraint sense");
    RatVec a(n);
    for (int j = 0; j < n; ++j) a[j] = read_rat();
    Rat b = read_rat();
    if (sense == "le")
      p.add_ineq(std::move(a), std::move(b));
    else
      p.add_eq(std::move(a), std::move(b));
  }
  return make_qp(std::move(q), std::move(c), std::move(p), std::move(prov));
}

inline QpInstance parse_qp(const std::string& text) {
  std::istringstream in(text);
  return parse_qp(in);
}

}  // namespace qpcert
