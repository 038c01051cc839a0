#pragma once

#include <algorithm>
#include <map>

#include "qpcert/rational.hpp"

namespace qpcert {

// One linear row a^T x (<= or =) b.
struct LinCon {
  RatVec a;
  Rat b;
};

// Polyhedron {x : ineqs hold as a^T x <= b, eqs as a^T x = b}. Boundedness is
// not assumed; callers check it where needed.
struct Polytope {
  int dim = 0;
  std::vector<LinCon> ineqs;
  std::vector<LinCon> eqs;

  void add_ineq(RatVec a, Rat b) {
    check(a);
    ineqs.push_back({std::move(a), std::move(b)});
  }
  void add_eq(RatVec a, Rat b) {
    check(a);
    eqs.push_back({std::move(a), std::move(b)});
  }

  bool contains(const RatVec& x) const {
    if (static_cast<int>(x.size()) != dim) return false;
    for (const auto& c : ineqs)
      if (dot(c.a, x) > c.b) return false;
    for (const auto& c : eqs)
      if (dot(c.a, x) != c.b) return false;
    return true;
  }

 private:
  void check(const RatVec& a) const {
    if (static_cast<int>(a.size()) != dim)
      throw std::invalid_argument("Polytope: row dimension mismatch");
  }
};

inline RatVec unit_vec(int dim, int i, const Rat& v = Rat(1)) {
  RatVec e(dim, Rat(0));
  e[i] = v;
  return e;
}

// {x >= 0}
inline Polytope orthant(int dim) {
  Polytope p;
  p.dim = dim;
  for (int i = 0; i < dim; ++i) p.add_ineq(unit_vec(dim, i, Rat(-1)), 0);
  return p;
}

// Standard simplex {x >= 0, sum x = 1}.
inline Polytope standard_simplex(int dim) {
  Polytope p = orthant(dim);
  p.add_eq(RatVec(dim, Rat(1)), 1);
  return p;
}

// {x >= 0, sum x <= t}
inline Polytope orthant_capped(int dim, const Rat& t) {
  Polytope p = orthant(dim);
  p.add_ineq(RatVec(dim, Rat(1)), t);
  return p;
}

// Intersect with the box [-r, r]^dim.
inline void add_box(Polytope& p, const Rat& r) {
  for (int i = 0; i < p.dim; ++i) {
    p.add_ineq(unit_vec(p.dim, i), r);
    p.add_ineq(unit_vec(p.dim, i, Rat(-1)), r);
  }
}

// Drop duplicate and dominated inequality rows (same direction after scaling
// by the first nonzero coefficient, keep the tightest bound). Zero rows with
// b >= 0 are vacuous and dropped; a zero row with b < 0 is kept as-is so the
// polytope stays infeasible.
inline Polytope dedup_ineqs(const Polytope& p) {
  Polytope out;
  out.dim = p.dim;
  out.eqs = p.eqs;
  std::map<RatVec, Rat> best;
  std::vector<RatVec> order;
  for (const auto& c : p.ineqs) {
    int lead = -1;
    for (int i = 0; i < p.dim; ++i)
      if (c.a[i] != 0) {
        lead = i;
        break;
      }
    if (lead < 0) {
      if (c.b < 0) out.add_ineq(c.a, c.b);
      continue;
    }
    Rat scale = abs(c.a[lead]);
    RatVec key = scaled(c.a, 1 / scale);
    Rat bound = c.b / scale;
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(key, bound);
      order.push_back(key);
    } else if (bound < it->second) {
      it->second = bound;
    }
  }
  for (const auto& key : order) out.add_ineq(key, best.at(key));
  return out;
}

}  // namespace qpcert
