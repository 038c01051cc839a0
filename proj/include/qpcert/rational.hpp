#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpcert {

using Int = boost::multiprecision::cpp_int;

// Refusal to run an exponential oracle past its configured limit.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact rational scalar. cpp_rational keeps lowest terms and a positive
// denominator as class invariants.
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline std::string rat_str(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

// Accepts "p/q" or a plain integer string; q must be nonzero.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    if (q < 0) {
      p = -p;
      q = -q;
    }
    return Rat(p, q);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  }
}

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Dyadic rational nearest to x with denominator 2^denom_log2.
inline Rat rationalize(double x, int denom_log2 = 20) {
  if (denom_log2 < 0 || denom_log2 > 62)
    throw std::invalid_argument("rationalize: bad denominator exponent");
  const double scale = static_cast<double>(std::int64_t{1} << denom_log2);
  const double scaled = x * scale;
  if (!(scaled > -9.2e18 && scaled < 9.2e18))
    throw std::invalid_argument("rationalize: value out of range");
  const auto p = static_cast<std::int64_t>(scaled >= 0 ? scaled + 0.5 : scaled - 0.5);
  return Rat(Int(p), Int(std::int64_t{1} << denom_log2));
}

inline double rat_double(const Rat& r) { return static_cast<double>(r); }

inline RatVec rat_vec(std::initializer_list<long> xs) {
  RatVec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero_vec(const RatVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

inline RatVec scaled(const RatVec& v, const Rat& s) {
  RatVec out(v);
  for (Rat& x : out) x *= s;
  return out;
}

inline RatVec vec_add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: dimension mismatch");
  RatVec out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

// Strict lexicographic order, used for deterministic tie-breaking.
inline bool lex_less(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

inline std::string vec_str(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(v[i]);
  }
  return s + ")";
}

}  // namespace qpcert
