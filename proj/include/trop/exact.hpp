#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <string>
#include <vector>

namespace trop {

// All lattice arithmetic in this library is exact; floats are never used.
using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

/// gcd of all entries (nonnegative); 0 for the zero vector.
inline Int content(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

/// Divide by the content so the entries are coprime. Zero vectors pass through.
inline IntVec primitive(IntVec v) {
  Int g = content(v);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVec scale(const Int& c, const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Rank of an integer matrix (rows), by fraction-free Gaussian elimination.
int rank_of(std::vector<IntVec> rows);

/// Smith normal form invariant factors of the matrix whose rows are `rows`.
/// Returned in divisibility order; zeros omitted.
std::vector<Int> smith_invariants(std::vector<IntVec> rows);

std::string to_string(const Int& x);

}  // namespace trop
