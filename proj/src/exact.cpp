#include "trop/exact.hpp"

#include <algorithm>
#include <sstream>

#include "exact_impl.hpp"

namespace trop {

int rank_of(std::vector<IntVec> rows) { return rank_of_impl(std::move(rows)); }

std::vector<Int> smith_invariants(std::vector<IntVec> rows) {
  if (rows.empty()) return {};
  size_t m = rows.size(), n = rows[0].size();
  auto at = [&](size_t i, size_t j) -> Int& { return rows[i][j]; };

  std::vector<Int> invs;
  size_t top = 0;
  while (top < m && top < n) {
    // Find a nonzero pivot in the submatrix.
    size_t pi = top, pj = top;
    bool found = false;
    Int best = 0;
    for (size_t i = top; i < m; ++i)
      for (size_t j = top; j < n; ++j) {
        if (at(i, j) == 0) continue;
        Int a = abs(at(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    std::swap(rows[top], rows[pi]);
    for (size_t i = 0; i < m; ++i) std::swap(at(i, top), at(i, pj));

    // Reduce row and column at `top` until clean.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = top + 1; i < m; ++i) {
        if (at(i, top) == 0) continue;
        Int q = at(i, top) / at(top, top);
        for (size_t j = top; j < n; ++j) at(i, j) -= q * at(top, j);
        if (at(i, top) != 0) {  // remainder smaller than pivot: swap up
          std::swap(rows[top], rows[i]);
          dirty = true;
        }
      }
      for (size_t j = top + 1; j < n; ++j) {
        if (at(top, j) == 0) continue;
        Int q = at(top, j) / at(top, top);
        for (size_t i = top; i < m; ++i) at(i, j) -= q * at(i, top);
        if (at(top, j) != 0) {
          for (size_t i = 0; i < m; ++i) std::swap(at(i, top), at(i, j));
          dirty = true;
        }
      }
    }
    invs.push_back(abs(at(top, top)));
    ++top;
  }

  // Enforce divisibility d1 | d2 | ...
  for (size_t i = 0; i + 1 < invs.size(); ++i)
    for (size_t j = i + 1; j < invs.size(); ++j) {
      Int g = gcd(invs[i], invs[j]);
      Int l = invs[i] / g * invs[j];
      invs[i] = g;
      invs[j] = l;
    }
  return invs;
}

std::string to_string(const Int& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace trop
