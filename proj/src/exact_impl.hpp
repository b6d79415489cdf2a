#pragma once

// Shared by curve.cpp and cone.cpp only; not part of the public surface.

#include "trop/exact.hpp"

namespace trop {

inline int rank_of_impl(std::vector<IntVec> rows) {
  size_t r = 0;
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Int a = rows[r][c], b = rows[i][c];
      Int g = gcd(a, b);
      Int fa = b / g, fr = a / g;
      for (size_t j = c; j < cols; ++j) rows[i][j] = fr * rows[i][j] - fa * rows[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace trop
