#pragma once

#include <map>
#include <string>
#include <vector>

#include "trop/curve.hpp"

namespace trop {

struct Catalog {
  int n = 0;
  std::vector<TropicalCurve> curves;      // canonical, pairwise non-isomorphic
  std::map<int, int> counts_by_edges;
};

/// Every stable genus-1 n-marked graph with at most max_edges edges, up to
/// isomorphism, deterministically ordered. Requires n >= 1, max_edges <= 8.
Catalog enumerate_stable(int n, int max_edges);

struct SpecializationEdge {
  int curve_index = 0;
  std::string contracted_edge;
  int result_index = 0;  // index in the catalog of the canonical contraction
};

/// All single-edge contractions, resolved to catalog indices.
std::vector<SpecializationEdge> specialization_poset(const Catalog& cat);

}  // namespace trop
