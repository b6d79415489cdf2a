#include "trop/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace trop {

namespace {

// Append every distribution of marking labels 1..n over the vertices.
void emit_leg_assignments(const TropicalCurve& skeleton, int n,
                          std::map<std::string, TropicalCurve>& out) {
  size_t v_count = skeleton.vertices.size();
  std::vector<size_t> at(n, 0);
  while (true) {
    TropicalCurve c = skeleton;
    for (int i = 0; i < n; ++i) c.legs.push_back({i + 1, skeleton.vertices[at[i]].id});
    if (stability_class(c) == StabilityClass::stable && validate(c).empty()) {
      std::string key = canonical_key(c);
      if (!out.count(key)) out[key] = canonicalize(c);
    }
    // next assignment
    int i = n - 1;
    while (i >= 0 && at[i] + 1 == v_count) {
      at[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++at[i];
  }
}

// Enumerate forests hanging off the given core: `extra` tree edges, each new
// vertex attached to any existing vertex.
void grow_trees(TropicalCurve base, int extra, int n, std::map<std::string, TropicalCurve>& out) {
  if (extra == 0) {
    emit_leg_assignments(base, n, out);
    return;
  }
  size_t existing = base.vertices.size();
  for (size_t p = 0; p < existing; ++p) {
    TropicalCurve next = base;
    std::string id = "t" + std::to_string(next.vertices.size());
    std::string eid = "te" + std::to_string(next.edges.size());
    next.vertices.push_back({id, 0});
    next.edges.push_back({eid, {next.vertices[p].id, id}, eid, std::nullopt});
    grow_trees(next, extra - 1, n, out);
  }
}

}  // namespace

Catalog enumerate_stable(int n, int max_edges) {
  if (n < 1) throw std::invalid_argument("enumerate_stable: n must be >= 1");
  if (max_edges < 0 || max_edges > 8)
    throw std::invalid_argument("enumerate_stable: max_edges must be in [0, 8]");

  std::map<std::string, TropicalCurve> dedup;

  // Core type A: one genus-1 vertex, no circuit edges.
  {
    TropicalCurve core;
    core.vertices.push_back({"c0", 1});
    for (int extra = 0; extra <= max_edges; ++extra) grow_trees(core, extra, n, dedup);
  }
  // Core type B: cycle of m genus-0 vertices (m = 1 is a loop).
  for (int m = 1; m <= max_edges; ++m) {
    TropicalCurve core;
    for (int i = 0; i < m; ++i) core.vertices.push_back({"c" + std::to_string(i), 0});
    if (m == 1) {
      core.edges.push_back({"ce0", {"c0", "c0"}, "ce0", std::nullopt});
    } else {
      for (int i = 0; i < m; ++i)
        core.edges.push_back({"ce" + std::to_string(i),
                              {"c" + std::to_string(i), "c" + std::to_string((i + 1) % m)},
                              "ce" + std::to_string(i),
                              std::nullopt});
    }
    for (int extra = 0; extra + m <= max_edges; ++extra) grow_trees(core, extra, n, dedup);
  }

  Catalog cat;
  cat.n = n;
  for (auto& [key, c] : dedup) cat.curves.push_back(std::move(c));
  std::sort(cat.curves.begin(), cat.curves.end(),
            [](const TropicalCurve& a, const TropicalCurve& b) {
              if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
              if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
              return canonical_key(a) < canonical_key(b);
            });
  for (const auto& c : cat.curves) cat.counts_by_edges[static_cast<int>(c.edges.size())]++;
  return cat;
}

std::vector<SpecializationEdge> specialization_poset(const Catalog& cat) {
  std::map<std::string, int> index_of;
  for (size_t i = 0; i < cat.curves.size(); ++i)
    index_of[canonical_key(cat.curves[i])] = static_cast<int>(i);

  std::vector<SpecializationEdge> out;
  for (size_t i = 0; i < cat.curves.size(); ++i) {
    for (const auto& e : cat.curves[i].edges) {
      ContractionResult r = contract_edges(cat.curves[i], {e.id});
      auto it = index_of.find(canonical_key(r.curve));
      if (it == index_of.end())
        throw std::logic_error("specialization_poset: contraction left the catalog");
      out.push_back({static_cast<int>(i), e.id, it->second});
    }
  }
  return out;
}

}  // namespace trop
