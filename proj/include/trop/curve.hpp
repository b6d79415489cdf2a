#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trop/exact.hpp"

namespace trop {

struct Vertex {
  std::string id;
  int genus = 0;  // 0 or 1
};

// Loops (ends.first == ends.second) and parallel edges are allowed.
// `length` names the formal generator metrizing the edge; for curves produced
// by subdivision it is empty and `derived_length` holds a functional on the
// base generators instead.
struct Edge {
  std::string id;
  std::pair<std::string, std::string> ends;
  std::string length;
  std::optional<IntVec> derived_length;
};

struct Leg {
  int label = 0;  // marking label in 1..n
  std::string at;
};

class TropicalCurve {
 public:
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Leg> legs;

  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;
  const Vertex& vertex(const std::string& id) const { return vertices[vertex_index(id)]; }
  const Edge& edge(const std::string& id) const { return edges[edge_index(id)]; }

  /// Edges plus legs at v; a loop counts twice.
  int valence(const std::string& v) const;
  std::vector<int> legs_at(const std::string& v) const;
  std::vector<std::string> edges_at(const std::string& v) const;

  int marking_count() const { return static_cast<int>(legs.size()); }

  /// Generator names in the order used for all functionals: edges sorted by id.
  std::vector<std::string> generator_names() const;
};

struct Circuit {
  std::set<std::string> vertex_ids;
  std::set<std::string> edge_ids;
};

enum class StabilityClass { stable, semistable, prestable_only };

/// Empty when every invariant holds; otherwise one message per violation.
std::vector<std::string> validate(const TropicalCurve& c);

/// h1(G) + sum of vertex genera. Throws if disconnected.
int genus(const TropicalCurve& c);

/// The unique minimal genus-1 subgraph. Requires genus 1.
Circuit circuit(const TropicalCurve& c);

StabilityClass stability_class(const TropicalCurve& c);

struct ContractionResult {
  TropicalCurve curve;
  std::map<std::string, std::string> vertex_map;  // old vertex id -> new vertex id
};

/// Weighted edge contraction: merged vertices absorb genera plus the first
/// Betti number of the contracted piece. Markings are preserved.
ContractionResult contract_edges(const TropicalCurve& c, const std::set<std::string>& edge_ids);

/// Canonical form: invariant under relabeling of vertex and edge ids (marking
/// labels stay fixed). Deterministic; idempotent.
TropicalCurve canonicalize(const TropicalCurve& c);

/// Certificate string of the canonical form; equal iff isomorphic.
std::string canonical_key(const TropicalCurve& c);

bool is_isomorphic(const TropicalCurve& a, const TropicalCurve& b);

// Tree structure of a genus-1 curve relative to its circuit.
struct CircuitTree {
  Circuit circ;
  // For each non-circuit vertex: the first edge on its unique path to the
  // circuit, and the neighbor that path moves to.
  std::map<std::string, std::string> parent_edge;
  std::map<std::string, std::string> parent_vertex;
  // Non-circuit vertices in BFS order from the circuit.
  std::vector<std::string> order;
};

CircuitTree circuit_tree(const TropicalCurve& c);

}  // namespace trop
