#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trop/cone.hpp"
#include "trop/curve.hpp"
#include "trop/pl.hpp"

namespace trop {

/// Circle of radius delta around the circuit. Incident: lambda(v) < delta <=
/// lambda(w); excident: lambda(v) <= delta < lambda(w); legs have
/// lambda(head) = +infinity.
struct CircleData {
  Functional radius;
  std::set<std::string> incident_edges;  // edge ids; crossed legs listed as "leg:<label>"
  std::set<std::string> excident_edges;
  std::set<std::string> interior_vertices;  // lambda(v) < delta
  std::set<std::string> boundary_vertices;  // lambda(v) = delta
  int inner_valence = 0;                    // eta
  int outer_valence = 0;                    // tau
};

CircleData circle_data(const TropicalCurve& c, const Cone& cone, const Functional& delta);

/// Smallest delta in {0} union {lambda(v)} (in the cone's radius order) whose
/// circle has inner valence <= m and outer valence > m. Requires a semistable
/// curve and 0 <= m <= n-1.
Functional delta_m(const TropicalCurve& c, const Cone& cone, int m);

struct SingularRecord {
  std::string vertex;  // the elliptic vertex in the graph
  int branches = 0;    // m; delta-invariant equals m
  std::set<std::string> branch_edges;
};

/// Contraction output: a curve-shaped graph, plus the elliptic m-fold record
/// when delta > 0. Branch components stay separate vertices glued at the
/// singular vertex.
struct SmythGraph {
  TropicalCurve graph;
  std::optional<SingularRecord> singular;
};

/// Contract the interior of the circle of radius delta (delta in {0} union
/// {lambda(v)}); delta = 0 returns the input as a nodal graph.
SmythGraph contract_circle(const TropicalCurve& c, const Cone& cone, const Functional& delta);

/// Graph-level m-stability: elliptic branch count <= m, and every connected
/// genus-1 subcurve has more than m external nodes plus markings.
bool is_m_stable(const SmythGraph& g, int m);

using DegreeLabeling = std::map<std::string, int>;

/// Least lambda(v) in the cone's order with positive degree; zero iff a
/// circuit vertex has positive degree. Errors on the all-zero labeling.
Functional contraction_radius(const TropicalCurve& c, const Cone& cone,
                              const DegreeLabeling& degrees);

struct SemicontinuityReport {
  int eta_special = 0, tau_special = 0;  // before contraction
  int eta_generic = 0, tau_generic = 0;  // after contraction
  bool eta_ok = false;                   // eta_generic <= eta_special
  bool tau_ok = false;                   // tau_generic >= tau_special
};

/// Contract the edge subset (a generization) and compare circle valences.
/// Errors if delta uses a contracted generator.
SemicontinuityReport valence_semicontinuity_check(const TropicalCurve& c, const Cone& cone,
                                                  const Functional& delta,
                                                  const std::set<std::string>& edge_ids);

}  // namespace trop
