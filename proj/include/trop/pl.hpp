#pragma once

#include <map>
#include <set>
#include <string>

#include "trop/cone.hpp"
#include "trop/curve.hpp"

namespace trop {

/// Piecewise-linear function on a tropical curve: a Functional value at each
/// vertex and an integer slope along each oriented edge and leg. Along an edge
/// e = {v,w}: value(w) - value(v) = slope(v->w) * length(e) exactly.
struct PLFunction {
  std::map<std::string, Functional> vertex_values;
  // slope keyed by (edge id, tail vertex id); slope(w->v) = -slope(v->w).
  std::map<std::pair<std::string, std::string>, int> edge_slopes;
  std::map<int, int> leg_slopes;  // by marking label

  const Functional& value(const std::string& v) const { return vertex_values.at(v); }
  int slope(const std::string& edge_id, const std::string& tail) const {
    return edge_slopes.at({edge_id, tail});
  }
};

/// Edge length as a functional on the base generators (unit vector for
/// generator-length edges, the stored functional for derived lengths).
Functional edge_length_functional(const TropicalCurve& c, const Edge& e,
                                  const std::vector<std::string>& gens);

/// Distance from the circuit: lambda(v) = sum of edge lengths on the unique
/// circuit-ward path. Slope 1 away from the circuit on tree edges and on all
/// legs, 0 on circuit edges. Requires genus 1.
PLFunction lambda_function(const TropicalCurve& c);

/// Degree of O(f) on the component of v: sum of outgoing slopes over flags at v.
int degree_on_vertex(const TropicalCurve& c, const PLFunction& f, const std::string& v);

int total_degree(const TropicalCurve& c, const PLFunction& f);

struct RadiusSubdivision {
  TropicalCurve curve;                            // C_delta, with derived edge lengths
  std::map<std::string, std::string> vertex_map;  // old vertex -> same vertex
  std::set<std::string> new_vertices;             // inserted split vertices
};

/// Universal modification making lambda and delta comparable: splits every
/// edge (and leg) strictly crossed by the circle of radius delta, at the
/// circle. Requires delta comparable on the cone to every lambda(v).
RadiusSubdivision subdivide_at_radius(const TropicalCurve& c, const Functional& delta,
                                      const Cone& cone);

/// mu = max(lambda, delta) on C_delta, decided by exact sign tests on the cone.
PLFunction mu_function(const TropicalCurve& c_delta, const Functional& delta, const Cone& cone);

}  // namespace trop
