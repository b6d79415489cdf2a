#include "trop/pl.hpp"

#include <algorithm>
#include <stdexcept>

namespace trop {

Functional edge_length_functional(const TropicalCurve& c, const Edge& e,
                                  const std::vector<std::string>& gens) {
  (void)c;
  if (e.derived_length) return Functional{*e.derived_length};
  auto it = std::lower_bound(gens.begin(), gens.end(), e.length);
  if (it == gens.end() || *it != e.length)
    throw std::invalid_argument("unknown length generator: " + e.length);
  return Functional::unit(gens.size(), static_cast<size_t>(it - gens.begin()));
}

PLFunction lambda_function(const TropicalCurve& c) {
  if (genus(c) != 1) throw std::invalid_argument("lambda_function: genus must be 1");
  auto gens = c.generator_names();
  CircuitTree t = circuit_tree(c);

  PLFunction f;
  for (const auto& v : t.circ.vertex_ids) f.vertex_values[v] = Functional::zero(gens.size());
  for (const auto& v : t.order) {
    const Edge& pe = c.edge(t.parent_edge.at(v));
    f.vertex_values[v] =
        f.vertex_values.at(t.parent_vertex.at(v)) + edge_length_functional(c, pe, gens);
  }
  for (const auto& e : c.edges) {
    int s;
    if (t.circ.edge_ids.count(e.id)) {
      s = 0;
      f.edge_slopes[{e.id, e.ends.first}] = 0;
      f.edge_slopes[{e.id, e.ends.second}] = 0;
      continue;
    }
    // Oriented away from the circuit: slope 1.
    const std::string& child =
        t.parent_edge.count(e.ends.second) && t.parent_edge.at(e.ends.second) == e.id
            ? e.ends.second
            : e.ends.first;
    const std::string& parent = child == e.ends.first ? e.ends.second : e.ends.first;
    s = 1;
    f.edge_slopes[{e.id, parent}] = s;
    f.edge_slopes[{e.id, child}] = -s;
  }
  for (const auto& l : c.legs) f.leg_slopes[l.label] = 1;
  return f;
}

int degree_on_vertex(const TropicalCurve& c, const PLFunction& f, const std::string& v) {
  c.vertex_index(v);  // throws on unknown vertex
  int deg = 0;
  for (const auto& e : c.edges) {
    if (e.ends.first == v) deg += f.slope(e.id, v);
    if (e.ends.second == v) {
      if (e.ends.first == e.ends.second) deg += -f.slope(e.id, v);  // loop: both flags
      else deg += f.slope(e.id, e.ends.second);
    }
  }
  for (const auto& l : c.legs)
    if (l.at == v) deg += f.leg_slopes.at(l.label);
  return deg;
}

int total_degree(const TropicalCurve& c, const PLFunction& f) {
  int t = 0;
  for (const auto& v : c.vertices) t += degree_on_vertex(c, f, v.id);
  return t;
}

RadiusSubdivision subdivide_at_radius(const TropicalCurve& c, const Functional& delta,
                                      const Cone& cone) {
  auto gens = c.generator_names();
  PLFunction lam = lambda_function(c);
  for (const auto& [v, val] : lam.vertex_values) {
    if (cone.sign_of(delta - val) == SignOnCone::mixed)
      throw std::invalid_argument("subdivide_at_radius: delta not comparable to lambda(" + v + ")");
  }

  RadiusSubdivision out;
  out.curve = c;
  for (const auto& v : c.vertices) out.vertex_map[v.id] = v.id;

  auto strictly_positive = [&](const Functional& f) {
    return cone.sign_of(f) == SignOnCone::positive;
  };

  int counter = 0;
  auto fresh = [&]() { return "x" + std::to_string(counter++); };

  // Split finite edges strictly crossed by the circle.
  std::vector<Edge> new_edges;
  for (const auto& e : out.curve.edges) {
    const auto& lo_v = lam.value(e.ends.first);
    const auto& hi_v = lam.value(e.ends.second);
    std::string lo = e.ends.first, hi = e.ends.second;
    Functional lov = lo_v, hiv = hi_v;
    if (cone.sign_of(hiv - lov) == SignOnCone::negative) {
      std::swap(lo, hi);
      std::swap(lov, hiv);
    }
    bool crossed = strictly_positive(delta - lov) && strictly_positive(hiv - delta);
    if (!crossed) {
      new_edges.push_back(e);
      continue;
    }
    std::string x = fresh();
    while (true) {  // avoid id collisions with existing vertices
      bool clash = false;
      for (const auto& v : c.vertices)
        if (v.id == x) clash = true;
      if (!clash) break;
      x = fresh();
    }
    out.curve.vertices.push_back({x, 0});
    out.new_vertices.insert(x);
    Edge inner{e.id + ".in", {lo, x}, "", (delta - lov).coeffs};
    Edge outer{e.id + ".out", {x, hi}, "", (hiv - delta).coeffs};
    new_edges.push_back(inner);
    new_edges.push_back(outer);
  }
  out.curve.edges = std::move(new_edges);

  // Split legs attached strictly inside the circle; the leg moves outward.
  std::vector<Leg> new_legs;
  for (const auto& l : out.curve.legs) {
    const auto& at = lam.value(l.at);
    if (!strictly_positive(delta - at)) {
      new_legs.push_back(l);
      continue;
    }
    std::string x = fresh();
    out.curve.vertices.push_back({x, 0});
    out.new_vertices.insert(x);
    Edge inner{"leg" + std::to_string(l.label) + ".in", {l.at, x}, "", (delta - at).coeffs};
    out.curve.edges.push_back(inner);
    new_legs.push_back({l.label, x});
  }
  out.curve.legs = std::move(new_legs);
  return out;
}

PLFunction mu_function(const TropicalCurve& c_delta, const Functional& delta, const Cone& cone) {
  auto gens = c_delta.generator_names();
  PLFunction lam = lambda_function(c_delta);
  PLFunction mu;
  for (const auto& [v, val] : lam.vertex_values) {
    SignOnCone s = cone.sign_of(delta - val);
    if (s == SignOnCone::mixed)
      throw std::invalid_argument("mu_function: lambda and delta not comparable at " + v);
    mu.vertex_values[v] = (s == SignOnCone::negative) ? val : delta;
  }
  for (const auto& e : c_delta.edges) {
    // Inside the closed disk: slope 0; outside: lambda's slope.
    bool first_in = cone.sign_of(lam.value(e.ends.first) - delta) != SignOnCone::positive;
    bool second_in = cone.sign_of(lam.value(e.ends.second) - delta) != SignOnCone::positive;
    if (first_in && second_in) {
      mu.edge_slopes[{e.id, e.ends.first}] = 0;
      mu.edge_slopes[{e.id, e.ends.second}] = 0;
    } else {
      mu.edge_slopes[{e.id, e.ends.first}] = lam.slope(e.id, e.ends.first);
      mu.edge_slopes[{e.id, e.ends.second}] = lam.slope(e.id, e.ends.second);
    }
  }
  for (const auto& l : c_delta.legs) {
    bool inside = cone.sign_of(lam.value(l.at) - delta) == SignOnCone::negative;
    mu.leg_slopes[l.label] = inside ? 0 : 1;
  }
  return mu;
}

}  // namespace trop
