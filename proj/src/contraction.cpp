#include "trop/contraction.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace trop {

namespace {

bool sign_nonneg(SignOnCone s) { return s == SignOnCone::positive || s == SignOnCone::zero; }

}  // namespace

CircleData circle_data(const TropicalCurve& c, const Cone& cone, const Functional& delta) {
  PLFunction lam = lambda_function(c);
  CircleData out;
  out.radius = delta;

  for (const auto& v : c.vertices) {
    SignOnCone s = cone.sign_of(delta - lam.value(v.id));
    if (s == SignOnCone::mixed)
      throw std::invalid_argument("circle_data: delta not comparable to lambda(" + v.id + ")");
    if (s == SignOnCone::positive) out.interior_vertices.insert(v.id);
    if (s == SignOnCone::zero) out.boundary_vertices.insert(v.id);
  }

  for (const auto& e : c.edges) {
    Functional lu = lam.value(e.ends.first), lw = lam.value(e.ends.second);
    SignOnCone d = cone.sign_of(lw - lu);
    if (d == SignOnCone::mixed)
      throw std::invalid_argument("circle_data: radii of edge " + e.id + " not comparable");
    if (d == SignOnCone::negative) std::swap(lu, lw);
    SignOnCone lo = cone.sign_of(delta - lu);  // delta - lambda(inner)
    SignOnCone hi = cone.sign_of(lw - delta);  // lambda(outer) - delta
    if (lo == SignOnCone::positive && sign_nonneg(hi)) out.incident_edges.insert(e.id);
    if (sign_nonneg(lo) && hi == SignOnCone::positive) out.excident_edges.insert(e.id);
  }
  for (const auto& l : c.legs) {
    SignOnCone lo = cone.sign_of(delta - lam.value(l.at));
    std::string key = "leg:" + std::to_string(l.label);
    if (lo == SignOnCone::positive) out.incident_edges.insert(key);
    if (sign_nonneg(lo)) out.excident_edges.insert(key);
  }
  out.inner_valence = static_cast<int>(out.incident_edges.size());
  out.outer_valence = static_cast<int>(out.excident_edges.size());
  return out;
}

Functional delta_m(const TropicalCurve& c, const Cone& cone, int m) {
  if (stability_class(c) == StabilityClass::prestable_only)
    throw std::invalid_argument("delta_m: curve must be semistable");
  int n = c.marking_count();
  if (m < 0 || m > n - 1)
    throw std::invalid_argument("delta_m: m must satisfy 0 <= m <= n-1");

  auto gens = c.generator_names();
  PLFunction lam = lambda_function(c);

  // Candidates: 0 and the vertex radii, in the cone's order.
  std::vector<Functional> candidates{Functional::zero(gens.size())};
  {
    std::vector<std::pair<Int, Functional>> by_val;
    IntVec p = cone.interior_sample();
    std::set<IntVec> seen;
    for (const auto& v : c.vertices) {
      const Functional& f = lam.value(v.id);
      if (seen.insert(f.coeffs).second) by_val.emplace_back(f.eval(p), f);
    }
    std::sort(by_val.begin(), by_val.end(),
              [](const auto& a, const auto& b) {
                return a.first != b.first ? a.first < b.first : a.second.coeffs < b.second.coeffs;
              });
    for (auto& [val, f] : by_val)
      if (!f.is_zero()) candidates.push_back(f);
  }

  for (const auto& delta : candidates) {
    try {
      CircleData cd = circle_data(c, cone, delta);
      if (cd.inner_valence <= m && cd.outer_valence > m) return delta;
    } catch (const std::invalid_argument&) {
      continue;  // radius not comparable on this cone: not a candidate
    }
  }
  throw std::domain_error("delta_m: no m-stable radius on this cone");
}

SmythGraph contract_circle(const TropicalCurve& c, const Cone& cone, const Functional& delta) {
  if (delta.is_zero()) return SmythGraph{c, std::nullopt};

  PLFunction lam = lambda_function(c);
  bool hits_vertex = false;
  for (const auto& v : c.vertices)
    if (cone.sign_of(delta - lam.value(v.id)) == SignOnCone::zero) hits_vertex = true;
  if (!hits_vertex)
    throw std::invalid_argument("contract_circle: delta must be 0 or a vertex radius");

  RadiusSubdivision sub = subdivide_at_radius(c, delta, cone);
  const TropicalCurve& cd = sub.curve;
  PLFunction lamd = lambda_function(cd);

  std::set<std::string> interior;
  for (const auto& v : cd.vertices)
    if (cone.sign_of(delta - lamd.value(v.id)) == SignOnCone::positive) interior.insert(v.id);

  SmythGraph out;
  std::string star = "E*";
  int branches = 0;
  std::set<std::string> branch_edges;

  for (const auto& v : cd.vertices)
    if (!interior.count(v.id)) out.graph.vertices.push_back(v);
  out.graph.vertices.push_back({star, 1});

  int br = 0;
  for (const auto& e : cd.edges) {
    bool a_in = interior.count(e.ends.first), b_in = interior.count(e.ends.second);
    if (a_in && b_in) continue;  // fully contracted
    if (!a_in && !b_in) {
      out.graph.edges.push_back(e);
      continue;
    }
    // Incident edge: inner half dies, outer endpoint becomes a branch.
    std::string outer = a_in ? e.ends.second : e.ends.first;
    std::string bid = "br" + std::to_string(br++);
    Edge branch{bid, {star, outer}, "", IntVec(c.generator_names().size(), 0)};
    out.graph.edges.push_back(branch);
    branch_edges.insert(bid);
    ++branches;
  }
  for (const auto& l : cd.legs) {
    if (interior.count(l.at))
      throw std::logic_error("contract_circle: leg attached strictly inside after subdivision");
    out.graph.legs.push_back(l);
  }
  out.singular = SingularRecord{star, branches, branch_edges};
  return out;
}

namespace {

// Connected vertex sets containing `core`, enumerated by growth.
void for_each_connected_superset(const TropicalCurve& g, const std::set<std::string>& core,
                                 const std::function<void(const std::set<std::string>&)>& fn) {
  std::vector<std::string> rest;
  for (const auto& v : g.vertices)
    if (!core.count(v.id)) rest.push_back(v.id);
  size_t r = rest.size();
  for (size_t mask = 0; mask < (size_t{1} << r); ++mask) {
    std::set<std::string> vs = core;
    for (size_t i = 0; i < r; ++i)
      if (mask & (size_t{1} << i)) vs.insert(rest[i]);
    // connectivity of the induced subgraph
    if (vs.empty()) continue;
    std::set<std::string> seen{*vs.begin()};
    std::vector<std::string> stack{*vs.begin()};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (const auto& e : g.edges) {
        std::string other;
        if (e.ends.first == v) other = e.ends.second;
        else if (e.ends.second == v) other = e.ends.first;
        else continue;
        if (vs.count(other) && seen.insert(other).second) stack.push_back(other);
      }
    }
    if (seen.size() == vs.size()) fn(vs);
  }
}

int external_nodes_plus_markings(const TropicalCurve& g, const std::set<std::string>& vs) {
  int count = 0;
  for (const auto& e : g.edges) {
    bool a = vs.count(e.ends.first), b = vs.count(e.ends.second);
    if (a != b) ++count;
  }
  for (const auto& l : g.legs)
    if (vs.count(l.at)) ++count;
  return count;
}

}  // namespace

bool is_m_stable(const SmythGraph& g, int m) {
  std::set<std::string> core;
  if (g.singular) {
    if (g.singular->branches > m) return false;
    core.insert(g.singular->vertex);
    for (const auto& eid : g.singular->branch_edges) {
      const Edge& e = g.graph.edge(eid);
      core.insert(e.ends.first);
      core.insert(e.ends.second);
    }
  } else {
    Circuit circ = circuit(g.graph);
    core = circ.vertex_ids;
  }
  bool ok = true;
  for_each_connected_superset(g.graph, core, [&](const std::set<std::string>& vs) {
    if (external_nodes_plus_markings(g.graph, vs) <= m) ok = false;
  });
  return ok;
}

Functional contraction_radius(const TropicalCurve& c, const Cone& cone,
                              const DegreeLabeling& degrees) {
  bool any_positive = false;
  for (const auto& [v, d] : degrees) {
    if (d < 0) throw std::invalid_argument("contraction_radius: negative degree on " + v);
    if (d > 0) any_positive = true;
  }
  if (!any_positive) throw std::invalid_argument("contraction_radius: all degrees are zero");

  PLFunction lam = lambda_function(c);
  IntVec p = cone.interior_sample();
  std::vector<std::pair<std::pair<Int, std::string>, Functional>> order;
  for (const auto& v : c.vertices)
    order.push_back({{lam.value(v.id).eval(p), v.id}, lam.value(v.id)});
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [key, f] : order) {
    auto it = degrees.find(key.second);
    if (it != degrees.end() && it->second > 0) return f;
  }
  throw std::logic_error("contraction_radius: unreachable");
}

SemicontinuityReport valence_semicontinuity_check(const TropicalCurve& c, const Cone& cone,
                                                  const Functional& delta,
                                                  const std::set<std::string>& edge_ids) {
  auto gens = c.generator_names();
  for (const auto& eid : edge_ids) {
    const Edge& e = c.edge(eid);
    if (e.derived_length) continue;
    size_t idx = std::lower_bound(gens.begin(), gens.end(), e.length) - gens.begin();
    if (delta.coeffs[idx] != 0)
      throw std::invalid_argument("semicontinuity: delta is supported on contracted edge " + eid);
  }

  SemicontinuityReport rep;
  CircleData special = circle_data(c, cone, delta);
  rep.eta_special = special.inner_valence;
  rep.tau_special = special.outer_valence;

  ContractionResult gen = contract_edges(c, edge_ids);
  auto gens2 = gen.curve.generator_names();

  // The generization cone: the face {contracted lengths = 0}, projected.
  std::set<std::string> dropped;
  for (const auto& eid : edge_ids) dropped.insert(c.edge(eid).length);
  std::vector<size_t> keep;
  for (size_t i = 0; i < gens.size(); ++i)
    if (!dropped.count(gens[i])) keep.push_back(i);
  auto project = [&](const Functional& f) {
    IntVec v;
    for (size_t i : keep) v.push_back(f.coeffs[i]);
    return Functional{v};
  };
  std::vector<Functional> ineqs2;
  for (const auto& f : cone.inequalities()) {
    Functional pf = project(f);
    if (!pf.is_zero()) ineqs2.push_back(pf);
  }
  Cone cone2(gens2.size(), ineqs2);
  Functional delta2 = project(delta);

  CircleData generic = circle_data(gen.curve, cone2, delta2);
  rep.eta_generic = generic.inner_valence;
  rep.tau_generic = generic.outer_valence;
  rep.eta_ok = rep.eta_generic <= rep.eta_special;
  rep.tau_ok = rep.tau_generic >= rep.tau_special;
  return rep;
}

}  // namespace trop
