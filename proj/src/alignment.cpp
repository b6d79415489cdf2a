#include "trop/alignment.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace trop {

namespace {

std::map<std::string, Functional> lambda_values(const TropicalCurve& c) {
  PLFunction lam = lambda_function(c);
  std::map<std::string, Functional> out;
  CircuitTree t = circuit_tree(c);
  for (const auto& v : t.order) out[v] = lam.value(v);
  return out;  // non-circuit vertices only
}

}  // namespace

std::optional<std::vector<std::vector<std::string>>> radius_tiers(const TropicalCurve& c,
                                                                  const Cone& cone) {
  auto lam = lambda_values(c);
  std::vector<std::pair<std::string, Functional>> vs(lam.begin(), lam.end());
  // Group by equality on the cone, order by value at the interior sample.
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (cone.sign_of(vs[i].second - vs[j].second) == SignOnCone::mixed) return std::nullopt;
  IntVec p = cone.interior_sample();
  std::map<Int, std::vector<std::string>> by_val;
  for (const auto& [v, f] : vs) by_val[f.eval(p)].push_back(v);
  std::vector<std::vector<std::string>> tiers;
  for (auto& [val, group] : by_val) {
    std::sort(group.begin(), group.end());
    tiers.push_back(group);
  }
  return tiers;
}

LabeledFan radial_fan(const TropicalCurve& c) {
  if (genus(c) != 1) throw std::invalid_argument("radial_fan: genus must be 1");
  auto gens = c.generator_names();
  Cone sigma = Cone::orthant(gens.size());
  auto lam = lambda_values(c);

  std::vector<Functional> walls;
  std::vector<std::pair<std::string, Functional>> vs(lam.begin(), lam.end());
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) walls.push_back(vs[i].second - vs[j].second);

  Fan fan = subdivide(sigma, walls);
  LabeledFan out{fan, {}};
  for (const auto& cell : fan.cells) {
    auto tiers = radius_tiers(c, cell);
    if (!tiers) throw std::logic_error("radial cell without a determined order");
    out.labels.push_back(RadialAlignment{*tiers, cell});
  }
  return out;
}

MinimalMonoid minimal_monoid(const TropicalCurve& c, const RadialAlignment& cell) {
  auto gens = c.generator_names();
  CircuitTree t = circuit_tree(c);
  PLFunction lam = lambda_function(c);

  MinimalMonoid m;
  for (const auto& eid : t.circ.edge_ids)
    m.generators.push_back(edge_length_functional(c, c.edge(eid), gens));

  Functional prev = Functional::zero(gens.size());
  for (const auto& tier : cell.tiers) {
    const Functional& cur = lam.value(tier.front());
    Functional diff = cur - prev;
    if (!diff.is_zero()) m.generators.push_back(diff);
    prev = cur;
  }
  std::sort(m.generators.begin(), m.generators.end(),
            [](const Functional& a, const Functional& b) { return a.coeffs < b.coeffs; });
  m.free = is_free(cell.cone);
  return m;
}

namespace {

struct CentralBuilder {
  const TropicalCurve& curve;
  CircuitTree tree;
  std::map<std::string, Functional> lam;
  std::map<std::string, std::vector<std::string>> children_of;  // parent -> children
  std::vector<CentralAlignment> result;

  explicit CentralBuilder(const TropicalCurve& c) : curve(c), tree(circuit_tree(c)) {
    lam = lambda_values(c);
    for (const auto& [child, parent] : tree.parent_vertex) children_of[parent].push_back(child);
  }

  std::vector<std::string> children_of_disk(const std::set<std::string>& interior) const {
    std::vector<std::string> out;
    for (const auto& [child, parent] : tree.parent_vertex) {
      if (interior.count(child)) continue;
      if (interior.count(parent) || tree.circ.vertex_ids.count(parent)) out.push_back(child);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // (k, |J|) of the disk: attaching edges and markings inside.
  std::pair<int, int> disk_signature(const std::set<std::string>& interior) const {
    int k = static_cast<int>(children_of_disk(interior).size());
    int j = 0;
    for (const auto& l : curve.legs)
      if (interior.count(l.at) || tree.circ.vertex_ids.count(l.at)) ++j;
    return {k, j};
  }

  void process(Cone cell, std::set<std::string> interior,
               std::vector<std::vector<std::string>> tiers) {
    auto kids = children_of_disk(interior);
    if (kids.empty()) {
      // Exhausted: the alignment ends at the outermost tier.
      CentralAlignment a;
      if (!tiers.empty()) {
        a.v_star = tiers.back().front();
        a.interior = std::vector<std::vector<std::string>>(tiers.begin(), tiers.end() - 1);
      }
      a.cone = std::move(cell);
      result.push_back(std::move(a));
      return;
    }
    // Is some child the minimum on this cell?
    std::string min_child;
    for (const auto& w : kids) {
      bool is_min = true;
      for (const auto& u : kids) {
        if (u == w) continue;
        SignOnCone s = cell.sign_of(lam.at(u) - lam.at(w));
        if (s == SignOnCone::mixed || s == SignOnCone::negative) {
          is_min = false;
          break;
        }
      }
      if (is_min) {
        min_child = w;
        break;
      }
    }
    if (min_child.empty()) {
      std::vector<Functional> fs;
      for (const auto& w : kids) fs.push_back(lam.at(w));
      for (auto& chamber : min_chambers(cell, fs)) process(chamber, interior, tiers);
      return;
    }
    // Tier of the minimum: children equal to it on the cell.
    std::vector<std::string> tier{min_child};
    for (const auto& u : kids)
      if (u != min_child && cell.sign_of(lam.at(u) - lam.at(min_child)) == SignOnCone::zero)
        tier.push_back(u);
    std::sort(tier.begin(), tier.end());

    auto [k, j] = disk_signature(interior);
    if (k + j >= 3) {
      CentralAlignment a;
      a.v_star = tier.front();
      a.interior = tiers;
      a.cone = std::move(cell);
      result.push_back(std::move(a));
      return;
    }
    for (const auto& w : tier) interior.insert(w);
    tiers.push_back(tier);
    process(std::move(cell), std::move(interior), std::move(tiers));
  }
};

}  // namespace

std::vector<CentralAlignment> central_alignments(const TropicalCurve& c) {
  if (stability_class(c) != StabilityClass::stable)
    throw std::invalid_argument("central_alignments: curve must be stable");
  auto gens = c.generator_names();
  Cone sigma = Cone::orthant(gens.size());

  CentralBuilder b(c);
  if (b.lam.empty()) {
    // No vertex can ever lie inside a circle: the zero-radius alignment.
    CentralAlignment a;
    a.cone = sigma;
    return {a};
  }
  b.process(sigma, {}, {});
  return std::move(b.result);
}

CentralFan central_fan(const TropicalCurve& c) {
  auto aligns = central_alignments(c);
  auto gens = c.generator_names();
  CentralFan out{Fan(Cone::orthant(gens.size())), {}};
  for (auto& a : aligns) {
    out.fan.cells.push_back(a.cone);
    out.labels.push_back(a);
  }
  return out;
}

}  // namespace trop
