#include "trop/vz.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "trop/pl.hpp"

namespace trop {

std::vector<Precontractible> precontractible_subgraphs(const TropicalCurve& c) {
  if (genus(c) != 1) throw std::invalid_argument("precontractible_subgraphs: genus must be 1");
  Circuit circ = circuit(c);
  std::vector<std::string> rest;
  for (const auto& v : c.vertices)
    if (!circ.vertex_ids.count(v.id)) rest.push_back(v.id);
  std::sort(rest.begin(), rest.end());

  auto connected_with = [&](const std::set<std::string>& vs) {
    std::set<std::string> seen{*vs.begin()};
    std::deque<std::string> q{*vs.begin()};
    while (!q.empty()) {
      auto v = q.front();
      q.pop_front();
      for (const auto& e : c.edges) {
        std::string other;
        if (e.ends.first == v) other = e.ends.second;
        else if (e.ends.second == v) other = e.ends.first;
        else continue;
        if (vs.count(other) && seen.insert(other).second) q.push_back(other);
      }
    }
    return seen.size() == vs.size();
  };

  std::vector<Precontractible> out;
  out.push_back(Precontractible{});  // empty subgraph
  size_t r = rest.size();
  std::vector<Precontractible> found;
  for (size_t mask = 0; mask < (size_t{1} << r); ++mask) {
    std::set<std::string> vs = circ.vertex_ids;
    for (size_t i = 0; i < r; ++i)
      if (mask & (size_t{1} << i)) vs.insert(rest[i]);
    if (!connected_with(vs)) continue;
    Precontractible p;
    p.vertex_ids = vs;
    for (const auto& e : c.edges)
      if (vs.count(e.ends.first) && vs.count(e.ends.second)) p.edge_ids.insert(e.id);
    found.push_back(std::move(p));
  }
  std::sort(found.begin(), found.end(), [](const Precontractible& a, const Precontractible& b) {
    if (a.vertex_ids.size() != b.vertex_ids.size())
      return a.vertex_ids.size() < b.vertex_ids.size();
    return a.vertex_ids < b.vertex_ids;
  });
  for (auto& p : found) out.push_back(std::move(p));
  return out;
}

KJSignature kj_signature(const TropicalCurve& c, const Precontractible& p) {
  if (p.vertex_ids.empty())
    throw std::invalid_argument("kj_signature: empty precontractible subgraph");
  KJSignature s;
  for (const auto& e : c.edges) {
    bool a = p.vertex_ids.count(e.ends.first), b = p.vertex_ids.count(e.ends.second);
    if (a != b) ++s.k;
  }
  for (const auto& l : c.legs)
    if (p.vertex_ids.count(l.at)) s.legs.insert(l.label);
  return s;
}

KJOrder kj_compare(const KJSignature& a, const KJSignature& b) {
  if (a == b) return KJOrder::equal;
  bool a_le = a.k <= b.k && std::includes(b.legs.begin(), b.legs.end(), a.legs.begin(), a.legs.end());
  bool b_le = b.k <= a.k && std::includes(a.legs.begin(), a.legs.end(), b.legs.begin(), b.legs.end());
  if (a_le) return KJOrder::less;
  if (b_le) return KJOrder::greater;
  return KJOrder::incomparable;
}

std::vector<KJSignature> realized_signatures(const TropicalCurve& c) {
  std::vector<KJSignature> sigs;
  for (const auto& p : precontractible_subgraphs(c)) {
    if (p.vertex_ids.empty()) continue;
    KJSignature s = kj_signature(c, p);
    if (std::find(sigs.begin(), sigs.end(), s) == sigs.end()) sigs.push_back(s);
  }
  std::sort(sigs.begin(), sigs.end());
  return sigs;
}

std::vector<KJSignature> default_signature_order(const TropicalCurve& c) {
  auto sigs = realized_signatures(c);
  std::sort(sigs.begin(), sigs.end(), [](const KJSignature& a, const KJSignature& b) {
    int sa = a.k + static_cast<int>(a.legs.size());
    int sb = b.k + static_cast<int>(b.legs.size());
    if (sa != sb) return sa < sb;
    if (a.k != b.k) return a.k < b.k;
    return a.legs < b.legs;
  });
  return sigs;
}

namespace {

struct DiskScanner {
  const TropicalCurve& curve;
  CircuitTree tree;
  std::map<std::string, Functional> lam;

  explicit DiskScanner(const TropicalCurve& c) : curve(c), tree(circuit_tree(c)) {
    PLFunction f = lambda_function(c);
    for (const auto& v : tree.order) lam[v] = f.value(v);
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

  KJSignature disk_sig(const std::set<std::string>& interior) const {
    KJSignature s;
    s.k = static_cast<int>(children_of_disk(interior).size());
    for (const auto& l : curve.legs)
      if (interior.count(l.at) || tree.circ.vertex_ids.count(l.at)) s.legs.insert(l.label);
    return s;
  }

  struct Circle {
    std::set<std::string> interior;      // non-circuit interior vertices
    KJSignature sig;                     // of the open disk
    std::vector<std::string> periphery;  // children of the disk
  };

  struct Scan {
    std::vector<Circle> circles;
    // Alignment of the cell when the scan completed (stop tier or exhausted).
    std::optional<std::string> v_star;
    std::vector<std::vector<std::string>> interior_tiers;
    bool complete = false;
  };

  // Scan the circles of `cell` from the circuit outward, while the cell's
  // inequality data determines the next tier; end at the first disk whose
  // signature satisfies k + |J| >= 3 (the stable central alignment).
  Scan scan(const Cone& cell) const {
    Scan out;
    std::set<std::string> interior;
    std::vector<std::vector<std::string>> tiers;
    while (true) {
      auto kids = children_of_disk(interior);
      if (kids.empty()) {
        out.complete = true;
        if (!tiers.empty()) {
          out.v_star = tiers.back().front();
          out.interior_tiers.assign(tiers.begin(), tiers.end() - 1);
        }
        return out;
      }
      KJSignature sig = disk_sig(interior);
      out.circles.push_back({interior, sig, kids});
      bool stop = sig.k + static_cast<int>(sig.legs.size()) >= 3;

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
      if (stop) {
        if (!min_child.empty()) {
          out.complete = true;
          out.v_star = min_child;
          out.interior_tiers = tiers;
        }
        return out;
      }
      if (min_child.empty()) return out;  // indeterminate: scan ends here
      std::vector<std::string> tier{min_child};
      for (const auto& u : kids)
        if (u != min_child && cell.sign_of(lam.at(u) - lam.at(min_child)) == SignOnCone::zero)
          tier.push_back(u);
      std::sort(tier.begin(), tier.end());
      for (const auto& w : tier) interior.insert(w);
      tiers.push_back(tier);
    }
  }
};

}  // namespace

CentralFan vz_fan(const TropicalCurve& c, const std::vector<KJSignature>& total_order) {
  if (stability_class(c) != StabilityClass::stable)
    throw std::invalid_argument("vz_fan: curve must be stable");
  auto realized = realized_signatures(c);
  for (const auto& s : realized)
    if (std::find(total_order.begin(), total_order.end(), s) == total_order.end())
      throw std::invalid_argument("vz_fan: order is missing a realized signature");
  for (size_t i = 0; i < total_order.size(); ++i)
    for (size_t j = i + 1; j < total_order.size(); ++j) {
      if (total_order[i] == total_order[j])
        throw std::invalid_argument("vz_fan: duplicate signature in order");
      if (kj_compare(total_order[j], total_order[i]) == KJOrder::less)
        throw std::invalid_argument("vz_fan: order is not a linear extension");
    }

  auto gens = c.generator_names();
  DiskScanner scanner(c);
  std::vector<Cone> cells{Cone::orthant(gens.size())};

  for (const auto& sig : total_order) {
    std::vector<Cone> next;
    for (const auto& cell : cells) {
      auto scan = scanner.scan(cell);
      const DiskScanner::Circle* match = nullptr;
      for (const auto& circ : scan.circles)
        if (circ.sig == sig) {
          match = &circ;
          break;
        }
      if (!match) {
        next.push_back(cell);
        continue;
      }
      std::vector<Functional> fs;
      for (const auto& w : match->periphery) fs.push_back(scanner.lam.at(w));
      for (auto& chamber : min_chambers(cell, fs)) next.push_back(std::move(chamber));
    }
    cells = std::move(next);
  }

  CentralFan out{Fan(Cone::orthant(gens.size())), {}};
  for (auto& cell : cells) {
    auto scan = scanner.scan(cell);
    CentralAlignment a;
    a.v_star = scan.v_star;
    a.interior = scan.interior_tiers;
    a.cone = cell;
    out.fan.cells.push_back(std::move(cell));
    out.labels.push_back(std::move(a));
  }
  return out;
}

EquivalenceReport vz_equivalence(const TropicalCurve& c) {
  EquivalenceReport rep;
  auto base = default_signature_order(c);

  // Three linear extensions with different tie-breaks among incomparables.
  auto by = [&](auto cmp) {
    auto v = base;
    std::stable_sort(v.begin(), v.end(), cmp);
    return v;
  };
  rep.orders.push_back(base);
  rep.orders.push_back(by([](const KJSignature& a, const KJSignature& b) {
    int sa = a.k + static_cast<int>(a.legs.size());
    int sb = b.k + static_cast<int>(b.legs.size());
    if (sa != sb) return sa < sb;
    if (a.legs.size() != b.legs.size()) return a.legs.size() < b.legs.size();
    return a.legs > b.legs;
  }));
  rep.orders.push_back(by([](const KJSignature& a, const KJSignature& b) {
    if (a.legs.size() != b.legs.size()) return a.legs.size() < b.legs.size();
    return a.k < b.k;
  }));

  for (const auto& ord : rep.orders) rep.vz_fans.push_back(vz_fan(c, ord));
  rep.central = central_fan(c);

  rep.all_equal = true;
  for (const auto& f : rep.vz_fans)
    if (!fans_equal(f.fan, rep.central.fan)) rep.all_equal = false;
  for (size_t i = 1; i < rep.vz_fans.size(); ++i)
    if (!fans_equal(rep.vz_fans[i].fan, rep.vz_fans[0].fan)) rep.all_equal = false;
  rep.cell_count = static_cast<int>(rep.central.fan.cells.size());
  return rep;
}

}  // namespace trop
