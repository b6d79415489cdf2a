#include "trop/curve.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace trop {

int TropicalCurve::vertex_index(const std::string& id) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return static_cast<int>(i);
  throw std::invalid_argument("unknown vertex id: " + id);
}

int TropicalCurve::edge_index(const std::string& id) const {
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i].id == id) return static_cast<int>(i);
  throw std::invalid_argument("unknown edge id: " + id);
}

int TropicalCurve::valence(const std::string& v) const {
  int val = 0;
  for (const auto& e : edges) {
    if (e.ends.first == v) ++val;
    if (e.ends.second == v) ++val;
  }
  for (const auto& l : legs)
    if (l.at == v) ++val;
  return val;
}

std::vector<int> TropicalCurve::legs_at(const std::string& v) const {
  std::vector<int> out;
  for (const auto& l : legs)
    if (l.at == v) out.push_back(l.label);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> TropicalCurve::edges_at(const std::string& v) const {
  std::vector<std::string> out;
  for (const auto& e : edges)
    if (e.ends.first == v || e.ends.second == v) out.push_back(e.id);
  return out;
}

std::vector<std::string> TropicalCurve::generator_names() const {
  std::vector<std::string> gens;
  for (const auto& e : edges)
    if (!e.derived_length) gens.push_back(e.length);
  std::sort(gens.begin(), gens.end());
  return gens;
}

namespace {

bool connected(const TropicalCurve& c) {
  if (c.vertices.empty()) return false;
  std::set<std::string> seen{c.vertices[0].id};
  std::deque<std::string> q{c.vertices[0].id};
  while (!q.empty()) {
    auto v = q.front();
    q.pop_front();
    for (const auto& e : c.edges) {
      std::string other;
      if (e.ends.first == v)
        other = e.ends.second;
      else if (e.ends.second == v)
        other = e.ends.first;
      else
        continue;
      if (seen.insert(other).second) q.push_back(other);
    }
  }
  return seen.size() == c.vertices.size();
}

int betti1(const TropicalCurve& c) {
  // h1 = |E| - |V| + #components; callers ensure connectivity.
  return static_cast<int>(c.edges.size()) - static_cast<int>(c.vertices.size()) + 1;
}

}  // namespace

std::vector<std::string> validate(const TropicalCurve& c) {
  std::vector<std::string> bad;
  if (c.vertices.empty()) {
    bad.push_back("curve has no vertices");
    return bad;
  }
  std::set<std::string> vids;
  for (const auto& v : c.vertices)
    if (!vids.insert(v.id).second) bad.push_back("duplicate vertex id: " + v.id);
  std::set<std::string> eids;
  for (const auto& e : c.edges) {
    if (!eids.insert(e.id).second) bad.push_back("duplicate edge id: " + e.id);
    if (!vids.count(e.ends.first) || !vids.count(e.ends.second))
      bad.push_back("edge " + e.id + " has an unknown endpoint");
  }
  std::set<std::string> gens;
  for (const auto& e : c.edges) {
    if (e.derived_length) continue;
    if (e.length.empty()) bad.push_back("edge " + e.id + " has no length generator");
    else if (!gens.insert(e.length).second)
      bad.push_back("edge lengths share generator: " + e.length);
  }
  if (!connected(c)) bad.push_back("graph is not connected");
  std::set<int> labels;
  for (const auto& l : c.legs) {
    if (!vids.count(l.at)) bad.push_back("leg " + std::to_string(l.label) + " attached to unknown vertex");
    if (!labels.insert(l.label).second)
      bad.push_back("marking label used twice: " + std::to_string(l.label));
  }
  int n = static_cast<int>(c.legs.size());
  for (int i = 1; i <= n; ++i)
    if (!labels.count(i)) bad.push_back("marking label missing: " + std::to_string(i));
  if (connected(c)) {
    int g = betti1(c);
    for (const auto& v : c.vertices) g += v.genus;
    if (g != 1) bad.push_back("total genus is " + std::to_string(g) + ", expected 1");
  }
  return bad;
}

int genus(const TropicalCurve& c) {
  if (!connected(c)) throw std::invalid_argument("genus: graph is not connected");
  int g = betti1(c);
  for (const auto& v : c.vertices) g += v.genus;
  return g;
}

Circuit circuit(const TropicalCurve& c) {
  if (genus(c) != 1) throw std::invalid_argument("circuit: curve must have genus 1");
  for (const auto& v : c.vertices)
    if (v.genus == 1) return Circuit{{v.id}, {}};
  // h1 = 1: strip leaves until only the cycle remains.
  std::set<std::string> alive;
  for (const auto& v : c.vertices) alive.insert(v.id);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& v : c.vertices) {
      if (!alive.count(v.id)) continue;
      int deg = 0;
      for (const auto& e : c.edges) {
        if (e.ends.first == e.ends.second) {
          if (e.ends.first == v.id && alive.count(v.id)) deg += 2;
          continue;
        }
        if (e.ends.first == v.id && alive.count(e.ends.second)) ++deg;
        if (e.ends.second == v.id && alive.count(e.ends.first)) ++deg;
      }
      if (deg <= 1) {
        alive.erase(v.id);
        changed = true;
      }
    }
  }
  Circuit circ;
  circ.vertex_ids = alive;
  for (const auto& e : c.edges)
    if (alive.count(e.ends.first) && alive.count(e.ends.second)) circ.edge_ids.insert(e.id);
  return circ;
}

StabilityClass stability_class(const TropicalCurve& c) {
  bool stable = true, semistable = true;
  for (const auto& v : c.vertices) {
    int val = c.valence(v.id);
    if (v.genus == 0) {
      if (val < 3) stable = false;
      if (val < 2) semistable = false;
    } else {
      if (val < 1) stable = semistable = false;
    }
  }
  if (stable) return StabilityClass::stable;
  if (semistable) return StabilityClass::semistable;
  return StabilityClass::prestable_only;
}

ContractionResult contract_edges(const TropicalCurve& c, const std::set<std::string>& edge_ids) {
  for (const auto& id : edge_ids) c.edge_index(id);  // throws on unknown ids

  // Union-find over vertices via the contracted edges.
  std::map<std::string, std::string> up;
  for (const auto& v : c.vertices) up[v.id] = v.id;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) -> std::string {
    return up[x] == x ? x : up[x] = find(up[x]);
  };
  for (const auto& e : c.edges)
    if (edge_ids.count(e.id)) up[find(e.ends.first)] = find(e.ends.second);

  // Representative id: lexicographically smallest member, for determinism.
  std::map<std::string, std::string> rep;
  for (const auto& v : c.vertices) {
    std::string r = find(v.id);
    auto it = rep.find(r);
    if (it == rep.end() || v.id < it->second) rep[r] = v.id;
  }

  ContractionResult out;
  for (const auto& v : c.vertices) out.vertex_map[v.id] = rep[find(v.id)];

  // Genus of each merged vertex: sum of genera plus h1 of the contracted piece.
  std::map<std::string, int> genus_sum, piece_vertices, piece_edges;
  for (const auto& v : c.vertices) {
    genus_sum[out.vertex_map.at(v.id)] += v.genus;
    piece_vertices[out.vertex_map.at(v.id)] += 1;
  }
  for (const auto& e : c.edges)
    if (edge_ids.count(e.id)) piece_edges[out.vertex_map.at(e.ends.first)] += 1;

  std::set<std::string> emitted;
  for (const auto& v : c.vertices) {
    std::string nv = out.vertex_map.at(v.id);
    if (!emitted.insert(nv).second) continue;
    int g = genus_sum[nv] + piece_edges[nv] - piece_vertices[nv] + 1;
    out.curve.vertices.push_back({nv, g});
  }
  for (const auto& e : c.edges) {
    if (edge_ids.count(e.id)) continue;
    Edge ne = e;
    ne.ends = {out.vertex_map.at(e.ends.first), out.vertex_map.at(e.ends.second)};
    out.curve.edges.push_back(ne);
  }
  for (const auto& l : c.legs) out.curve.legs.push_back({l.label, out.vertex_map.at(l.at)});
  return out;
}

namespace {

// Invariant-driven backtracking canonicalization. Vertices are assigned
// positions 0..V-1; the certificate is the lexicographically smallest
// encoding over all admissible assignments.
struct Canonicalizer {
  const TropicalCurve& c;
  std::vector<std::string> ids;
  std::map<std::string, int> initial_class;

  explicit Canonicalizer(const TropicalCurve& curve) : c(curve) {
    for (const auto& v : c.vertices) ids.push_back(v.id);
    // Partition by (genus, leg labels, valence): cheap invariant ordering.
    std::map<std::string, std::tuple<int, std::vector<int>, int>> inv;
    for (const auto& v : c.vertices) inv[v.id] = {v.genus, c.legs_at(v.id), c.valence(v.id)};
    std::vector<std::tuple<int, std::vector<int>, int>> classes;
    for (const auto& [id, key] : inv) classes.push_back(key);
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    for (const auto& [id, key] : inv)
      initial_class[id] =
          static_cast<int>(std::lower_bound(classes.begin(), classes.end(), key) - classes.begin());
  }

  std::string encode(const std::map<std::string, int>& pos) const {
    // Vertex section then sorted edge multiset then legs.
    std::vector<std::string> vtx(ids.size());
    for (const auto& v : c.vertices) {
      std::ostringstream os;
      os << "g" << v.genus;
      for (int l : c.legs_at(v.id)) os << ",m" << l;
      vtx[pos.at(v.id)] = os.str();
    }
    std::vector<std::pair<int, int>> es;
    for (const auto& e : c.edges) {
      int a = pos.at(e.ends.first), b = pos.at(e.ends.second);
      es.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(es.begin(), es.end());
    std::ostringstream os;
    for (size_t i = 0; i < vtx.size(); ++i) os << "V" << i << "{" << vtx[i] << "}";
    for (const auto& [a, b] : es) os << "E" << a << "-" << b << ";";
    return os.str();
  }

  std::string run(std::map<std::string, int>* best_pos_out) {
    std::vector<std::string> order = ids;
    std::sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
      return initial_class[a] < initial_class[b];
    });
    std::string best;
    std::map<std::string, int> pos, best_pos;
    // Try all assignments compatible with the invariant classes.
    std::function<void(size_t)> go = [&](size_t k) {
      if (k == order.size()) {
        std::string enc = encode(pos);
        if (best.empty() || enc < best) {
          best = enc;
          best_pos = pos;
        }
        return;
      }
      for (const auto& cand : ids) {
        if (pos.count(cand)) continue;
        if (initial_class[cand] != initial_class[order[k]]) continue;
        pos[cand] = static_cast<int>(k);
        go(k + 1);
        pos.erase(cand);
      }
    };
    go(0);
    if (best_pos_out) *best_pos_out = best_pos;
    return best;
  }
};

}  // namespace

std::string canonical_key(const TropicalCurve& c) {
  Canonicalizer cz(c);
  return cz.run(nullptr);
}

TropicalCurve canonicalize(const TropicalCurve& c) {
  Canonicalizer cz(c);
  std::map<std::string, int> pos;
  cz.run(&pos);

  TropicalCurve out;
  std::vector<const Vertex*> by_pos(c.vertices.size());
  for (const auto& v : c.vertices) by_pos[pos.at(v.id)] = &v;
  for (size_t i = 0; i < by_pos.size(); ++i)
    out.vertices.push_back({"v" + std::to_string(i), by_pos[i]->genus});

  std::vector<std::tuple<int, int, const Edge*>> es;
  for (const auto& e : c.edges) {
    int a = pos.at(e.ends.first), b = pos.at(e.ends.second);
    es.emplace_back(std::min(a, b), std::max(a, b), &e);
  }
  std::sort(es.begin(), es.end(), [](const auto& x, const auto& y) {
    return std::make_pair(std::get<0>(x), std::get<1>(x)) <
           std::make_pair(std::get<0>(y), std::get<1>(y));
  });
  for (size_t i = 0; i < es.size(); ++i) {
    std::string id = "e" + std::to_string(i);
    out.edges.push_back({id,
                         {"v" + std::to_string(std::get<0>(es[i])),
                          "v" + std::to_string(std::get<1>(es[i]))},
                         id,
                         std::nullopt});
  }
  std::vector<Leg> ls;
  for (const auto& l : c.legs) ls.push_back({l.label, "v" + std::to_string(pos.at(l.at))});
  std::sort(ls.begin(), ls.end(), [](const Leg& a, const Leg& b) { return a.label < b.label; });
  out.legs = ls;
  return out;
}

bool is_isomorphic(const TropicalCurve& a, const TropicalCurve& b) {
  return canonical_key(a) == canonical_key(b);
}

CircuitTree circuit_tree(const TropicalCurve& c) {
  CircuitTree t;
  t.circ = circuit(c);
  std::set<std::string> seen = t.circ.vertex_ids;
  std::deque<std::string> q(t.circ.vertex_ids.begin(), t.circ.vertex_ids.end());
  while (!q.empty()) {
    auto v = q.front();
    q.pop_front();
    std::vector<std::pair<std::string, std::string>> nbrs;  // (edge, other)
    for (const auto& e : c.edges) {
      if (t.circ.edge_ids.count(e.id)) continue;
      if (e.ends.first == v && !seen.count(e.ends.second)) nbrs.emplace_back(e.id, e.ends.second);
      else if (e.ends.second == v && !seen.count(e.ends.first)) nbrs.emplace_back(e.id, e.ends.first);
    }
    std::sort(nbrs.begin(), nbrs.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
    for (const auto& [eid, w] : nbrs) {
      if (seen.count(w)) continue;
      seen.insert(w);
      t.parent_edge[w] = eid;
      t.parent_vertex[w] = v;
      t.order.push_back(w);
      q.push_back(w);
    }
  }
  return t;
}

}  // namespace trop
