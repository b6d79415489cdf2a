#include "trop/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "exact_impl.hpp"

namespace trop {

Cone::Cone(size_t dim) : dim_(dim) {
  for (size_t i = 0; i < dim; ++i) ineqs_.push_back(Functional::unit(dim, i));
  normalize();
}

Cone::Cone(size_t dim, std::vector<Functional> inequalities) : dim_(dim), ineqs_(std::move(inequalities)) {
  for (size_t i = 0; i < dim; ++i) ineqs_.push_back(Functional::unit(dim, i));
  normalize();
}

void Cone::normalize() {
  for (auto& f : ineqs_) f.coeffs = primitive(f.coeffs);
  std::sort(ineqs_.begin(), ineqs_.end());
  ineqs_.erase(std::unique(ineqs_.begin(), ineqs_.end()), ineqs_.end());
  ineqs_.erase(std::remove_if(ineqs_.begin(), ineqs_.end(),
                              [](const Functional& f) { return f.is_zero(); }),
               ineqs_.end());
}

Cone Cone::with(const Functional& f) const {
  std::vector<Functional> in = ineqs_;
  in.push_back(f);
  Cone c(dim_, std::move(in));
  return c;
}

namespace {

std::set<size_t> active_set(const IntVec& r, const std::vector<Functional>& constraints) {
  std::set<size_t> act;
  for (size_t i = 0; i < constraints.size(); ++i)
    if (constraints[i].eval(r) == 0) act.insert(i);
  return act;
}

// Drop non-extreme rays: r is extreme iff no other ray's active set strictly
// contains r's. Exact for pointed cones (all cones here sit in the orthant).
std::vector<IntVec> filter_extreme(std::vector<IntVec> rays,
                                   const std::vector<Functional>& constraints) {
  std::vector<std::set<size_t>> act;
  act.reserve(rays.size());
  for (const auto& r : rays) act.push_back(active_set(r, constraints));
  std::vector<IntVec> out;
  for (size_t i = 0; i < rays.size(); ++i) {
    bool extreme = true;
    for (size_t j = 0; j < rays.size(); ++j) {
      if (i == j) continue;
      if (act[j] == act[i]) {
        if (j < i) {
          extreme = false;  // duplicate support: keep the first
          break;
        }
        continue;
      }
      if (std::includes(act[j].begin(), act[j].end(), act[i].begin(), act[i].end())) {
        extreme = false;
        break;
      }
    }
    if (extreme) out.push_back(rays[i]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Double description, cutting the orthant by the non-coordinate inequalities.
std::vector<IntVec> double_description(size_t dim, const std::vector<Functional>& ineqs) {
  if (dim == 0) return {};
  std::vector<IntVec> rays;
  for (size_t i = 0; i < dim; ++i) {
    IntVec e(dim, 0);
    e[i] = 1;
    rays.push_back(e);
  }
  std::vector<Functional> seen;  // constraints applied so far (incl. coordinates)
  for (size_t i = 0; i < dim; ++i) seen.push_back(Functional::unit(dim, i));

  for (const auto& f : ineqs) {
    bool coord = false;
    for (size_t i = 0; i < dim; ++i)
      if (f == Functional::unit(dim, i)) coord = true;
    if (coord) continue;

    std::vector<IntVec> pos, neg, zero;
    for (auto& r : rays) {
      Int v = f.eval(r);
      if (v > 0) pos.push_back(r);
      else if (v < 0) neg.push_back(r);
      else zero.push_back(r);
    }
    seen.push_back(f);
    if (neg.empty()) continue;

    std::vector<IntVec> next = zero;
    for (const auto& r : pos) next.push_back(r);

    // Adjacency wrt the constraints before this cut: r+ and r- are adjacent
    // iff no third extreme ray is active on every constraint active at both.
    std::vector<Functional> before(seen.begin(), seen.end() - 1);
    for (const auto& rp : pos)
      for (const auto& rn : neg) {
        std::set<size_t> common;
        auto ap = active_set(rp, before), an = active_set(rn, before);
        std::set_intersection(ap.begin(), ap.end(), an.begin(), an.end(),
                              std::inserter(common, common.begin()));
        bool adjacent = true;
        for (const auto& r3 : rays) {
          if (r3 == rp || r3 == rn) continue;
          auto a3 = active_set(r3, before);
          if (std::includes(a3.begin(), a3.end(), common.begin(), common.end())) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        IntVec nr = sub(scale(f.eval(rp), rn), scale(f.eval(rn), rp));
        nr = primitive(nr);
        if (!is_zero(nr)) next.push_back(nr);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rays = filter_extreme(std::move(next), seen);
    if (rays.empty()) break;
  }
  return filter_extreme(std::move(rays), seen);
}

}  // namespace

const std::vector<IntVec>& Cone::rays() const {
  if (!rays_) rays_ = double_description(dim_, ineqs_);
  return *rays_;
}

int Cone::dim() const {
  std::vector<IntVec> rows;
  for (const auto& r : rays()) rows.push_back(r);
  return rank_of_impl(std::move(rows));
}

IntVec Cone::interior_sample() const {
  const auto& rs = rays();
  if (rs.empty()) {
    if (dim_ == 0) return IntVec{};
    throw std::domain_error("interior_sample: empty cone");
  }
  IntVec p(dim_, 0);
  for (const auto& r : rs) p = add(p, r);
  return p;
}

SignOnCone Cone::sign_of(const Functional& f) const {
  bool pos = false, neg = false;
  for (const auto& r : rays()) {
    Int v = f.eval(r);
    if (v > 0) pos = true;
    if (v < 0) neg = true;
  }
  if (pos && neg) return SignOnCone::mixed;
  if (pos) return SignOnCone::positive;
  if (neg) return SignOnCone::negative;
  return SignOnCone::zero;
}

bool Cone::contains(const IntVec& point) const {
  for (const auto& f : ineqs_)
    if (f.eval(point) < 0) return false;
  return true;
}

bool Cone::contains_cone(const Cone& other) const {
  for (const auto& r : other.rays())
    if (!contains(r)) return false;
  return true;
}

bool Cone::operator==(const Cone& other) const {
  return dim_ == other.dim_ && rays() == other.rays();
}

std::vector<Functional> Cone::irredundant_inequalities() const {
  const auto& rs = rays();
  int d = dim();
  std::vector<Functional> out;
  for (const auto& f : ineqs_) {
    if (sign_of(f) == SignOnCone::zero) {
      out.push_back(f);  // implicit equality: keep both signs
      continue;
    }
    std::vector<IntVec> active;
    for (const auto& r : rs)
      if (f.eval(r) == 0) active.push_back(r);
    if (rank_of_impl(active) == d - 1) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Fan subdivide(const Cone& cone, const std::vector<Functional>& functionals) {
  Fan fan(cone);
  int parent_dim = cone.dim();
  std::vector<Cone> cells{cone};
  for (const auto& f : functionals) {
    if (f.is_zero()) continue;
    std::vector<Cone> next;
    for (const auto& cell : cells) {
      SignOnCone s = cell.sign_of(f);
      if (s != SignOnCone::mixed) {
        next.push_back(cell);
        continue;
      }
      Functional neg{scale(-1, f.coeffs)};
      Cone hi = cell.with(f), lo = cell.with(neg);
      if (hi.dim() == parent_dim) next.push_back(hi);
      if (lo.dim() == parent_dim) next.push_back(lo);
    }
    cells = std::move(next);
  }
  // Dedupe (identical chambers can arise when walls coincide on a cell).
  std::vector<Cone> unique_cells;
  for (auto& c : cells) {
    bool dup = false;
    for (const auto& u : unique_cells)
      if (u == c) {
        dup = true;
        break;
      }
    if (!dup) unique_cells.push_back(std::move(c));
  }
  fan.cells = std::move(unique_cells);
  return fan;
}

std::vector<Cone> min_chambers(const Cone& cone, const std::vector<Functional>& fs) {
  std::vector<Cone> out;
  int parent_dim = cone.dim();
  for (size_t j = 0; j < fs.size(); ++j) {
    Cone cell = cone;
    for (size_t i = 0; i < fs.size(); ++i) {
      if (i == j) continue;
      cell = cell.with(fs[i] - fs[j]);
    }
    if (cell.dim() != parent_dim) continue;
    bool dup = false;
    for (const auto& u : out)
      if (u == cell) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(cell));
  }
  return out;
}

std::vector<IntVec> extreme_rays(const Cone& cone) { return cone.rays(); }

bool is_free(const Cone& cone) {
  const auto& rs = cone.rays();
  int d = cone.dim();
  if (static_cast<int>(rs.size()) != d) return false;
  if (d == 0) return true;
  std::vector<IntVec> rows(rs.begin(), rs.end());
  auto invs = smith_invariants(std::move(rows));
  for (const auto& x : invs)
    if (x != 1) return false;
  return static_cast<int>(invs.size()) == d;
}

bool fans_equal(const Fan& a, const Fan& b) {
  if (!(a.parent == b.parent)) return false;
  if (a.cells.size() != b.cells.size()) return false;
  std::vector<std::vector<IntVec>> ra, rb;
  for (const auto& c : a.cells) ra.push_back(c.rays());
  for (const auto& c : b.cells) rb.push_back(c.rays());
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  return ra == rb;
}

bool refines(const Fan& fine, const Fan& coarse) {
  if (!(fine.parent == coarse.parent)) return false;
  for (const auto& c : fine.cells) {
    bool inside = false;
    for (const auto& d : coarse.cells)
      if (d.contains_cone(c)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

std::vector<IntVec> deterministic_samples(const Cone& parent, int count) {
  const auto& rs = parent.rays();
  std::vector<IntVec> out;
  if (rs.empty()) return out;
  unsigned long long state = 0x243F6A8885A308D3ull;  // fixed seed
  auto next = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return (state >> 33) % 7 + 1;  // 1..7
  };
  for (int i = 0; i < count; ++i) {
    IntVec p(parent.ambient_dim(), 0);
    for (const auto& r : rs) p = add(p, scale(Int(next()), r));
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// F is a face of C iff F equals C cut by the C-inequalities vanishing on F.
bool is_face_of(const Cone& face, const Cone& cone) {
  std::vector<Functional> cut = cone.inequalities();
  Cone candidate = cone;
  for (const auto& f : cone.inequalities()) {
    bool vanishes = true;
    for (const auto& r : face.rays())
      if (f.eval(r) != 0) {
        vanishes = false;
        break;
      }
    if (vanishes) candidate = candidate.with(Functional{scale(-1, f.coeffs)});
  }
  return candidate == face;
}

}  // namespace

bool fan_invariants_hold(const Fan& f, int samples, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (const auto& c : f.cells)
    if (!f.parent.contains_cone(c)) return fail("cell outside parent");
  // Pairwise: intersections are faces of both; interiors disjoint.
  for (size_t i = 0; i < f.cells.size(); ++i)
    for (size_t j = i + 1; j < f.cells.size(); ++j) {
      std::vector<Functional> in = f.cells[i].inequalities();
      for (const auto& g : f.cells[j].inequalities()) in.push_back(g);
      Cone meet(f.parent.ambient_dim(), in);
      if (meet.dim() == f.cells[i].dim() && meet == f.cells[i])
        return fail("duplicate cell");
      if (meet.dim() >= f.cells[i].dim() || meet.dim() >= f.cells[j].dim())
        return fail("cell interiors overlap");
      if (!meet.rays().empty()) {
        if (!is_face_of(meet, f.cells[i]) || !is_face_of(meet, f.cells[j]))
          return fail("intersection is not a common face");
      }
    }
  // Union covers the parent: deterministic interior samples of the parent
  // must land in at least one cell; interior points of cells in exactly one.
  for (const auto& p : deterministic_samples(f.parent, samples)) {
    int hits = 0;
    for (const auto& c : f.cells)
      if (c.contains(p)) ++hits;
    if (hits < 1) return fail("sample point not covered by any cell");
  }
  for (const auto& c : f.cells) {
    IntVec p = c.interior_sample();
    int strict = 0;
    for (const auto& d : f.cells) {
      if (!d.contains(p)) continue;
      bool interior = true;
      for (const auto& g : d.irredundant_inequalities())
        if (d.sign_of(g) != SignOnCone::zero && g.eval(p) == 0) interior = false;
      if (interior) ++strict;
    }
    if (strict != 1) return fail("cell interior sample covered by != 1 cell interior");
  }
  return true;
}

bool supports_equal(const Fan& a, const Fan& b, int samples) {
  if (!(a.parent == b.parent)) return false;
  auto covered = [](const Fan& f, const IntVec& p) {
    for (const auto& c : f.cells)
      if (c.contains(p)) return true;
    return false;
  };
  for (const auto& p : deterministic_samples(a.parent, samples))
    if (covered(a, p) != covered(b, p)) return false;
  return true;
}

}  // namespace trop
