#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trop/exact.hpp"

namespace trop {

/// Integer linear form on the edge-length coordinates of a fixed ambient orthant.
struct Functional {
  IntVec coeffs;

  static Functional zero(size_t dim) { return Functional{IntVec(dim, 0)}; }
  static Functional unit(size_t dim, size_t i) {
    IntVec v(dim, 0);
    v[i] = 1;
    return Functional{v};
  }
  size_t dim() const { return coeffs.size(); }
  Int eval(const IntVec& point) const { return dot(coeffs, point); }
  bool is_zero() const { return trop::is_zero(coeffs); }

  Functional operator+(const Functional& o) const { return {add(coeffs, o.coeffs)}; }
  Functional operator-(const Functional& o) const { return {sub(coeffs, o.coeffs)}; }
  bool operator==(const Functional& o) const { return coeffs == o.coeffs; }
  bool operator<(const Functional& o) const { return coeffs < o.coeffs; }
};

enum class SignOnCone {
  zero,      // identically zero on the cone
  positive,  // >= 0 everywhere, > 0 on the relative interior
  negative,
  mixed,  // changes sign: not comparable on the cone
};

/// Rational polyhedral cone inside the nonnegative orthant, stored by
/// inequalities (each Functional >= 0). Coordinate nonnegativity is always
/// implicit. Extreme rays are computed once and cached.
class Cone {
 public:
  explicit Cone(size_t dim);
  Cone(size_t dim, std::vector<Functional> inequalities);

  static Cone orthant(size_t dim) { return Cone(dim); }

  size_t ambient_dim() const { return dim_; }

  /// Normalized inequality list (primitive, deduplicated, sorted); includes
  /// the coordinate inequalities.
  const std::vector<Functional>& inequalities() const { return ineqs_; }

  /// Cone with one more inequality.
  Cone with(const Functional& f) const;

  /// Primitive extreme rays, lexicographically sorted. Canonical: two cones
  /// are equal iff their ray lists are equal.
  const std::vector<IntVec>& rays() const;

  /// Dimension of the linear span of the cone.
  int dim() const;

  bool is_empty() const { return rays().empty() && dim_ > 0; }

  /// Deterministic lattice point in the relative interior (sum of extreme rays).
  IntVec interior_sample() const;

  SignOnCone sign_of(const Functional& f) const;

  /// True iff f >= 0 everywhere on the cone.
  bool implies(const Functional& f) const { auto s = sign_of(f); return s != SignOnCone::mixed && s != SignOnCone::negative; }

  bool contains(const IntVec& point) const;
  bool contains_cone(const Cone& other) const;
  bool operator==(const Cone& other) const;

  /// Irredundant description: facet inequalities plus the implicit-equality
  /// pairs for lower-dimensional cones.
  std::vector<Functional> irredundant_inequalities() const;

 private:
  size_t dim_;
  std::vector<Functional> ineqs_;
  mutable std::optional<std::vector<IntVec>> rays_;
  void normalize();
};

/// Subdivision of a parent cone into maximal cells with opaque labels.
struct Fan {
  Cone parent;
  std::vector<Cone> cells;

  explicit Fan(Cone p) : parent(std::move(p)) {}
};

/// Closure-of-sign-chamber subdivision of `cone` along the given functionals.
/// Functionals of constant sign on a cell never split it.
Fan subdivide(const Cone& cone, const std::vector<Functional>& functionals);

/// Min-chamber subdivision: one cell per functional that can be the pointwise
/// minimum, i.e. cone ∩ {f_j <= f_i for all i}. Lower-dimensional chambers are
/// dropped; duplicates merged.
std::vector<Cone> min_chambers(const Cone& cone, const std::vector<Functional>& fs);

/// Extreme rays of a cone given by inequalities (double description).
std::vector<IntVec> extreme_rays(const Cone& cone);

/// Dual monoid free <=> cone simplicial and its ray matrix extends to a
/// lattice basis (all Smith invariant factors 1).
bool is_free(const Cone& cone);

bool fans_equal(const Fan& a, const Fan& b);

/// Every maximal cone of `fine` is contained in some maximal cone of `coarse`.
bool refines(const Fan& fine, const Fan& coarse);

/// Deterministic integer sample points inside the parent cone (LCG over ray
/// combinations), used for the union-coverage checks.
std::vector<IntVec> deterministic_samples(const Cone& parent, int count);

/// Fan invariants: cells lie in the parent, pairwise intersections are faces
/// of both (exact), relative interiors are disjoint (exact), and the union
/// covers the parent (checked on `samples` deterministic points).
bool fan_invariants_hold(const Fan& f, int samples = 1000, std::string* why = nullptr);

/// Same parents and both cover the same deterministic sample set.
bool supports_equal(const Fan& a, const Fan& b, int samples = 1000);

}  // namespace trop
