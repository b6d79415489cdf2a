#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trop/cone.hpp"
#include "trop/curve.hpp"
#include "trop/pl.hpp"

namespace trop {

/// Total preorder of the non-circuit vertices by radius, realized on a cone.
/// Tiers are ordered from the circuit outward; vertices within a tier have
/// equal radii on the cone (maximal cells have singleton tiers).
struct RadialAlignment {
  std::vector<std::vector<std::string>> tiers;
  Cone cone;
};

struct LabeledFan {
  Fan fan;
  std::vector<RadialAlignment> labels;  // parallel to fan.cells
};

/// Subdivide the deformation cone along all hyperplanes lambda(v) = lambda(w);
/// each maximal cell carries the strict order of radii on its interior.
LabeledFan radial_fan(const TropicalCurve& c);

struct MinimalMonoid {
  std::vector<Functional> generators;
  bool free = false;
};

/// Generators: circuit edge lengths plus successive radius differences in the
/// cell's order (lambda(v_0) = 0). Freeness via the exact lattice test.
MinimalMonoid minimal_monoid(const TropicalCurve& c, const RadialAlignment& cell);

/// Central alignment: distinguished radius delta = lambda(v_star) (or zero),
/// totally ordered interior, unordered exterior beyond lambda(w) >= delta.
struct CentralAlignment {
  std::optional<std::string> v_star;              // absent only for the zero radius
  std::vector<std::vector<std::string>> interior  // tiers, circuit outward
      {};
  Cone cone;
};

struct CentralFan {
  Fan fan;
  std::vector<CentralAlignment> labels;
};

/// All stable central alignments of a stable curve, one maximal cone each;
/// the cones tile the deformation cone.
std::vector<CentralAlignment> central_alignments(const TropicalCurve& c);

CentralFan central_fan(const TropicalCurve& c);

/// Radius tiers of an arbitrary sub-cone of the deformation cone: non-circuit
/// vertices grouped by equal radii and sorted, when the cone's data determines
/// the order; nullopt as soon as two radii are incomparable on the cone.
std::optional<std::vector<std::vector<std::string>>> radius_tiers(const TropicalCurve& c,
                                                                  const Cone& cone);

}  // namespace trop
