#pragma once

#include <set>
#include <string>
#include <vector>

#include "trop/alignment.hpp"
#include "trop/cone.hpp"
#include "trop/curve.hpp"

namespace trop {

/// Genus-1, half-edge-closed, connected subgraph marked for contraction
/// (or empty). Determined by its vertex set.
struct Precontractible {
  std::set<std::string> vertex_ids;
  std::set<std::string> edge_ids;  // induced
};

struct KJSignature {
  int k = 0;           // unmarked attaching half-edges
  std::set<int> legs;  // marking labels inside (J)

  bool operator==(const KJSignature& o) const { return k == o.k && legs == o.legs; }
  bool operator<(const KJSignature& o) const {
    return k != o.k ? k < o.k : legs < o.legs;
  }
};

enum class KJOrder { less, greater, equal, incomparable };

/// All precontractible subgraphs: empty, plus every connected circuit-containing
/// vertex-closed subgraph. Deterministic order by size then vertex ids.
std::vector<Precontractible> precontractible_subgraphs(const TropicalCurve& c);

/// Contract all internal edges: k = attaching half-edges to the complement,
/// J = marking labels inside. Errors on the empty subgraph.
KJSignature kj_signature(const TropicalCurve& c, const Precontractible& p);

/// (k',J') < (k,J) iff k' <= k, J' subset J, and the pairs differ.
KJOrder kj_compare(const KJSignature& a, const KJSignature& b);

/// Signatures of all nonempty precontractible subgraphs, deduplicated.
std::vector<KJSignature> realized_signatures(const TropicalCurve& c);

/// A default linear extension of the partial order on the realized signatures.
std::vector<KJSignature> default_signature_order(const TropicalCurve& c);

/// The iterated-blowup subdivision: process signatures in the given order; a
/// cell whose radius data realizes a circle whose interior contracts to the
/// current (k,J) is refined so the circle's peripheral radii acquire a
/// minimum. Errors if the order is not a linear extension covering every
/// realized signature.
CentralFan vz_fan(const TropicalCurve& c, const std::vector<KJSignature>& total_order);

struct EquivalenceReport {
  std::vector<std::vector<KJSignature>> orders;
  std::vector<CentralFan> vz_fans;  // parallel to orders
  CentralFan central;
  bool all_equal = false;
  int cell_count = 0;
};

/// vz_fan under several linear extensions vs central_fan; the headline check.
EquivalenceReport vz_equivalence(const TropicalCurve& c);

}  // namespace trop
