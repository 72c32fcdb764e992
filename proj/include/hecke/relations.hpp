#pragma once

// Relation families on the Hasse quiver path algebra.

#include <map>
#include <string>
#include <vector>

#include "hecke/quiver.hpp"

namespace hecke {

enum class SystemKind { Dihedral, A3, Other };
/// Dihedral for rank 2; A3 only for the labelling 1-2-3 with m_{13} = 2.
SystemKind classify(const CoxeterSystem& sys);

struct Relation {
  /// "J1", "J2", "J3", "refined-braid", "T1".."T4"
  std::string family;
  /// Instance parameters, 1-based.
  std::string id;
  PathElement lhs;
  PathElement rhs;
  bool torsion = false;
  PathElement difference() const { return lhs - rhs; }
};

struct RelationSet {
  std::vector<Relation> relations;
  bool torsion_supported = false;
  std::string note;
  /// Instances generated per torsion template after orbit expansion.
  std::map<std::string, int> orbit_sizes;

  std::vector<const Relation*> family(const std::string& name) const;
};

/// χ_{I•} = χ_word + q Σ a_y χ_y for a maximal chain (∅ omitted).
PathElement chi_chain(const SystemPtr& sys, const std::vector<Subset>& chain);
/// Both sides of the refined braid relation for the rank-2 parabolic {s,t}
/// entered from {s}: the exit is {t} for even m and {s} for odd m.
Relation refined_braid(const CoxeterSystem& sys, int s, int t);

/// Quasi-idempotent, sandwich and extended braid relations for any finite
/// system; refined braid relations for every rank-2 parabolic; the A3
/// torsion families when the system is A3. With strict set, systems without
/// torsion families raise UnsupportedTorsion.
RelationSet relation_set(const SystemPtr& sys, bool strict = false);

/// The orbit of a relation under m-preserving relabellings of its support and τ.
std::vector<Relation> orbit(const CoxeterSystem& sys, const Relation& r, Subset support);

}  // namespace hecke
