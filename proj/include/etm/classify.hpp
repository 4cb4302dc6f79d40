#pragma once

#include <string>
#include <vector>

#include "etm/flagmap.hpp"

namespace etm {

/// Explicit element list of the automorphism group (flag permutations
/// commuting with r0, r1, r2). The action of a connected map's
/// automorphism group on flags is always free, so the order divides the
/// flag count.
struct AutGroup {
  std::vector<FlagMap::Perm> elements;  // identity included
  std::size_t order() const { return elements.size(); }
};

AutGroup automorphisms(const FlagMap& m);

struct Transitivity {
  bool flags = false;
  bool edges = false;
  bool vertices = false;
  bool arcs = false;
  bool faces = false;
};

Transitivity transitivity(const FlagMap& m, const AutGroup& aut);

enum class Incidence { Vertices, Edges, Faces, Arcs, Petrie };

/// Sizes of the automorphism orbits on one incidence class, sorted.
std::vector<long> aut_orbit_sizes(const FlagMap& m, const AutGroup& aut, Incidence kind);

/// The quotient premap M / Aut(M): flags are automorphism orbits with the
/// induced involutions; orbits fixed by an induced r_i become boundary.
FlagMap quotient_premap(const FlagMap& m, const AutGroup& aut);

/// The 14 edge-transitive class labels, plus the non-edge-transitive
/// marker.
enum class EtClass {
  C1,
  C2,
  C2s,   // 2*
  C2P,
  C2ex,
  C2sex,  // 2*ex
  C2Pex,
  C3,
  C4,
  C4s,   // 4*
  C4P,
  C5,
  C5s,   // 5*
  C5P,
  NotEdgeTransitive,
};

std::string to_string(EtClass c);
EtClass et_class_from_string(const std::string& s);

struct CatalogEntry {
  EtClass label;
  FlagMap premap;
};

/// All connected one-edge flag systems up to isomorphism, generated by
/// exhaustive search over at most 4 flags; exactly 14, labeled by a
/// decision table on (flag count, vertex/face orbit count, boundary
/// structure).
const std::vector<CatalogEntry>& basic_premap_catalog();

EtClass et_class(const FlagMap& m);
EtClass et_class(const FlagMap& m, const AutGroup& aut);

// Row action of the dual and Petrie operations on class labels.
EtClass dual_class(EtClass c);
EtClass petrie_class(EtClass c);

}  // namespace etm
