#pragma once

#include <utility>
#include <vector>

#include "etm/field.hpp"
#include "etm/oriented.hpp"

namespace etm {

/// Cayley map for the additive group of fs: vertices are the field
/// elements, vertex g sees g + x_0, g + x_1, ... in that cyclic order.
/// ordering must be a permutation of the n-1 nonzero elements.
OrientedMap cayley_map(const Field& fs, const std::vector<Fel>& ordering);

/// Cayley map with the cyclic order 1, c, c^2, ..., c^{n-2} for a
/// primitive c; defined exactly when n is a prime power.
OrientedMap biggs_map(long n, Fel c);

/// Cayley map with the interleaved order 1, c^j, c^2, c^{j+2}, ...,
/// c^{n-3}, c^{j+n-3}; needs n = p^e > 3 with n = 3 mod 4, c primitive,
/// and odd j != 1 in Z_{n-1}.
OrientedMap james_map(long n, Fel c, long j);

/// One Biggs map per Galois orbit of primitive elements (smallest member
/// as representative), pairwise non-isomorphic as oriented maps; sorted
/// by flag-system certificate.
std::vector<OrientedMap> biggs_census(long n);

/// One James map per oriented-isomorphism class: c up to Galois, j up to
/// {j, 2-j}. Every (c, j) pair is generated and the class grouping is
/// re-checked with oriented_isomorphic; a mismatch throws.
std::vector<OrientedMap> james_census(long n);

struct BiggsRep {
  Fel c = 0;
  OrientedMap map;
};
struct JamesRep {
  Fel c = 0;
  long j = 0;
  OrientedMap map;
};
std::vector<BiggsRep> biggs_census_detail(long n);
std::vector<JamesRep> james_census_detail(long n);

// Fixed spherical rotation systems; sources for the sporadic K6 maps.
OrientedMap hexagon_map();      // C6, two hexagonal faces
OrientedMap cube_map();
OrientedMap icosahedron_map();

/// Quotient by a group of automorphisms acting freely on flags. Flags of
/// the quotient are the orbits; throws NotFree if a non-identity element
/// fixes a flag.
FlagMap quotient_by_free_automorphisms(const FlagMap& m, const std::vector<FlagMap::Perm>& subgroup);

/// The exceptional regular K6 pair: the antipodal icosahedron quotient
/// (type {3,5}, chi 1) and its Petrie dual (type {5,5}, chi -3).
std::pair<FlagMap, FlagMap> k6_regular_pair();

}  // namespace etm
