#pragma once

#include <cstdint>
#include <vector>

#include "etm/flagmap.hpp"

namespace etm {

/// Rotation system plus edge signature on a simple connected graph; with
/// signs this encodes any closed-surface embedding. Signatures are +1/-1
/// per edge; switching a vertex (negate its edge signs, reverse its
/// rotation) does not change the embedded map.
struct OrientedMap {
  int n = 0;
  std::vector<std::vector<int>> rotation;  // rotation[v]: cyclic neighbor order
  std::vector<std::int8_t> sign;           // n*n, symmetric; +1/-1 edge, 0 non-edge

  int sig(int u, int v) const { return sign[static_cast<size_t>(u) * n + v]; }
  bool adjacent(int u, int v) const { return sig(u, v) != 0; }
  void set_sign(int u, int v, int s) {
    sign[static_cast<size_t>(u) * n + v] = static_cast<std::int8_t>(s);
    sign[static_cast<size_t>(v) * n + u] = static_cast<std::int8_t>(s);
  }

  /// All-positive map from rotations alone (adjacency implied).
  static OrientedMap from_rotations(std::vector<std::vector<int>> rot);

  std::size_t edge_count() const;
  bool all_positive() const;

  /// Throws InvalidRotation unless the graph is simple, connected, every
  /// degree >= 1, and each rotation is a cyclic order of exactly the
  /// neighbor set.
  void validate() const;
};

/// Blade construction: flags are (arc, side) pairs, 4E of them, with
///   r0(u,v,s) = (v,u, -sig(uv)*s),  r1(u,v,s) = (u, rot_u^s(v), -s),
///   r2(u,v,s) = (u,v,-s).
/// The result is closed and passes validation.
FlagMap to_flag_map(const OrientedMap& om);

OrientedMap mirror(const OrientedMap& om);  // reverses every rotation

/// Rotation-preserving isomorphism search (no reflections). Both maps must
/// be orientable representatives (all signs +1); throws
/// NotOrientableRepresentation otherwise.
bool oriented_isomorphic(const OrientedMap& a, const OrientedMap& b);

}  // namespace etm
