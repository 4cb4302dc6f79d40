#include "etm/oriented.hpp"

#include <algorithm>

namespace etm {

OrientedMap OrientedMap::from_rotations(std::vector<std::vector<int>> rot) {
  OrientedMap om;
  om.n = static_cast<int>(rot.size());
  om.rotation = std::move(rot);
  om.sign.assign(static_cast<size_t>(om.n) * om.n, 0);
  for (int v = 0; v < om.n; ++v)
    for (int u : om.rotation[v]) om.set_sign(v, u, 1);
  om.validate();
  return om;
}

std::size_t OrientedMap::edge_count() const {
  std::size_t deg2 = 0;
  for (const auto& r : rotation) deg2 += r.size();
  return deg2 / 2;
}

bool OrientedMap::all_positive() const {
  for (std::int8_t s : sign)
    if (s < 0) return false;
  return true;
}

void OrientedMap::validate() const {
  if (n <= 0 || rotation.size() != static_cast<size_t>(n) ||
      sign.size() != static_cast<size_t>(n) * n)
    throw Error(Err::InvalidRotation, "inconsistent sizes");
  for (int v = 0; v < n; ++v) {
    if (rotation[v].empty())
      throw Error(Err::InvalidRotation, "vertex " + std::to_string(v) + " has degree 0");
    std::vector<int> nb;
    for (int u = 0; u < n; ++u) {
      if (sig(v, u) != sig(u, v)) throw Error(Err::InvalidRotation, "signature not symmetric");
      if (sig(v, u) != 0) {
        if (u == v) throw Error(Err::InvalidRotation, "loop at vertex " + std::to_string(v));
        nb.push_back(u);
      }
    }
    std::vector<int> rot_sorted(rotation[v]);
    std::sort(rot_sorted.begin(), rot_sorted.end());
    if (rot_sorted != nb)
      throw Error(Err::InvalidRotation,
                  "rotation at vertex " + std::to_string(v) + " is not a cyclic order of its neighbors");
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : rotation[v])
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
  }
  if (reached != n) throw Error(Err::InvalidRotation, "graph not connected");
}

FlagMap to_flag_map(const OrientedMap& om) {
  om.validate();
  const int n = om.n;
  // Dense arc ids: (u,v) -> u*(n-1) + (v - (v>u)).
  auto arc_id = [n](int u, int v) { return u * (n - 1) + (v > u ? v - 1 : v); };
  const std::uint32_t nflags = static_cast<std::uint32_t>(4 * om.edge_count());
  std::uint32_t total_arcs = static_cast<std::uint32_t>(n) * (n - 1);

  // next/prev neighbor in each rotation
  std::vector<int> nxt(total_arcs, -1), prv(total_arcs, -1);
  for (int v = 0; v < n; ++v) {
    const auto& rot = om.rotation[v];
    const int d = static_cast<int>(rot.size());
    for (int i = 0; i < d; ++i) {
      nxt[arc_id(v, rot[i])] = rot[(i + 1) % d];
      prv[arc_id(v, rot[i])] = rot[(i + d - 1) % d];
    }
  }

  // Compact flag ids: present arcs in arc_id order, two sides each.
  std::vector<std::int32_t> flag_of(2 * total_arcs, -1);
  std::vector<std::pair<int, int>> arc_of;
  arc_of.reserve(nflags / 2);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || !om.adjacent(u, v)) continue;
      std::uint32_t a = arc_id(u, v);
      flag_of[2 * a] = static_cast<std::int32_t>(2 * arc_of.size());
      flag_of[2 * a + 1] = flag_of[2 * a] + 1;
      arc_of.emplace_back(u, v);
    }

  FlagMap::Perm r0(nflags), r1(nflags), r2(nflags);
  for (std::uint32_t f = 0; f < nflags; ++f) {
    auto [u, v] = arc_of[f / 2];
    int side = static_cast<int>(f & 1);  // 0 => s=+1, 1 => s=-1
    int side0 = (om.sig(u, v) > 0) ? 1 - side : side;
    r0[f] = static_cast<std::uint32_t>(flag_of[2 * arc_id(v, u) + side0]);
    int w = (side == 0) ? nxt[arc_id(u, v)] : prv[arc_id(u, v)];
    r1[f] = static_cast<std::uint32_t>(flag_of[2 * arc_id(u, w) + (1 - side)]);
    r2[f] = static_cast<std::uint32_t>(flag_of[2 * arc_id(u, v) + (1 - side)]);
  }
  return FlagMap::from_involutions(std::move(r0), std::move(r1), std::move(r2));
}

OrientedMap mirror(const OrientedMap& om) {
  if (!om.all_positive())
    throw Error(Err::NotOrientableRepresentation, "mirror requires all-positive signature");
  OrientedMap out = om;
  for (auto& rot : out.rotation) std::reverse(rot.begin(), rot.end());
  return out;
}

namespace {

// Propagate a rotation-preserving vertex bijection from the seed
// f(0) = w0, f(rotation[0][0]) = w1.
bool try_oriented_iso(const OrientedMap& a, const OrientedMap& b, int w0, int w1) {
  const int n = a.n;
  std::vector<int> img(n, -1);
  img[0] = w0;
  // anchor[v]: a neighbor of v whose image is already decided
  std::vector<int> anchor(n, -1);
  anchor[0] = a.rotation[0][0];
  img[anchor[0]] = w1;
  std::vector<int> queue = {0};
  std::vector<bool> expanded(n, false);
  expanded[0] = true;

  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    const auto& rot = a.rotation[v];
    const int d = static_cast<int>(rot.size());
    int ai = static_cast<int>(std::find(rot.begin(), rot.end(), anchor[v]) - rot.begin());
    const auto& rotb = b.rotation[img[v]];
    if (rotb.size() != rot.size()) return false;
    int bi = static_cast<int>(std::find(rotb.begin(), rotb.end(), img[anchor[v]]) - rotb.begin());
    if (bi == static_cast<int>(rotb.size())) return false;
    for (int k = 0; k < d; ++k) {
      int u = rot[(ai + k) % d];
      int target = rotb[(bi + k) % d];
      if (img[u] == -1) {
        img[u] = target;
      } else if (img[u] != target) {
        return false;
      }
      if (!expanded[u]) {
        expanded[u] = true;
        anchor[u] = v;
        queue.push_back(u);
      }
    }
  }
  if (queue.size() != static_cast<size_t>(n)) return false;
  std::vector<bool> used(n, false);
  for (int v = 0; v < n; ++v) {
    if (img[v] == -1 || used[img[v]]) return false;
    used[img[v]] = true;
  }
  // adjacency must be preserved exactly (simple graphs, so this suffices)
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if ((a.sig(v, u) != 0) != (b.sig(img[v], img[u]) != 0)) return false;
  return true;
}

}  // namespace

bool oriented_isomorphic(const OrientedMap& a, const OrientedMap& b) {
  if (!a.all_positive() || !b.all_positive())
    throw Error(Err::NotOrientableRepresentation, "oriented comparison requires all-positive signatures");
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  for (int w0 = 0; w0 < b.n; ++w0) {
    if (b.rotation[w0].size() != a.rotation[0].size()) continue;
    for (int w1 : b.rotation[w0])
      if (try_oriented_iso(a, b, w0, w1)) return true;
  }
  return false;
}

}  // namespace etm
