#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "etm/construct.hpp"
#include "etm/oriented.hpp"

using namespace etm;

namespace {

// Independent face-tracing oracle for all-positive rotation systems: walk
// arcs with the next-corner rule (u,v) -> (v, successor of u at v).
int trace_faces(const OrientedMap& om) {
  REQUIRE(om.all_positive());
  std::map<std::pair<int, int>, std::pair<int, int>> next;
  for (int v = 0; v < om.n; ++v) {
    const auto& rot = om.rotation[v];
    for (size_t i = 0; i < rot.size(); ++i)
      next[{rot[i], v}] = {v, rot[(i + 1) % rot.size()]};
  }
  std::set<std::pair<int, int>> seen;
  int faces = 0;
  for (const auto& [arc, nxt] : next) {
    if (seen.count(arc)) continue;
    ++faces;
    auto cur = arc;
    do {
      seen.insert(cur);
      cur = next.at(cur);
    } while (cur != arc);
  }
  return faces;
}

OrientedMap k_complete(int n) {
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (u != v) rot[v].push_back(u);
  return OrientedMap::from_rotations(std::move(rot));
}

OrientedMap tetrahedron() {
  // Cayley rotations of GF(4): neighbors g^1, g^2, g^3 under xor
  std::vector<std::vector<int>> rot(4);
  for (int g = 0; g < 4; ++g) rot[g] = {g ^ 1, g ^ 2, g ^ 3};
  return OrientedMap::from_rotations(std::move(rot));
}

FlagMap free_edge_premap() {
  // one free edge: two flags swapped by r0, fixed by r1 and r2
  return FlagMap::from_involutions({1, 0}, {0, 1}, {0, 1});
}

std::uint32_t lcg(std::uint32_t& s) { return s = s * 1664525u + 1013904223u; }

}  // namespace

TEST_CASE("validate") {
  CHECK_FALSE(FlagMap::check({1, 0}, {0, 1}, {0, 1}).has_value());
  // r0 not an involution
  auto v = FlagMap::check({1, 2, 0}, {0, 1, 2}, {0, 1, 2});
  REQUIRE(v.has_value());
  CHECK(v->find("r0") != std::string::npos);
  CHECK(v->find("involution") != std::string::npos);
  // two disjoint components
  auto w = FlagMap::check({1, 0, 3, 2}, {1, 0, 3, 2}, {1, 0, 3, 2});
  REQUIRE(w.has_value());
  CHECK(*w == "not connected");
  CHECK_THROWS_AS(FlagMap::from_involutions({1, 0, 3, 2}, {1, 0, 3, 2}, {1, 0, 3, 2}), Error);
  // (r0 r2)^2 failure: r0 = (01), r2 = (12) makes r0r2 a 3-cycle
  auto x = FlagMap::check({1, 0, 2}, {0, 1, 2}, {0, 2, 1});
  REQUIRE(x.has_value());
  CHECK(x->find("(r0 r2)^2") != std::string::npos);
}

TEST_CASE("tetrahedron from rotation system") {
  FlagMap m = to_flag_map(tetrahedron());
  CHECK(m.size() == 24);
  auto c = m.counts();
  CHECK(c.V == 4);
  CHECK(c.E == 6);
  CHECK(c.F == 4);
  CHECK(c.petrie == 3);  // three square Petrie polygons
  CHECK(m.euler_characteristic() == 2);
  CHECK(m.is_orientable());
  CHECK_FALSE(m.has_boundary());
  CHECK(m.genus_or_crosscaps() == 0);
  CHECK(m.face_sizes() == std::vector<int>(4, 3));
  CHECK(m.vertex_degrees() == std::vector<int>(4, 3));
  CHECK(m.petrie_lengths() == std::vector<int>(3, 4));
  CHECK(trace_faces(tetrahedron()) == 4);
}

TEST_CASE("K3 embeddings") {
  OrientedMap k3 = k_complete(3);
  FlagMap m = to_flag_map(k3);
  CHECK(m.euler_characteristic() == 2);
  CHECK(m.counts().F == 2);
  CHECK(trace_faces(k3) == 2);

  k3.set_sign(1, 2, -1);
  FlagMap neg = to_flag_map(k3);
  auto c = neg.counts();
  CHECK(c.F == 1);
  CHECK(neg.euler_characteristic() == 1);
  CHECK_FALSE(neg.is_orientable());
  CHECK(neg.face_sizes() == std::vector<int>{6});  // one hexagonal face
  CHECK(neg.genus_or_crosscaps() == 1);            // projective plane
  // same map as the Petrie dual of the sphere triangle
  CHECK(neg.isomorphic(to_flag_map(k_complete(3)).petrie_dual()));
}

TEST_CASE("counts of a free-edge premap") {
  FlagMap m = free_edge_premap();
  auto c = m.counts();
  CHECK(c.V == 2);
  CHECK(c.E == 1);
  CHECK(c.F == 1);
  CHECK(c.petrie == 1);
  CHECK(m.has_boundary());
  CHECK_FALSE(m.is_orientable());
  CHECK_THROWS_AS(m.genus_or_crosscaps(), Error);
}

TEST_CASE("every edge of a closed simple map carries 4 flags") {
  for (const FlagMap& m : {to_flag_map(tetrahedron()), to_flag_map(k_complete(4)), to_flag_map(k_complete(5))}) {
    std::vector<std::uint32_t> elab;
    std::uint32_t ne = m.edge_labels(elab);
    std::vector<int> size(ne, 0);
    for (auto l : elab) ++size[l];
    CHECK(std::all_of(size.begin(), size.end(), [](int s) { return s == 4; }));
    CHECK(m.size() == 4 * ne);
  }
}

TEST_CASE("dual, petrie, omega") {
  FlagMap m = to_flag_map(tetrahedron());
  CHECK(m.dual().dual() == m);
  CHECK(m.petrie_dual().petrie_dual() == m);

  FlagMap p = m.petrie_dual();
  CHECK(p.euler_characteristic() == 1);
  CHECK_FALSE(p.is_orientable());
  CHECK(p.face_sizes() == std::vector<int>(3, 4));    // {4,3}_3
  CHECK(p.vertex_degrees() == std::vector<int>(4, 3));
  CHECK(p.petrie_lengths() == std::vector<int>(4, 3));

  // the 3-cycle D then P applied three times is the identity
  FlagMap q = m;
  for (int k = 0; k < 3; ++k) q = q.dual().petrie_dual();
  CHECK(q == m);
  CHECK(m.omega(OmegaElem::DualPetrie) == m.dual().petrie_dual());
  CHECK(m.omega(OmegaElem::PetrieDual) == m.petrie_dual().dual());
  // the two order-2 words agree: DPD = PDP
  CHECK(m.dual().petrie_dual().dual() == m.petrie_dual().dual().petrie_dual());

  // underlying graph preserved by Petrie
  CHECK(p.is_complete(4));
}

TEST_CASE("underlying graph and is_complete") {
  CHECK(to_flag_map(k_complete(5)).is_complete(5));
  CHECK_FALSE(to_flag_map(k_complete(5)).is_complete(4));
  SimpleGraph g = to_flag_map(k_complete(4)).underlying_graph();
  CHECK(g.n == 4);
  CHECK(g.edges.size() == 6);
  // a premap with a one-endpoint edge is not complete
  FlagMap bouquet = FlagMap::from_involutions({1, 0}, {1, 0}, {0, 1});  // N(2ex) shape
  CHECK_FALSE(bouquet.is_complete(2));
  CHECK(bouquet.underlying_graph().n == 1);
}

TEST_CASE("isomorphism and canonical forms") {
  FlagMap m52 = to_flag_map(biggs_map(5, 2));
  FlagMap m53 = to_flag_map(biggs_map(5, 3));
  CHECK(m52.isomorphic(m53));  // mirror pair, one flag system
  CHECK_FALSE(m52.isomorphic(m52.petrie_dual()));
  CHECK(m52.canonical_form() == m53.canonical_form());

  FlagMap m73 = to_flag_map(biggs_map(7, 3));
  CHECK(m73.canonical_form() == to_flag_map(biggs_map(7, 5)).canonical_form());
  CHECK(m73.canonical_form() != to_flag_map(james_map(7, 5, 5)).canonical_form());

  // relabeling by a random permutation preserves the class
  std::uint32_t seed = 12345;
  FlagMap::Perm perm(m73.size());
  for (std::uint32_t i = 0; i < m73.size(); ++i) perm[i] = i;
  for (std::uint32_t i = m73.size(); i > 1; --i) std::swap(perm[i - 1], perm[lcg(seed) % i]);
  FlagMap shuffled = m73.relabeled(perm);
  CHECK(shuffled.isomorphic(m73));
  CHECK(shuffled.canonical_form() == m73.canonical_form());
  CHECK(FlagMap::from_certificate(m73.canonical_form()).canonical_form() == m73.canonical_form());
}

TEST_CASE("switching a vertex preserves the flag system") {
  std::uint32_t seed = 99;
  for (int trial = 0; trial < 10; ++trial) {
    // random K5 rotation system with random signs
    std::vector<std::vector<int>> rot(5);
    for (int v = 0; v < 5; ++v) {
      for (int u = 0; u < 5; ++u)
        if (u != v) rot[v].push_back(u);
      for (size_t i = rot[v].size(); i > 1; --i) std::swap(rot[v][i - 1], rot[v][lcg(seed) % i]);
    }
    OrientedMap om = OrientedMap::from_rotations(rot);
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v)
        if (lcg(seed) & 1) om.set_sign(u, v, -1);

    OrientedMap sw = om;
    int v = static_cast<int>(lcg(seed) % 5);
    std::reverse(sw.rotation[v].begin(), sw.rotation[v].end());
    for (int u = 0; u < 5; ++u)
      if (u != v) sw.set_sign(u, v, -om.sig(u, v));
    CHECK(to_flag_map(om).isomorphic(to_flag_map(sw)));
  }
}

TEST_CASE("orientable iff all-positive representative") {
  std::uint32_t seed = 2024;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<int>> rot(5);
    for (int v = 0; v < 5; ++v) {
      for (int u = 0; u < 5; ++u)
        if (u != v) rot[v].push_back(u);
      for (size_t i = rot[v].size(); i > 1; --i) std::swap(rot[v][i - 1], rot[v][lcg(seed) % i]);
    }
    CHECK(to_flag_map(OrientedMap::from_rotations(rot)).is_orientable());
  }
}

TEST_CASE("mirror and oriented isomorphism") {
  CHECK_FALSE(oriented_isomorphic(biggs_map(5, 2), biggs_map(5, 3)));
  CHECK(oriented_isomorphic(mirror(biggs_map(5, 2)), biggs_map(5, 3)));
  CHECK(oriented_isomorphic(biggs_map(7, 3), biggs_map(7, 3)));

  OrientedMap k3 = k_complete(3);
  k3.set_sign(0, 1, -1);
  CHECK_THROWS_AS(mirror(k3), Error);
  CHECK_THROWS_AS(oriented_isomorphic(k3, k3), Error);
}

TEST_CASE("rotation validation") {
  // rotation not a cyclic order of the neighbor set
  std::vector<std::vector<int>> rot = {{1, 2}, {0, 2}, {0, 0}};
  OrientedMap om;
  om.n = 3;
  om.rotation = rot;
  om.sign.assign(9, 0);
  om.set_sign(0, 1, 1);
  om.set_sign(0, 2, 1);
  om.set_sign(1, 2, 1);
  CHECK_THROWS_AS(om.validate(), Error);
}
