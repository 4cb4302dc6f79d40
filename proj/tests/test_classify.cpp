#include <doctest.h>

#include <algorithm>
#include <set>

#include "etm/construct.hpp"
#include "etm/report.hpp"

using namespace etm;

namespace {

FlagMap tetra() { return to_flag_map(cayley_map(Field(2, 2), {1, 2, 3})); }

}  // namespace

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(tetra()).order() == 24);
  CHECK(automorphisms(to_flag_map(biggs_map(5, 2))).order() == 20);
  auto [a, b] = k6_regular_pair();
  CHECK(automorphisms(a).order() == 60);
  CHECK(automorphisms(b).order() == 60);
}

TEST_CASE("automorphisms commute with the involutions and act freely") {
  for (const FlagMap& m : {to_flag_map(biggs_map(5, 2)), to_flag_map(james_map(7, 5, 5)), tetra()}) {
    AutGroup aut = automorphisms(m);
    CHECK(m.size() % aut.order() == 0);
    for (const auto& g : aut.elements) {
      bool identity = true;
      for (std::uint32_t f = 0; f < m.size(); ++f) {
        for (int i = 0; i < 3; ++i) CHECK(g[m.image(i, f)] == m.image(i, g[f]));
        identity = identity && g[f] == f;
      }
      if (!identity)
        for (std::uint32_t f = 0; f < m.size(); ++f) CHECK(g[f] != f);
    }
  }
}

TEST_CASE("transitivity flags") {
  {
    FlagMap m = to_flag_map(james_map(7, 5, 5));
    AutGroup aut = automorphisms(m);
    Transitivity t = transitivity(m, aut);
    CHECK(t.edges);
    CHECK(t.vertices);
    CHECK_FALSE(t.arcs);
    CHECK_FALSE(t.faces);
    CHECK_FALSE(t.flags);
  }
  {
    FlagMap m = to_flag_map(biggs_map(5, 2));
    AutGroup aut = automorphisms(m);
    Transitivity t = transitivity(m, aut);
    CHECK_FALSE(t.flags);  // chiral, not regular
    CHECK(t.arcs);
    CHECK(t.edges);
  }
  {
    FlagMap m = tetra();
    Transitivity t = transitivity(m, automorphisms(m));
    CHECK(t.flags);
    CHECK(t.edges);
    CHECK(t.vertices);
    CHECK(t.arcs);
    CHECK(t.faces);
  }
}

TEST_CASE("quotient premaps") {
  {
    FlagMap q = quotient_premap(tetra(), automorphisms(tetra()));
    CHECK(q.size() == 1);  // class 1 basic map
  }
  {
    FlagMap m = to_flag_map(biggs_map(5, 2));
    FlagMap q = quotient_premap(m, automorphisms(m));
    CHECK(q.size() == 2);
    CHECK_FALSE(q.has_boundary());  // N(2Pex) is closed
  }
  {
    // |flags| = 84, |Aut| = 21: the quotient has 4 flags
    FlagMap m = to_flag_map(james_map(7, 5, 5));
    FlagMap q = quotient_premap(m, automorphisms(m));
    CHECK(q.size() == 4);
    CHECK_FALSE(q.has_boundary());
    auto c = q.counts();
    CHECK(c.V == 1);
    CHECK(c.F == 2);  // N(5*): one vertex, two faces on the sphere
  }
}

TEST_CASE("basic premap catalog") {
  const auto& catalog = basic_premap_catalog();
  REQUIRE(catalog.size() == 14);

  std::set<std::string> labels;
  for (const auto& entry : catalog) labels.insert(to_string(entry.label));
  CHECK(labels == std::set<std::string>{"1", "2", "2*", "2P", "2ex", "2*ex", "2Pex", "3", "4", "4*",
                                        "4P", "5", "5*", "5P"});

  for (const auto& entry : catalog) {
    std::vector<std::uint32_t> lab;
    CHECK(entry.premap.edge_labels(lab) == 1);  // one edge each
    switch (entry.label) {
      case EtClass::C1: {
        CHECK(entry.premap.size() == 1);
        for (int i = 0; i < 3; ++i) CHECK(entry.premap.image(i, 0) == 0);
        break;
      }
      case EtClass::C3: {
        CHECK(entry.premap.size() == 4);
        std::vector<std::uint32_t> vl;
        CHECK(entry.premap.vertex_labels(vl) == 2);  // two vertex orbits
        for (std::uint32_t f = 0; f < 4; ++f) CHECK(entry.premap.image(1, f) == f);
        break;
      }
      case EtClass::C2Pex:
      case EtClass::C5:
      case EtClass::C5s:
      case EtClass::C5P:
        CHECK_FALSE(entry.premap.has_boundary());
        break;
      default:
        CHECK(entry.premap.has_boundary());
    }
    // the two-vertex basic maps are exactly N(2), N(3), N(4), N(5)
    std::vector<std::uint32_t> vl;
    bool two_vertices = entry.premap.vertex_labels(vl) == 2;
    bool expect_two = entry.label == EtClass::C2 || entry.label == EtClass::C3 ||
                      entry.label == EtClass::C4 || entry.label == EtClass::C5;
    CHECK(two_vertices == expect_two);
    // N(4P) sits on the Moebius band, N(5P) on the projective plane
    if (entry.label == EtClass::C4P || entry.label == EtClass::C5P)
      CHECK(entry.premap.euler_characteristic() == 1);
  }

  // certificates separate the catalog exactly: equal iff isomorphic
  for (const auto& a : catalog)
    for (const auto& b : catalog) {
      bool iso = a.premap.isomorphic(b.premap);
      CHECK(iso == (a.premap.canonical_form() == b.premap.canonical_form()));
      CHECK(iso == (a.label == b.label));
    }
}

TEST_CASE("et_class of the named families") {
  CHECK(et_class(to_flag_map(biggs_map(5, 2)).petrie_dual()) == EtClass::C2sex);
  CHECK(et_class(to_flag_map(james_map(7, 5, 5)).petrie_dual()) == EtClass::C5P);
  CHECK(et_class(to_flag_map(biggs_map(9, 4))) == EtClass::C2Pex);
  CHECK(et_class(tetra()) == EtClass::C1);
  // K5 with ascending rotations everywhere is not edge-transitive
  CHECK(et_class(to_flag_map(cayley_map(Field(5, 1), {1, 2, 3, 4}))) == EtClass::NotEdgeTransitive);
}

TEST_CASE("regular iff aut order equals flag count iff class 1") {
  for (const FlagMap& m : {tetra(), to_flag_map(biggs_map(5, 2)), to_flag_map(biggs_map(3, 2)),
                           to_flag_map(james_map(7, 5, 5)), k6_regular_pair().first}) {
    AutGroup aut = automorphisms(m);
    bool regular = aut.order() == m.size();
    CHECK(transitivity(m, aut).flags == regular);
    CHECK((et_class(m, aut) == EtClass::C1) == regular);
  }
}

TEST_CASE("catalog premaps transform along the rows under dual and petrie") {
  const auto& catalog = basic_premap_catalog();
  auto entry_of = [&](EtClass cls) -> const FlagMap& {
    for (const auto& e : catalog)
      if (e.label == cls) return e.premap;
    throw std::logic_error("missing catalog entry");
  };
  for (const auto& e : catalog) {
    CHECK(e.premap.dual().isomorphic(entry_of(dual_class(e.label))));
    CHECK(e.premap.petrie_dual().isomorphic(entry_of(petrie_class(e.label))));
  }
}

TEST_CASE("a closed class-2 map and its dual row") {
  // the standard spherical embedding of K_{2,3}: edge- but not
  // vertex-transitive, so its quotient is the two-vertex premap N(2)
  std::vector<std::vector<int>> rot(5);
  rot[0] = {2, 4, 3};
  rot[1] = {2, 4, 3};
  rot[2] = {0, 1};
  rot[3] = {0, 1};
  rot[4] = {0, 1};
  FlagMap m = to_flag_map(OrientedMap::from_rotations(rot));
  CHECK(et_class(m) == EtClass::C2);
  CHECK(et_class(m.dual()) == EtClass::C2s);
  CHECK(et_class(m.dual().petrie_dual()) == EtClass::C2P);
}

TEST_CASE("class labels follow the dual and petrie row actions") {
  for (const FlagMap& m : {to_flag_map(biggs_map(5, 2)), to_flag_map(biggs_map(8, 2)),
                           to_flag_map(james_map(7, 5, 5)), k6_regular_pair().second}) {
    EtClass cls = et_class(m);
    CHECK(et_class(m.dual()) == dual_class(cls));
    CHECK(et_class(m.petrie_dual()) == petrie_class(cls));
  }
  // spot table values
  CHECK(dual_class(EtClass::C2) == EtClass::C2s);
  CHECK(petrie_class(EtClass::C2s) == EtClass::C2P);
  CHECK(dual_class(EtClass::C5P) == EtClass::C5P);
  CHECK(petrie_class(EtClass::C2Pex) == EtClass::C2sex);
  CHECK(dual_class(EtClass::C1) == EtClass::C1);
  CHECK(petrie_class(EtClass::C3) == EtClass::C3);
}

TEST_CASE("aut order and graph survive dual-petrie operations") {
  FlagMap m = to_flag_map(biggs_map(7, 3));
  size_t order = automorphisms(m).order();
  CHECK(automorphisms(m.petrie_dual()).order() == order);
  CHECK(m.petrie_dual().is_complete(7));
  CHECK(automorphisms(m.dual()).order() == order);
}

TEST_CASE("class string round trip") {
  for (const auto& entry : basic_premap_catalog())
    CHECK(et_class_from_string(to_string(entry.label)) == entry.label);
  CHECK(et_class_from_string("NOT_EDGE_TRANSITIVE") == EtClass::NotEdgeTransitive);
  CHECK_THROWS_AS(et_class_from_string("bogus"), Error);
}
