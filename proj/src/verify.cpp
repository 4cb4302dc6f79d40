#include "etm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "etm/census.hpp"
#include "etm/construct.hpp"
#include "etm/formulas.hpp"
#include "etm/report.hpp"

namespace etm {

namespace {

struct Checker {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << what << "; ";
    }
  }
  template <typename T, typename U>
  void expect_eq(const T& got, const U& want, const std::string& what) {
    if (!(got == static_cast<T>(want))) {
      pass = false;
      detail << what << ": got " << got << ", want " << want << "; ";
    }
  }
};

bool all_equal_to(const std::vector<int>& xs, long v) {
  return std::all_of(xs.begin(), xs.end(), [&](int x) { return x == v; });
}

const std::vector<long> kBiggsNs = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17};
const std::vector<long> kJamesNs = {7, 11, 19, 23, 27};

CriterionResult biggs_family(int max_n) {
  Checker ck;
  for (long n : kBiggsNs) {
    if (n > max_n) continue;
    auto fv = formulas::biggs_values(n);
    auto census = biggs_census(n);
    std::string tag = "n=" + std::to_string(n) + " ";
    ck.expect_eq(static_cast<long>(census.size()), formulas::biggs_census_size(n), tag + "census size");
    for (const auto& om : census) {
      FlagMap fm = to_flag_map(om);
      AutGroup aut = automorphisms(fm);
      MapReport r = analyze(fm, aut);
      ck.expect(fm.is_complete(static_cast<int>(n)), tag + "embeds K_n");
      ck.expect(r.orientable, tag + "orientable");
      ck.expect(r.genus_or_crosscaps.has_value(), tag + "genus defined");
      if (r.genus_or_crosscaps) ck.expect_eq(*r.genus_or_crosscaps, fv.genus, tag + "genus");
      ck.expect_eq(r.aut_order, fv.aut_order, tag + "aut order");
      ck.expect(r.et_class == fv.cls, tag + "class is " + to_string(fv.cls) + ", got " + to_string(r.et_class));
      ck.expect(all_equal_to(r.face_sizes, fv.face_size) &&
                    static_cast<long>(r.face_sizes.size()) == fv.face_count,
                tag + "face multiset");
      ck.expect(all_equal_to(r.vertex_degrees, n - 1) && static_cast<long>(r.vertex_degrees.size()) == n,
                tag + "degree multiset");
      ck.expect(all_equal_to(r.petrie_lengths, fv.petrie_length) &&
                    static_cast<long>(r.petrie_lengths.size()) == fv.petrie_count,
                tag + "petrie multiset");
      ck.expect(r.arc_transitive, tag + "arc-transitive");
    }
  }
  return {1, "Biggs family", ck.pass, ck.detail.str()};
}

CriterionResult biggs_petrie_duals(int max_n) {
  Checker ck;
  for (long n : kBiggsNs) {
    if (n > max_n || n < 3) continue;
    auto fv = formulas::biggs_values(n);
    std::string tag = "n=" + std::to_string(n) + " ";
    for (const auto& om : biggs_census(n)) {
      FlagMap fm = to_flag_map(om);
      FlagMap pm = fm.petrie_dual();
      AutGroup aut = automorphisms(pm);
      MapReport r = analyze(pm, aut);
      ck.expect(!r.orientable && !r.has_boundary, tag + "petrie dual non-orientable");
      ck.expect_eq(r.chi, fv.petrie_chi, tag + "petrie dual chi");
      ck.expect_eq(r.aut_order, fv.aut_order, tag + "aut order preserved");
      ck.expect(pm.is_complete(static_cast<int>(n)), tag + "graph preserved");
      ck.expect(r.et_class == fv.petrie_cls,
                tag + "class is " + to_string(fv.petrie_cls) + ", got " + to_string(r.et_class));
    }
  }
  return {2, "Biggs Petrie duals", ck.pass, ck.detail.str()};
}

CriterionResult james_family(int max_n) {
  Checker ck;
  for (long n : kJamesNs) {
    if (n > max_n) continue;
    auto census = james_census_detail(n);
    std::string tag = "n=" + std::to_string(n) + " ";
    ck.expect_eq(static_cast<long>(census.size()), formulas::james_census_size(n), tag + "census size");
    for (const auto& rep : census) {
      auto fv = formulas::james_values(n, rep.j);
      std::string mt = tag + "(c=" + std::to_string(rep.c) + ",j=" + std::to_string(rep.j) + ") ";
      FlagMap fm = to_flag_map(rep.map);
      AutGroup aut = automorphisms(fm);
      MapReport r = analyze(fm, aut);
      ck.expect(r.et_class == EtClass::C5s, mt + "class 5*, got " + to_string(r.et_class));
      ck.expect_eq(r.aut_order, fv.aut_order, mt + "aut order");
      auto face_orbits = aut_orbit_sizes(fm, aut, Incidence::Faces);
      ck.expect(face_orbits.size() == 2 && face_orbits[0] == fv.face_orbit_small &&
                    face_orbits[1] == fv.face_orbit_large,
                mt + "two face orbits of the stated sizes");
      ck.expect(r.genus_or_crosscaps.has_value() && r.orientable, mt + "orientable with genus");
      if (r.genus_or_crosscaps) ck.expect_eq(*r.genus_or_crosscaps, fv.genus, mt + "genus");
      ck.expect(all_equal_to(r.petrie_lengths, fv.petrie_length), mt + "petrie length l");
      ck.expect_eq(r.petrie_count, fv.petrie_count, mt + "petrie count");
      ck.expect(aut_orbit_sizes(fm, aut, Incidence::Petrie) == std::vector<long>{fv.petrie_count},
                mt + "single petrie orbit");
      ck.expect(r.vertex_transitive, mt + "vertex-transitive");
      ck.expect(!r.arc_transitive, mt + "not arc-transitive");
      Transitivity t = transitivity(fm, aut);
      ck.expect(!t.faces, mt + "not face-transitive");

      FlagMap pm = fm.petrie_dual();
      MapReport pr = analyze(pm);
      ck.expect_eq(pr.chi, fv.petrie_chi, mt + "petrie dual chi");
      ck.expect(pr.et_class == EtClass::C5P, mt + "petrie dual class 5P, got " + to_string(pr.et_class));
    }
  }
  return {3, "James family", ck.pass, ck.detail.str()};
}

CriterionResult k6_pair(int max_n) {
  Checker ck;
  if (max_n >= 6) {
    auto [a, b] = k6_regular_pair();
    MapReport ra = analyze(a), rb = analyze(b);
    ck.expect(ra.flags_transitive && rb.flags_transitive, "both regular");
    ck.expect_eq(ra.aut_order, 60L, "{3,5} aut order");
    ck.expect_eq(rb.aut_order, 60L, "{5,5} aut order");
    ck.expect_eq(ra.chi, 1L, "{3,5} chi");
    ck.expect_eq(rb.chi, -3L, "{5,5} chi");
    ck.expect(a.petrie_dual().isomorphic(b) && b.petrie_dual().isomorphic(a), "mutually Petrie dual");
    ck.expect(a.is_complete(6) && b.is_complete(6), "both embed K6");
    ck.expect(all_equal_to(ra.face_sizes, 3) && all_equal_to(ra.petrie_lengths, 5), "{3,5} type");
    ck.expect(all_equal_to(rb.face_sizes, 5) && all_equal_to(rb.petrie_lengths, 3), "{5,5} type");
  } else {
    ck.detail << "skipped (max_n < 6); ";
  }
  return {4, "K6 regular pair", ck.pass, ck.detail.str()};
}

CriterionResult oracle_equivalence(int max_n, int jobs) {
  Checker ck;
  for (int n = 3; n <= std::min(5, max_n); ++n) {
    VerifyOutcome vo = verify_classification(n, false, jobs);
    ck.expect_eq(vo.census_classes, static_cast<std::size_t>(2), "n=" + std::to_string(n) + " census classes");
    ck.expect(vo.match, "n=" + std::to_string(n) + " census matches constructions: " + vo.detail);
  }
  if (max_n >= 6) {
    VerifyOutcome vo = verify_classification(6, false, jobs);
    ck.expect_eq(vo.census_classes, static_cast<std::size_t>(0), "n=6 orientable census classes");
    ck.expect(vo.match, "n=6 orientable census matches: " + vo.detail);
  }
  if (max_n >= 5) {
    auto t0 = std::chrono::steady_clock::now();
    CensusOptions opt;
    opt.n = 5;
    CensusResult res = edge_transitive_census_reference(opt);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ck.expect(res.candidates == 82944, "n=5 full census candidate count");
    ck.expect(secs < 120.0, "n=5 full census single-threaded under 2 minutes");
    ck.detail << "n=5 serial census took " << secs << "s; ";
  }
  return {5, "oracle equivalence", ck.pass, ck.detail.str()};
}

CriterionResult boundary_censuses(int max_n) {
  Checker ck;
  auto classes_of = [](const std::vector<FlagMap>& maps) {
    std::vector<std::string> labels;
    for (const auto& m : maps) labels.push_back(to_string(et_class(m)));
    std::sort(labels.begin(), labels.end());
    return labels;
  };
  if (max_n >= 2) {
    auto maps = boundary_census(2);
    ck.expect_eq(maps.size(), static_cast<std::size_t>(3), "n=2 boundary census size");
    ck.expect(classes_of(maps) == std::vector<std::string>({"1", "1", "2"}), "n=2 classes {1,1,2}");
  }
  if (max_n >= 3) {
    auto maps = boundary_census(3);
    ck.expect_eq(maps.size(), static_cast<std::size_t>(3), "n=3 boundary census size");
    ck.expect(classes_of(maps) == std::vector<std::string>({"1", "2*", "2P"}), "n=3 classes {1,2*,2P}");
  }
  return {6, "boundary censuses", ck.pass, ck.detail.str()};
}

std::vector<std::pair<std::string, FlagMap>> constructed_pool(int max_n) {
  std::vector<std::pair<std::string, FlagMap>> pool;
  for (long n : kBiggsNs) {
    if (n > max_n || n > 9) continue;
    for (const auto& rep : biggs_census_detail(n)) {
      FlagMap fm = to_flag_map(rep.map);
      pool.emplace_back("biggs n=" + std::to_string(n) + " c=" + std::to_string(rep.c), fm);
      pool.emplace_back("P(biggs) n=" + std::to_string(n) + " c=" + std::to_string(rep.c), fm.petrie_dual());
    }
  }
  if (max_n >= 7) {
    for (const auto& rep : james_census_detail(7)) {
      FlagMap fm = to_flag_map(rep.map);
      std::string id = " c=" + std::to_string(rep.c) + " j=" + std::to_string(rep.j);
      pool.emplace_back("james n=7" + id, fm);
      pool.emplace_back("P(james) n=7" + id, fm.petrie_dual());
    }
  }
  if (max_n >= 6) {
    auto [a, b] = k6_regular_pair();
    pool.emplace_back("k6 {3,5}", std::move(a));
    pool.emplace_back("k6 {5,5}", std::move(b));
  }
  return pool;
}

CriterionResult omega_laws(int max_n) {
  Checker ck;
  auto pool = constructed_pool(max_n);
  if (max_n >= 9)
    ck.expect(pool.size() >= 20, "pool has >= 20 maps (got " + std::to_string(pool.size()) + ")");
  for (const auto& [name, m] : pool) {
    ck.expect(m.petrie_dual().petrie_dual() == m, name + ": P(P(m)) = m");
    ck.expect(m.dual().dual() == m, name + ": D(D(m)) = m");
    ck.expect(m.dual().petrie_dual().dual().petrie_dual().dual().petrie_dual() == m,
              name + ": (DP)^3 = id");
    EtClass cls = et_class(m);
    ck.expect(et_class(m.dual()) == dual_class(cls), name + ": class of dual follows the row action");
    ck.expect(et_class(m.petrie_dual()) == petrie_class(cls), name + ": class of Petrie follows the row action");
  }
  return {7, "omega laws", ck.pass, ck.detail.str()};
}

CriterionResult oriented_iso_laws(int max_n) {
  Checker ck;
  if (max_n >= 9) {
    Field f9(3, 2);
    auto prims = f9.primitive_elements();
    auto orbits = f9.galois_orbits(prims);
    ck.expect_eq(orbits.size(), static_cast<std::size_t>(2), "GF(9) has two Galois orbits of primitives");
    Fel c = orbits[0][0];
    ck.expect(oriented_isomorphic(biggs_map(9, c), biggs_map(9, f9.frobenius(c))),
              "M_9(c) ~ M_9(c^3) as oriented maps");
    Fel c2 = orbits[1][0];
    ck.expect(!oriented_isomorphic(biggs_map(9, c), biggs_map(9, c2)),
              "M_9(c) !~ M_9(c') outside the Galois orbit");
  }
  if (max_n >= 7)
    ck.expect(oriented_isomorphic(mirror(james_map(7, 5, 5)), james_map(7, 3, 3)),
              "mirror(M_7(5,5)) ~ M_7(3,3)");
  if (max_n >= 5) {
    ck.expect(!oriented_isomorphic(biggs_map(5, 2), biggs_map(5, 3)), "M_5(2) !~ M_5(3) oriented");
    ck.expect(to_flag_map(biggs_map(5, 2)).isomorphic(to_flag_map(biggs_map(5, 3))),
              "M_5(2) ~ M_5(3) as flag systems");
  }
  return {8, "oriented-isomorphism laws", ck.pass, ck.detail.str()};
}

CriterionResult premap_catalog(int max_n) {
  Checker ck;
  const auto& catalog = basic_premap_catalog();
  ck.expect_eq(catalog.size(), static_cast<std::size_t>(14), "one-edge enumeration count");
  for (const auto& [name, m] : constructed_pool(max_n)) {
    AutGroup aut = automorphisms(m);
    EtClass cls = et_class(m, aut);
    ck.expect(cls != EtClass::NotEdgeTransitive, name + " is edge-transitive");
    if (cls == EtClass::NotEdgeTransitive) continue;
    FlagMap q = quotient_premap(m, aut);
    auto it = std::find_if(catalog.begin(), catalog.end(),
                           [&](const CatalogEntry& en) { return en.label == cls; });
    ck.expect(it != catalog.end() && q.isomorphic(it->premap),
              name + ": quotient premap matches catalog entry " + to_string(cls));
  }
  return {9, "one-edge premap catalog", ck.pass, ck.detail.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(int max_n, int jobs) {
  std::vector<CriterionResult> out;
  out.push_back(biggs_family(max_n));
  out.push_back(biggs_petrie_duals(max_n));
  out.push_back(james_family(max_n));
  out.push_back(k6_pair(max_n));
  out.push_back(oracle_equivalence(max_n, jobs));
  out.push_back(boundary_censuses(max_n));
  out.push_back(omega_laws(max_n));
  out.push_back(oriented_iso_laws(max_n));
  out.push_back(premap_catalog(max_n));
  return out;
}

}  // namespace etm
