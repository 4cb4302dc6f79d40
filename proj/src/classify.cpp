#include "etm/classify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace etm {

AutGroup automorphisms(const FlagMap& m) {
  const std::uint32_t n = m.size();
  AutGroup aut;
  std::vector<std::uint32_t> img(n), queue;
  std::vector<bool> used(n);
  for (std::uint32_t target = 0; target < n; ++target) {
    std::fill(img.begin(), img.end(), UINT32_MAX);
    img[0] = target;
    queue.assign(1, 0);
    bool ok = true;
    for (size_t qi = 0; qi < queue.size() && ok; ++qi) {
      std::uint32_t f = queue[qi];
      for (int i = 0; i < 3; ++i) {
        std::uint32_t g = m.image(i, f);
        std::uint32_t gi = m.image(i, img[f]);
        if (img[g] == UINT32_MAX) {
          img[g] = gi;
          queue.push_back(g);
        } else if (img[g] != gi) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::fill(used.begin(), used.end(), false);
    for (std::uint32_t f = 0; f < n && ok; ++f) {
      if (used[img[f]]) ok = false;
      used[img[f]] = true;
    }
    if (ok) aut.elements.push_back(img);
  }
  return aut;
}

namespace {

// Orbit count of aut acting on the classes of an incidence labeling.
long aut_orbits_on(const std::vector<std::uint32_t>& label, std::uint32_t classes,
                   const AutGroup& aut, std::vector<long>* sizes_out) {
  std::vector<std::uint32_t> parent(classes);
  for (std::uint32_t i = 0; i < classes; ++i) parent[i] = i;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  // One representative flag per class suffices: automorphisms permute the
  // classes, so the image class of the representative determines the image.
  std::vector<std::uint32_t> rep(classes, UINT32_MAX);
  for (std::uint32_t f = 0; f < label.size(); ++f)
    if (rep[label[f]] == UINT32_MAX) rep[label[f]] = f;
  for (const auto& g : aut.elements)
    for (std::uint32_t c = 0; c < classes; ++c) {
      std::uint32_t a = find(c), b = find(label[g[rep[c]]]);
      if (a != b) parent[a] = b;
    }
  std::map<std::uint32_t, long> size;
  for (std::uint32_t c = 0; c < classes; ++c) ++size[find(c)];
  if (sizes_out) {
    sizes_out->clear();
    for (auto& [root, s] : size) sizes_out->push_back(s);
    std::sort(sizes_out->begin(), sizes_out->end());
  }
  return static_cast<long>(size.size());
}

std::uint32_t labels_for(const FlagMap& m, Incidence kind, std::vector<std::uint32_t>& label) {
  switch (kind) {
    case Incidence::Vertices: return m.vertex_labels(label);
    case Incidence::Edges: return m.edge_labels(label);
    case Incidence::Faces: return m.face_labels(label);
    case Incidence::Arcs: return m.arc_labels(label);
    case Incidence::Petrie: return m.petrie_labels(label);
  }
  return 0;
}

}  // namespace

Transitivity transitivity(const FlagMap& m, const AutGroup& aut) {
  Transitivity t;
  std::vector<std::uint32_t> label;
  std::uint32_t c;

  // flags: the action is free, so transitivity is an order count
  t.flags = (aut.order() == m.size());

  c = m.edge_labels(label);
  t.edges = (aut_orbits_on(label, c, aut, nullptr) == 1);
  c = m.vertex_labels(label);
  t.vertices = (aut_orbits_on(label, c, aut, nullptr) == 1);
  c = m.arc_labels(label);
  t.arcs = (aut_orbits_on(label, c, aut, nullptr) == 1);
  c = m.face_labels(label);
  t.faces = (aut_orbits_on(label, c, aut, nullptr) == 1);
  return t;
}

std::vector<long> aut_orbit_sizes(const FlagMap& m, const AutGroup& aut, Incidence kind) {
  std::vector<std::uint32_t> label;
  std::uint32_t c = labels_for(m, kind, label);
  std::vector<long> sizes;
  aut_orbits_on(label, c, aut, &sizes);
  return sizes;
}

FlagMap quotient_premap(const FlagMap& m, const AutGroup& aut) {
  const std::uint32_t n = m.size();
  std::vector<std::uint32_t> orbit(n, UINT32_MAX);
  std::uint32_t count = 0;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (orbit[s] != UINT32_MAX) continue;
    std::vector<std::uint32_t> stack = {s};
    orbit[s] = count;
    while (!stack.empty()) {
      std::uint32_t f = stack.back();
      stack.pop_back();
      for (const auto& g : aut.elements)
        if (orbit[g[f]] == UINT32_MAX) {
          orbit[g[f]] = count;
          stack.push_back(g[f]);
        }
    }
    ++count;
  }
  std::vector<std::uint32_t> rep(count, UINT32_MAX);
  for (std::uint32_t f = n; f-- > 0;) rep[orbit[f]] = f;
  FlagMap::Perm r[3];
  for (int i = 0; i < 3; ++i) {
    r[i].resize(count);
    for (std::uint32_t o = 0; o < count; ++o) r[i][o] = orbit[m.image(i, rep[o])];
  }
  return FlagMap::from_involutions(std::move(r[0]), std::move(r[1]), std::move(r[2]));
}

std::string to_string(EtClass c) {
  switch (c) {
    case EtClass::C1: return "1";
    case EtClass::C2: return "2";
    case EtClass::C2s: return "2*";
    case EtClass::C2P: return "2P";
    case EtClass::C2ex: return "2ex";
    case EtClass::C2sex: return "2*ex";
    case EtClass::C2Pex: return "2Pex";
    case EtClass::C3: return "3";
    case EtClass::C4: return "4";
    case EtClass::C4s: return "4*";
    case EtClass::C4P: return "4P";
    case EtClass::C5: return "5";
    case EtClass::C5s: return "5*";
    case EtClass::C5P: return "5P";
    case EtClass::NotEdgeTransitive: return "NOT_EDGE_TRANSITIVE";
  }
  return "?";
}

EtClass et_class_from_string(const std::string& s) {
  static const std::map<std::string, EtClass> table = {
      {"1", EtClass::C1},       {"2", EtClass::C2},       {"2*", EtClass::C2s},
      {"2P", EtClass::C2P},     {"2ex", EtClass::C2ex},   {"2*ex", EtClass::C2sex},
      {"2Pex", EtClass::C2Pex}, {"3", EtClass::C3},       {"4", EtClass::C4},
      {"4*", EtClass::C4s},     {"4P", EtClass::C4P},     {"5", EtClass::C5},
      {"5*", EtClass::C5s},     {"5P", EtClass::C5P},
      {"NOT_EDGE_TRANSITIVE", EtClass::NotEdgeTransitive},
  };
  auto it = table.find(s);
  if (it == table.end()) throw Error(Err::ParseError, "unknown class label '" + s + "'");
  return it->second;
}

namespace {

void involutions_on(std::uint32_t n, std::vector<FlagMap::Perm>& out) {
  FlagMap::Perm cur(n, UINT32_MAX);
  auto rec = [&](auto&& self, std::uint32_t) -> void {
    std::uint32_t a = 0;
    while (a < n && cur[a] != UINT32_MAX) ++a;
    if (a == n) {
      out.push_back(cur);
      return;
    }
    cur[a] = a;  // fixed point
    self(self, 0);
    cur[a] = UINT32_MAX;
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (cur[b] != UINT32_MAX) continue;
      cur[a] = b;
      cur[b] = a;
      self(self, 0);
      cur[a] = cur[b] = UINT32_MAX;
    }
  };
  rec(rec, 0);
}

EtClass label_premap(const FlagMap& pm) {
  const std::uint32_t n = pm.size();
  std::vector<std::uint32_t> lab;
  long V = pm.vertex_labels(lab);
  long F = pm.face_labels(lab);
  bool closed = !pm.has_boundary();
  if (n == 1) return EtClass::C1;
  if (n == 2) {
    if (closed) return EtClass::C2Pex;
    if (V == 2) return EtClass::C2;
    if (F == 2) return EtClass::C2s;
    // V = F = 1 with boundary: decided by which involution acts trivially
    if (pm.image(1, 0) == 0) return EtClass::C2P;
    if (pm.image(2, 0) == 0) return EtClass::C2ex;
    return EtClass::C2sex;
  }
  if (n == 4) {
    if (closed) {
      if (V == 2) return EtClass::C5;
      if (F == 2) return EtClass::C5s;
      return EtClass::C5P;
    }
    bool r1_trivial = true;
    for (std::uint32_t f = 0; f < n; ++f) r1_trivial = r1_trivial && pm.image(1, f) == f;
    if (r1_trivial) return EtClass::C3;
    if (V == 2) return EtClass::C4;
    if (F == 2) return EtClass::C4s;
    return EtClass::C4P;
  }
  throw std::logic_error("one-edge premap with unexpected flag count");
}

}  // namespace

const std::vector<CatalogEntry>& basic_premap_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> entries;
    std::vector<std::string> certs;
    for (std::uint32_t n : {1u, 2u, 3u, 4u}) {
      std::vector<FlagMap::Perm> invs;
      involutions_on(n, invs);
      for (const auto& r0 : invs)
        for (const auto& r1 : invs)
          for (const auto& r2 : invs) {
            if (FlagMap::check(r0, r1, r2)) continue;  // axioms or connectivity fail
            FlagMap pm = FlagMap::from_involutions(r0, r1, r2);
            std::vector<std::uint32_t> lab;
            if (pm.edge_labels(lab) != 1) continue;
            std::string cert = pm.canonical_form();
            if (std::find(certs.begin(), certs.end(), cert) != certs.end()) continue;
            certs.push_back(cert);
            entries.push_back({label_premap(pm), std::move(pm)});
          }
    }
    if (entries.size() != 14)
      throw std::logic_error("one-edge premap enumeration found " + std::to_string(entries.size()) +
                             " classes, expected 14");
    std::sort(entries.begin(), entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.label < b.label; });
    return entries;
  }();
  return catalog;
}

EtClass et_class(const FlagMap& m, const AutGroup& aut) {
  FlagMap pm = quotient_premap(m, aut);
  std::vector<std::uint32_t> lab;
  if (pm.edge_labels(lab) != 1) return EtClass::NotEdgeTransitive;
  for (const auto& entry : basic_premap_catalog())
    if (pm.isomorphic(entry.premap)) return entry.label;
  throw std::logic_error("one-edge quotient matches no catalog premap");
}

EtClass et_class(const FlagMap& m) { return et_class(m, automorphisms(m)); }

EtClass dual_class(EtClass c) {
  switch (c) {
    case EtClass::C2: return EtClass::C2s;
    case EtClass::C2s: return EtClass::C2;
    case EtClass::C2ex: return EtClass::C2sex;
    case EtClass::C2sex: return EtClass::C2ex;
    case EtClass::C4: return EtClass::C4s;
    case EtClass::C4s: return EtClass::C4;
    case EtClass::C5: return EtClass::C5s;
    case EtClass::C5s: return EtClass::C5;
    default: return c;
  }
}

EtClass petrie_class(EtClass c) {
  switch (c) {
    case EtClass::C2s: return EtClass::C2P;
    case EtClass::C2P: return EtClass::C2s;
    case EtClass::C2sex: return EtClass::C2Pex;
    case EtClass::C2Pex: return EtClass::C2sex;
    case EtClass::C4s: return EtClass::C4P;
    case EtClass::C4P: return EtClass::C4s;
    case EtClass::C5s: return EtClass::C5P;
    case EtClass::C5P: return EtClass::C5s;
    default: return c;
  }
}

}  // namespace etm
