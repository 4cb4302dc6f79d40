#include "etm/construct.hpp"

#include <algorithm>
#include <map>

#include "etm/classify.hpp"

namespace etm {

OrientedMap cayley_map(const Field& fs, const std::vector<Fel>& ordering) {
  const long n = fs.order();
  if (ordering.size() != static_cast<size_t>(n - 1))
    throw Error(Err::BadGeneratingSet, "ordering must list all nonzero elements");
  std::vector<bool> seen(n, false);
  for (Fel x : ordering) {
    if (x == 0 || x >= static_cast<Fel>(n) || seen[x])
      throw Error(Err::BadGeneratingSet, "ordering is not a permutation of the nonzero elements");
    seen[x] = true;
  }
  std::vector<std::vector<int>> rot(n);
  for (Fel g = 0; g < static_cast<Fel>(n); ++g) {
    rot[g].reserve(n - 1);
    for (Fel x : ordering) rot[g].push_back(static_cast<int>(fs.add(g, x)));
  }
  return OrientedMap::from_rotations(std::move(rot));
}

OrientedMap biggs_map(long n, Fel c) {
  long p, e;
  if (!prime_power(n, p, e))
    throw Error(Err::NotPrimePower, std::to_string(n) + " is not a prime power");
  Field fs(p, e);
  if (c == 0 || c >= static_cast<Fel>(n) || !fs.is_primitive(c))
    throw Error(Err::NotPrimitive, "c = " + std::to_string(c) + " is not primitive in GF(" + std::to_string(n) + ")");
  std::vector<Fel> ordering(n - 1);
  Fel x = 1;
  for (long k = 0; k < n - 1; ++k) {
    ordering[k] = x;
    x = fs.mul(x, c);
  }
  return cayley_map(fs, ordering);
}

OrientedMap james_map(long n, Fel c, long j) {
  long p, e;
  if (!prime_power(n, p, e))
    throw Error(Err::NotPrimePower, std::to_string(n) + " is not a prime power");
  if (n <= 3 || n % 4 != 3)
    throw Error(Err::BadCongruence, "need n = 3 mod 4 and n > 3, got n = " + std::to_string(n));
  Field fs(p, e);
  if (c == 0 || c >= static_cast<Fel>(n) || !fs.is_primitive(c))
    throw Error(Err::NotPrimitive, "c = " + std::to_string(c) + " is not primitive in GF(" + std::to_string(n) + ")");
  const long m = n - 1;
  j = ((j % m) + m) % m;
  if (j % 2 == 0) throw Error(Err::BadJ, "j must be odd in Z_" + std::to_string(m));
  if (j == 1) throw Error(Err::BadJ, "j = 1 gives the Biggs map");
  std::vector<Fel> ordering;
  ordering.reserve(m);
  for (long i = 0; i < m; i += 2) {
    ordering.push_back(fs.pow(c, i));
    ordering.push_back(fs.pow(c, (j + i) % m));
  }
  return cayley_map(fs, ordering);
}

namespace {

std::string oriented_cert(const OrientedMap& om) { return to_flag_map(om).canonical_form(); }

template <typename Rep>
void sort_census(std::vector<Rep>& reps) {
  std::vector<std::pair<std::string, size_t>> keyed;
  keyed.reserve(reps.size());
  for (size_t i = 0; i < reps.size(); ++i) keyed.emplace_back(oriented_cert(reps[i].map), i);
  std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return reps[a.second].map.rotation < reps[b.second].map.rotation;
  });
  std::vector<Rep> out;
  out.reserve(reps.size());
  for (auto& [cert, i] : keyed) out.push_back(std::move(reps[i]));
  reps = std::move(out);
}

}  // namespace

std::vector<BiggsRep> biggs_census_detail(long n) {
  long p, e;
  if (!prime_power(n, p, e))
    throw Error(Err::NotPrimePower, std::to_string(n) + " is not a prime power");
  Field fs(p, e);
  auto orbits = fs.galois_orbits(fs.primitive_elements());
  std::vector<BiggsRep> reps;
  for (const auto& orbit : orbits) {
    Fel c = *std::min_element(orbit.begin(), orbit.end());
    reps.push_back({c, biggs_map(n, c)});
  }
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t k = i + 1; k < reps.size(); ++k)
      if (oriented_isomorphic(reps[i].map, reps[k].map))
        throw std::logic_error("biggs census representatives collide as oriented maps");
  sort_census(reps);
  return reps;
}

std::vector<OrientedMap> biggs_census(long n) {
  std::vector<OrientedMap> maps;
  for (auto& rep : biggs_census_detail(n)) maps.push_back(std::move(rep.map));
  return maps;
}

std::vector<JamesRep> james_census_detail(long n) {
  long p, e;
  if (!prime_power(n, p, e))
    throw Error(Err::NotPrimePower, std::to_string(n) + " is not a prime power");
  if (n <= 3 || n % 4 != 3)
    throw Error(Err::BadCongruence, "need n = 3 mod 4 and n > 3, got n = " + std::to_string(n));
  Field fs(p, e);
  const long m = n - 1;

  // Equivalence classes of (c, j): c up to Galois, j up to {j, 2-j}.
  std::vector<Fel> orbit_rep(n, 0);
  for (const auto& orbit : fs.galois_orbits(fs.primitive_elements())) {
    Fel rep = *std::min_element(orbit.begin(), orbit.end());
    for (Fel x : orbit) orbit_rep[x] = rep;
  }
  std::map<std::pair<Fel, long>, std::vector<JamesRep>> classes;
  for (Fel c : fs.primitive_elements()) {
    for (long j = 3; j < m; j += 2) {
      long jr = std::min(j, ((2 - j) % m + m) % m);
      classes[{orbit_rep[c], jr}].push_back({c, j, james_map(n, c, j)});
    }
  }

  // Safety net over the equivalence criterion: members of a class must be
  // oriented-isomorphic to its representative, representatives pairwise not.
  std::vector<JamesRep> reps;
  for (auto& [key, members] : classes) {
    for (size_t i = 1; i < members.size(); ++i)
      if (!oriented_isomorphic(members[0].map, members[i].map))
        throw std::logic_error("james class member not isomorphic to its representative");
    reps.push_back(std::move(members[0]));
  }
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t k = i + 1; k < reps.size(); ++k)
      if (oriented_isomorphic(reps[i].map, reps[k].map))
        throw std::logic_error("james census representatives collide as oriented maps");
  sort_census(reps);
  return reps;
}

std::vector<OrientedMap> james_census(long n) {
  std::vector<OrientedMap> maps;
  for (auto& rep : james_census_detail(n)) maps.push_back(std::move(rep.map));
  return maps;
}

OrientedMap hexagon_map() {
  std::vector<std::vector<int>> rot(6);
  for (int v = 0; v < 6; ++v) rot[v] = {(v + 1) % 6, (v + 5) % 6};
  return OrientedMap::from_rotations(std::move(rot));
}

OrientedMap cube_map() {
  // Vertices are coordinate triples read as bits; rotations alternate
  // with vertex parity so that all six square faces close.
  std::vector<std::vector<int>> rot(8);
  for (int v = 0; v < 8; ++v) {
    if (__builtin_popcount(static_cast<unsigned>(v)) % 2 == 0)
      rot[v] = {v ^ 1, v ^ 2, v ^ 4};
    else
      rot[v] = {v ^ 4, v ^ 2, v ^ 1};
  }
  return OrientedMap::from_rotations(std::move(rot));
}

OrientedMap icosahedron_map() {
  // North pole 0, upper ring 1..5, lower ring 6..10, south pole 11.
  auto up = [](int k) { return ((k % 5) + 5) % 5 + 1; };
  auto lo = [](int k) { return ((k % 5) + 5) % 5 + 6; };
  std::vector<std::vector<int>> rot(12);
  rot[0] = {5, 4, 3, 2, 1};
  rot[11] = {6, 7, 8, 9, 10};
  for (int k = 0; k < 5; ++k) {
    rot[up(k)] = {0, up(k + 1), lo(k + 1), lo(k), up(k - 1)};
    rot[lo(k)] = {up(k), lo(k + 1), 11, lo(k - 1), up(k - 1)};
  }
  return OrientedMap::from_rotations(std::move(rot));
}

FlagMap quotient_by_free_automorphisms(const FlagMap& m, const std::vector<FlagMap::Perm>& subgroup) {
  const std::uint32_t n = m.size();
  for (const auto& g : subgroup) {
    if (g.size() != n) throw Error(Err::InvalidFlagMap, "subgroup element has wrong degree");
    bool identity = true;
    for (std::uint32_t f = 0; f < n && identity; ++f) identity = (g[f] == f);
    if (identity) continue;
    for (std::uint32_t f = 0; f < n; ++f)
      if (g[f] == f) throw Error(Err::NotFree, "non-identity element fixes a flag");
    for (int i = 0; i < 3; ++i)
      for (std::uint32_t f = 0; f < n; ++f)
        if (g[m.image(i, f)] != m.image(i, g[f]))
          throw Error(Err::InvalidFlagMap, "subgroup element is not an automorphism");
  }

  // Orbits as the quotient flag set.
  std::vector<std::uint32_t> orbit(n, UINT32_MAX);
  std::uint32_t count = 0;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (orbit[s] != UINT32_MAX) continue;
    std::vector<std::uint32_t> stack = {s};
    orbit[s] = count;
    while (!stack.empty()) {
      std::uint32_t f = stack.back();
      stack.pop_back();
      for (const auto& g : subgroup)
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

std::pair<FlagMap, FlagMap> k6_regular_pair() {
  FlagMap ico = to_flag_map(icosahedron_map());
  AutGroup aut = automorphisms(ico);
  // The central involution is the unique non-identity element commuting
  // with the whole group.
  const FlagMap::Perm* central = nullptr;
  for (const auto& z : aut.elements) {
    bool identity = true;
    for (std::uint32_t f = 0; f < ico.size() && identity; ++f) identity = (z[f] == f);
    if (identity) continue;
    bool commutes = true;
    for (const auto& g : aut.elements) {
      for (std::uint32_t f = 0; f < ico.size(); ++f)
        if (z[g[f]] != g[z[f]]) {
          commutes = false;
          break;
        }
      if (!commutes) break;
    }
    if (commutes) {
      if (central) throw std::logic_error("icosahedron map has more than one central involution");
      central = &z;
    }
  }
  if (!central) throw std::logic_error("icosahedron map has no central involution");
  FlagMap::Perm identity(ico.size());
  for (std::uint32_t f = 0; f < ico.size(); ++f) identity[f] = f;
  FlagMap first = quotient_by_free_automorphisms(ico, {identity, *central});
  FlagMap second = first.petrie_dual();
  return {std::move(first), std::move(second)};
}

}  // namespace etm
