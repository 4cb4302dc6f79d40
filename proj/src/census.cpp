#include "etm/census.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "etm/construct.hpp"

namespace etm {

namespace {

constexpr int kMaxN = 6;
constexpr int kMaxArcs = kMaxN * (kMaxN - 1);
constexpr int kMaxFlags = 2 * kMaxArcs;
constexpr std::uint64_t kBlock = 1ull << 22;

struct Space {
  int n = 0;
  bool orientable_only = false;
  bool normalized = true;
  int E = 0;
  std::uint64_t total = 0;
  // variants[v]: all cyclic neighbor orders at v (first entry pinned to the
  // smallest neighbor); a single ascending entry for v = 0 when normalized.
  std::vector<std::vector<std::vector<int>>> variants;
  std::vector<std::pair<int, int>> sign_edges;  // enumerated sign slots, u < v
};

Space make_space(int n, bool orientable_only, bool normalized) {
  if (n > kMaxN) throw Error(Err::TooLarge, "census supports n <= 6");
  if (n < 3) throw Error(Err::Unsupported, "census supports n >= 3");
  Space sp;
  sp.n = n;
  sp.orientable_only = orientable_only;
  sp.normalized = normalized;
  sp.E = n * (n - 1) / 2;
  sp.variants.resize(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> nb;
    for (int u = 0; u < n; ++u)
      if (u != v) nb.push_back(u);
    if (normalized && v == 0) {
      sp.variants[v] = {nb};
      continue;
    }
    std::vector<int> rest(nb.begin() + 1, nb.end());
    do {
      std::vector<int> order = {nb[0]};
      order.insert(order.end(), rest.begin(), rest.end());
      sp.variants[v].push_back(order);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  if (!orientable_only)
    for (int u = normalized ? 1 : 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) sp.sign_edges.emplace_back(u, v);
  sp.total = 1;
  for (int v = 0; v < n; ++v) sp.total *= sp.variants[v].size();
  sp.total <<= sp.sign_edges.size();
  return sp;
}

OrientedMap decode(const Space& sp, std::uint64_t id) {
  std::uint64_t bits = 0;
  if (!sp.sign_edges.empty()) {
    bits = id & ((1ull << sp.sign_edges.size()) - 1);
    id >>= sp.sign_edges.size();
  }
  std::vector<std::vector<int>> rot(sp.n);
  for (int v = 0; v < sp.n; ++v) {
    std::uint64_t k = sp.variants[v].size();
    rot[v] = sp.variants[v][id % k];
    id /= k;
  }
  OrientedMap om = OrientedMap::from_rotations(std::move(rot));
  for (size_t i = 0; i < sp.sign_edges.size(); ++i)
    if ((bits >> i) & 1) om.set_sign(sp.sign_edges[i].first, sp.sign_edges[i].second, -1);
  return om;
}

// Precomputed next/prev neighbor lookups for every rotation variant.
struct KernelTables {
  int n = 0, narcs = 0, nflags = 0, nedges = 0;
  std::array<std::int8_t, kMaxArcs> arc_u{}, arc_v{};
  std::array<std::int16_t, kMaxN * kMaxN> arc_id{};
  std::array<std::int8_t, kMaxArcs> edge_of_arc{};
  std::vector<std::size_t> var_offset;                // per vertex
  std::vector<std::array<std::int8_t, kMaxN>> nxt, prv;  // per (vertex, variant)

  explicit KernelTables(const Space& sp) {
    n = sp.n;
    narcs = n * (n - 1);
    nflags = 2 * narcs;
    nedges = n * (n - 1) / 2;
    arc_id.fill(-1);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        int a = u * (n - 1) + (v > u ? v - 1 : v);
        arc_id[u * n + v] = static_cast<std::int16_t>(a);
        arc_u[a] = static_cast<std::int8_t>(u);
        arc_v[a] = static_cast<std::int8_t>(v);
      }
    int e = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        edge_of_arc[arc_id[u * n + v]] = static_cast<std::int8_t>(e);
        edge_of_arc[arc_id[v * n + u]] = static_cast<std::int8_t>(e);
        ++e;
      }
    var_offset.resize(n + 1, 0);
    for (int v = 0; v < n; ++v) var_offset[v + 1] = var_offset[v] + sp.variants[v].size();
    nxt.resize(var_offset[n]);
    prv.resize(var_offset[n]);
    for (int v = 0; v < n; ++v)
      for (size_t k = 0; k < sp.variants[v].size(); ++k) {
        const auto& rot = sp.variants[v][k];
        const int d = static_cast<int>(rot.size());
        auto& nx = nxt[var_offset[v] + k];
        auto& pv = prv[var_offset[v] + k];
        for (int i = 0; i < d; ++i) {
          nx[rot[i]] = static_cast<std::int8_t>(rot[(i + 1) % d]);
          pv[rot[i]] = static_cast<std::int8_t>(rot[(i + d - 1) % d]);
        }
      }
  }
};

struct Agg {
  std::uint64_t candidates = 0;
  std::uint64_t profile_pass = 0;
  std::map<std::string, std::pair<FlagMap, EtClass>> classes;

  void merge(Agg&& other) {
    candidates += other.candidates;
    profile_pass += other.profile_pass;
    for (auto& [cert, cls] : other.classes) classes.emplace(cert, std::move(cls));
  }
};

// Least representative of a cyclic sequence under rotation and reflection.
void canonical_cycle(const std::int16_t* s, int d, std::int16_t* out) {
  std::int16_t tmp[2 * kMaxN];
  bool first = true;
  for (int dir = 0; dir < 2; ++dir)
    for (int r = 0; r < d; ++r) {
      for (int k = 0; k < d; ++k) tmp[k] = (dir == 0) ? s[(r + k) % d] : s[(r + d - k) % d];
      if (first || std::lexicographical_compare(tmp, tmp + d, out, out + d)) {
        std::copy(tmp, tmp + d, out);
        first = false;
      }
    }
}

// Hot path: one candidate id, stack buffers only until a survivor shows up.
struct Worker {
  const Space& sp;
  const KernelTables& kt;
  Agg agg;

  std::array<std::uint16_t, kMaxFlags> r0{}, r1{}, r2{};
  std::array<std::int8_t, kMaxN * kMaxN> sgn{};
  std::array<std::int16_t, kMaxFlags> fsize{};
  std::array<std::uint8_t, kMaxFlags> visited{};
  std::array<std::uint16_t, kMaxFlags> stack{}, members{};
  std::array<std::int16_t, 2 * kMaxN> ref_profile{}, profile{}, corner{};
  std::array<std::size_t, kMaxN> var{};
  std::array<std::uint16_t, kMaxFlags> aimg{}, aqueue{};
  std::array<std::uint32_t, kMaxFlags> img_stamp{}, used_stamp{};
  std::uint32_t stamp = 0;

  Worker(const Space& s, const KernelTables& k) : sp(s), kt(k) {}

  // Does flag 0 |-> target extend to an automorphism? (Forced propagation;
  // stamps avoid clearing the scratch arrays between targets.)
  bool is_automorphism_target(int target, int nflags) {
    ++stamp;
    aimg[0] = static_cast<std::uint16_t>(target);
    img_stamp[0] = stamp;
    aqueue[0] = 0;
    int qn = 1;
    const std::uint16_t* rr[3] = {r0.data(), r1.data(), r2.data()};
    for (int qi = 0; qi < qn; ++qi) {
      const int f = aqueue[qi];
      for (int i = 0; i < 3; ++i) {
        const int g = rr[i][f];
        const std::uint16_t gi = rr[i][aimg[f]];
        if (img_stamp[g] != stamp) {
          img_stamp[g] = stamp;
          aimg[g] = gi;
          aqueue[qn++] = static_cast<std::uint16_t>(g);
        } else if (aimg[g] != gi) {
          return false;
        }
      }
    }
    for (int f = 0; f < nflags; ++f) {
      if (used_stamp[aimg[f]] == stamp) return false;
      used_stamp[aimg[f]] = stamp;
    }
    return true;
  }

  void process(std::uint64_t id) {
    ++agg.candidates;
    const int n = sp.n;

    std::uint64_t bits = 0;
    if (!sp.sign_edges.empty()) {
      bits = id & ((1ull << sp.sign_edges.size()) - 1);
      id >>= sp.sign_edges.size();
    }
    for (int v = 0; v < n; ++v) {
      std::uint64_t k = sp.variants[v].size();
      var[v] = static_cast<std::size_t>(id % k);
      id /= k;
    }
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) sgn[u * n + v] = (u == v) ? 0 : 1;
    for (size_t i = 0; i < sp.sign_edges.size(); ++i)
      if ((bits >> i) & 1) {
        auto [u, v] = sp.sign_edges[i];
        sgn[u * n + v] = sgn[v * n + u] = -1;
      }

    const int nflags = kt.nflags;
    for (int a = 0; a < kt.narcs; ++a) {
      const int u = kt.arc_u[a], v = kt.arc_v[a];
      const int back = kt.arc_id[v * n + u];
      const auto& nx = kt.nxt[kt.var_offset[u] + var[u]];
      const auto& pv = kt.prv[kt.var_offset[u] + var[u]];
      const bool pos = sgn[u * n + v] > 0;
      for (int b = 0; b < 2; ++b) {
        const int f = 2 * a + b;
        r2[f] = static_cast<std::uint16_t>(f ^ 1);
        r0[f] = static_cast<std::uint16_t>(2 * back + (pos ? 1 - b : b));
        const int w = (b == 0) ? nx[v] : pv[v];
        r1[f] = static_cast<std::uint16_t>(2 * kt.arc_id[u * n + w] + (1 - b));
      }
    }

    // face sizes via <r0,r1> orbits
    std::fill(visited.begin(), visited.begin() + nflags, 0);
    for (int s = 0; s < nflags; ++s) {
      if (visited[s]) continue;
      int top = 0, cnt = 0;
      stack[top++] = static_cast<std::uint16_t>(s);
      visited[s] = 1;
      while (top > 0) {
        int f = stack[--top];
        members[cnt++] = static_cast<std::uint16_t>(f);
        if (!visited[r0[f]]) {
          visited[r0[f]] = 1;
          stack[top++] = r0[f];
        }
        if (!visited[r1[f]]) {
          visited[r1[f]] = 1;
          stack[top++] = r1[f];
        }
      }
      const std::int16_t size = static_cast<std::int16_t>(cnt / 2);
      for (int i = 0; i < cnt; ++i) fsize[members[i]] = size;
    }

    // Local-uniformity rejection, necessary for edge-transitivity of
    // complete-graph embeddings: every edge sees the same flanking face
    // sizes, and the cyclic corner-size sequence around every vertex is
    // the same up to rotation and reflection (edge-transitive K_n maps
    // are vertex-transitive).
    {
      std::int16_t ra = -1, rb = -1;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          const int a2 = 2 * kt.arc_id[u * n + v];
          std::int16_t x = fsize[a2], y = fsize[a2 + 1];
          if (x > y) std::swap(x, y);
          if (ra < 0) {
            ra = x;
            rb = y;
          } else if (x != ra || y != rb) {
            return;
          }
        }
    }
    const int deg = n - 1;
    for (int v = 0; v < n; ++v) {
      // corner k of vertex v carries the face of flag (v -> rot[k], side +)
      const auto& rot = sp.variants[v][var[v]];
      for (int k = 0; k < deg; ++k) corner[k] = fsize[2 * kt.arc_id[v * n + rot[k]]];
      auto& dst = (v == 0) ? ref_profile : profile;
      canonical_cycle(corner.data(), deg, dst.data());
      if (v > 0 && !std::equal(dst.begin(), dst.begin() + deg, ref_profile.begin())) return;
    }
    ++agg.profile_pass;

    // Edge-transitivity without heap traffic: the automorphisms are the
    // successful propagation targets of flag 0, and the map is
    // edge-transitive iff their edges cover every edge.
    std::uint32_t covered = 0;
    const std::uint32_t all_edges = (1u << kt.nedges) - 1;
    for (int target = 0; target < nflags && covered != all_edges; ++target)
      if (is_automorphism_target(target, nflags)) covered |= 1u << kt.edge_of_arc[target / 2];
    if (covered != all_edges) return;

    FlagMap::Perm p0(r0.begin(), r0.begin() + nflags);
    FlagMap::Perm p1(r1.begin(), r1.begin() + nflags);
    FlagMap::Perm p2(r2.begin(), r2.begin() + nflags);
    FlagMap fm = FlagMap::from_involutions(std::move(p0), std::move(p1), std::move(p2));
    AutGroup aut = automorphisms(fm);
    EtClass cls = et_class(fm, aut);
    if (cls == EtClass::NotEdgeTransitive) return;
    std::string cert = fm.canonical_form();
    if (!agg.classes.count(cert)) agg.classes.emplace(cert, std::make_pair(FlagMap::from_certificate(cert), cls));
  }
};

void scan_range(const Space& sp, const KernelTables& kt, std::uint64_t lo, std::uint64_t hi,
                int jobs, Agg& out) {
#ifdef _OPENMP
  int nthreads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel num_threads(nthreads)
  {
    Worker w(sp, kt);
#pragma omp for schedule(dynamic, 4096)
    for (long long id = static_cast<long long>(lo); id < static_cast<long long>(hi); ++id)
      w.process(static_cast<std::uint64_t>(id));
#pragma omp critical
    out.merge(std::move(w.agg));
  }
#else
  (void)jobs;
  Worker w(sp, kt);
  for (std::uint64_t id = lo; id < hi; ++id) w.process(id);
  out.merge(std::move(w.agg));
#endif
}

nlohmann::json agg_to_json(const Agg& agg) {
  nlohmann::json j;
  j["candidates"] = agg.candidates;
  j["profile_pass"] = agg.profile_pass;
  j["classes"] = nlohmann::json::array();
  for (const auto& [cert, cls] : agg.classes) {
    nlohmann::json c;
    c["label"] = to_string(cls.second);
    for (int i = 0; i < 3; ++i) c["r" + std::to_string(i)] = cls.first.r(i);
    j["classes"].push_back(std::move(c));
  }
  return j;
}

Agg agg_from_json(const nlohmann::json& j) {
  Agg agg;
  agg.candidates = j.at("candidates").get<std::uint64_t>();
  agg.profile_pass = j.at("profile_pass").get<std::uint64_t>();
  for (const auto& c : j.at("classes")) {
    FlagMap::Perm r[3];
    for (int i = 0; i < 3; ++i) r[i] = c.at("r" + std::to_string(i)).get<FlagMap::Perm>();
    FlagMap fm = FlagMap::from_involutions(r[0], r[1], r[2]);
    EtClass cls = et_class_from_string(c.at("label").get<std::string>());
    std::string cert = fm.canonical_form();
    agg.classes.emplace(std::move(cert), std::make_pair(std::move(fm), cls));
  }
  return agg;
}

CensusResult finish(Agg&& agg) {
  CensusResult res;
  res.candidates = agg.candidates;
  res.profile_pass = agg.profile_pass;
  for (auto& [cert, cls] : agg.classes)
    res.classes.push_back({cert, std::move(cls.first), cls.second});
  return res;
}

}  // namespace

std::uint64_t embedding_count(int n, bool orientable_only, bool normalized) {
  return make_space(n, orientable_only, normalized).total;
}

void for_each_embedding(int n, bool orientable_only,
                        const std::function<void(const OrientedMap&)>& fn) {
  Space sp = make_space(n, orientable_only, true);
  for (std::uint64_t id = 0; id < sp.total; ++id) fn(decode(sp, id));
}

CensusResult edge_transitive_census(const CensusOptions& opt) {
  Space sp = make_space(opt.n, opt.orientable_only, opt.normalized);
  KernelTables kt(sp);
  if (opt.shard_count == 0 || opt.shard_index >= opt.shard_count)
    throw Error(Err::Unsupported, "bad shard specification");
  const std::uint64_t lo = sp.total / opt.shard_count * opt.shard_index +
                           std::min<std::uint64_t>(opt.shard_index, sp.total % opt.shard_count);
  const std::uint64_t len = sp.total / opt.shard_count + (opt.shard_index < sp.total % opt.shard_count ? 1 : 0);
  const std::uint64_t hi = lo + len;

  Agg agg;
  for (std::uint64_t blo = lo; blo < hi; blo += kBlock) {
    const std::uint64_t bhi = std::min(hi, blo + kBlock);
    std::string ckpt;
    if (!opt.resume_dir.empty()) {
      std::filesystem::create_directories(opt.resume_dir);
      ckpt = opt.resume_dir + "/ckpt_n" + std::to_string(opt.n) +
             (opt.orientable_only ? "_or" : "_full") + (opt.normalized ? "" : "_raw") + "_" +
             std::to_string(blo) + "_" + std::to_string(bhi) + ".json";
      std::ifstream in(ckpt);
      if (in) {
        nlohmann::json j;
        in >> j;
        agg.merge(agg_from_json(j));
        continue;
      }
    }
    Agg block;
    scan_range(sp, kt, blo, bhi, opt.jobs, block);
    if (!ckpt.empty()) {
      std::ofstream out(ckpt + ".tmp");
      out << agg_to_json(block);
      out.close();
      std::filesystem::rename(ckpt + ".tmp", ckpt);
    }
    agg.merge(std::move(block));
  }
  return finish(std::move(agg));
}

CensusResult edge_transitive_census_reference(const CensusOptions& opt) {
  Space sp = make_space(opt.n, opt.orientable_only, opt.normalized);
  Agg agg;
  std::vector<std::uint32_t> vlab, elab, flab;
  for (std::uint64_t id = 0; id < sp.total; ++id) {
    ++agg.candidates;
    OrientedMap om = decode(sp, id);
    FlagMap fm = to_flag_map(om);
    std::uint32_t nv = fm.vertex_labels(vlab);
    std::uint32_t ne = fm.edge_labels(elab);
    std::uint32_t nf = fm.face_labels(flab);
    std::vector<int> osize(nf, 0);
    for (std::uint32_t lbl : flab) ++osize[lbl];

    // flanking face sizes per edge
    std::vector<std::vector<int>> flank(ne);
    for (std::uint32_t f = 0; f < fm.size(); ++f) flank[elab[f]].push_back(osize[flab[f]] / 2);
    bool uniform = true;
    for (auto& fl : flank) std::sort(fl.begin(), fl.end());
    for (std::uint32_t e = 1; e < ne && uniform; ++e) uniform = (flank[e] == flank[0]);
    if (!uniform) continue;

    // cyclic corner sequence around each vertex: walk r1 then r2, reading
    // every other flag's face size; canonical under rotation/reflection
    std::vector<std::int16_t> ref, canon;
    std::vector<std::uint32_t> start(nv, UINT32_MAX);
    for (std::uint32_t f = 0; f < fm.size(); ++f)
      if (start[vlab[f]] == UINT32_MAX) start[vlab[f]] = f;
    for (std::uint32_t v = 0; v < nv && uniform; ++v) {
      std::vector<std::int16_t> seq;
      std::uint32_t w = start[v];
      do {
        seq.push_back(static_cast<std::int16_t>(osize[flab[w]] / 2));
        w = fm.image(2, fm.image(1, w));
      } while (w != start[v]);
      canon.resize(seq.size());
      canonical_cycle(seq.data(), static_cast<int>(seq.size()), canon.data());
      if (v == 0)
        ref = canon;
      else
        uniform = (canon == ref);
    }
    if (!uniform) continue;
    ++agg.profile_pass;
    AutGroup aut = automorphisms(fm);
    EtClass cls = et_class(fm, aut);
    if (cls == EtClass::NotEdgeTransitive) continue;
    std::string cert = fm.canonical_form();
    if (!agg.classes.count(cert))
      agg.classes.emplace(cert, std::make_pair(FlagMap::from_certificate(cert), cls));
  }
  return finish(std::move(agg));
}

namespace {

void enumerate_involutions(std::uint32_t n, FlagMap::Perm& cur,
                           const std::function<void(const FlagMap::Perm&)>& fn) {
  std::uint32_t a = 0;
  while (a < n && cur[a] != UINT32_MAX) ++a;
  if (a == n) {
    fn(cur);
    return;
  }
  cur[a] = a;
  enumerate_involutions(n, cur, fn);
  cur[a] = UINT32_MAX;
  for (std::uint32_t b = a + 1; b < n; ++b) {
    if (cur[b] != UINT32_MAX) continue;
    cur[a] = b;
    cur[b] = a;
    enumerate_involutions(n, cur, fn);
    cur[a] = cur[b] = UINT32_MAX;
  }
}

}  // namespace

std::vector<FlagMap> boundary_census(int n) {
  if (n < 2 || n > 3) throw Error(Err::Unsupported, "boundary census supports n in {2, 3}");
  const int E = n * (n - 1) / 2;

  // Edge blocks come in the two shapes compatible with a two-endpoint
  // edge: a full 4-flag orbit or a 2-flag orbit with trivial r2.
  std::map<std::string, std::pair<FlagMap, EtClass>> found;
  for (int mask = 0; mask < (1 << E); ++mask) {
    std::uint32_t nflags = 0;
    std::vector<std::uint32_t> offset(E);
    for (int e = 0; e < E; ++e) {
      offset[e] = nflags;
      nflags += ((mask >> e) & 1) ? 2 : 4;
    }
    FlagMap::Perm r0(nflags), r2(nflags);
    for (int e = 0; e < E; ++e) {
      std::uint32_t o = offset[e];
      if ((mask >> e) & 1) {
        r0[o] = o + 1;
        r0[o + 1] = o;
        r2[o] = o;
        r2[o + 1] = o + 1;
      } else {
        r0[o] = o + 1; r0[o + 1] = o; r0[o + 2] = o + 3; r0[o + 3] = o + 2;
        r2[o] = o + 2; r2[o + 2] = o; r2[o + 1] = o + 3; r2[o + 3] = o + 1;
      }
    }
    FlagMap::Perm r1(nflags, UINT32_MAX);
    enumerate_involutions(nflags, r1, [&](const FlagMap::Perm& cand) {
      if (FlagMap::check(r0, cand, r2)) return;  // disconnected or invalid
      FlagMap fm = FlagMap::from_involutions(r0, cand, r2);
      if (!fm.has_boundary()) return;
      if (!fm.is_complete(n)) return;
      AutGroup aut = automorphisms(fm);
      EtClass cls = et_class(fm, aut);
      if (cls == EtClass::NotEdgeTransitive) return;
      std::string cert = fm.canonical_form();
      if (!found.count(cert)) found.emplace(cert, std::make_pair(FlagMap::from_certificate(cert), cls));
    });
  }
  std::vector<FlagMap> out;
  for (auto& [cert, cls] : found) out.push_back(std::move(cls.first));
  return out;
}

VerifyOutcome verify_classification(int n, bool full6, int jobs) {
  VerifyOutcome out;
  out.n = n;
  CensusOptions opt;
  opt.n = n;
  opt.jobs = jobs;
  opt.orientable_only = (n == 6 && !full6);
  out.orientable_only = opt.orientable_only;
  CensusResult census = edge_transitive_census(opt);
  out.candidates = census.candidates;
  out.census_classes = census.classes.size();

  std::map<std::string, std::string> constructed;
  auto add = [&](const FlagMap& fm, const std::string& what) {
    if (opt.orientable_only && !fm.is_orientable()) return;
    constructed.emplace(fm.canonical_form(), what);
  };
  long p, e;
  if (prime_power(n, p, e)) {
    for (const auto& om : biggs_census(n)) {
      FlagMap fm = to_flag_map(om);
      add(fm, "biggs");
      if (n >= 3) add(fm.petrie_dual(), "petrie(biggs)");
    }
    if (n > 3 && n % 4 == 3) {
      for (const auto& om : james_census(n)) {
        FlagMap fm = to_flag_map(om);
        add(fm, "james");
        add(fm.petrie_dual(), "petrie(james)");
      }
    }
  }
  if (n == 6) {
    auto [a, b] = k6_regular_pair();
    add(a, "k6 {3,5}");
    add(b, "k6 {5,5}");
  }
  out.constructed_classes = constructed.size();

  out.match = true;
  std::string detail;
  for (const auto& cls : census.classes)
    if (!constructed.count(cls.certificate)) {
      out.match = false;
      detail += "census class " + to_string(cls.label) + " not among constructed maps; ";
    }
  for (const auto& [cert, what] : constructed) {
    bool present = std::any_of(census.classes.begin(), census.classes.end(),
                               [&](const CensusClass& c) { return c.certificate == cert; });
    if (!present) {
      out.match = false;
      detail += what + " missing from census; ";
    }
  }
  out.detail = detail.empty() ? "census and constructed families agree" : detail;
  return out;
}

}  // namespace etm
