#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "etm/classify.hpp"
#include "etm/flagmap.hpp"
#include "etm/oriented.hpp"

namespace etm {

/// Options for the exhaustive closed-embedding census of K_n, 3 <= n <= 6.
/// The search space is normalized: the rotation at vertex 0 is pinned to
/// the ascending cyclic order and the signs of all edges at vertex 0 are
/// +1 (vertex relabeling and switchings reach every isomorphism class).
/// normalized = false enumerates the raw space instead, as a cross-check
/// for small n.
struct CensusOptions {
  int n = 4;
  bool orientable_only = false;
  bool normalized = true;
  int jobs = 0;  // OpenMP thread count; 0 = library default
  std::uint64_t shard_index = 0, shard_count = 1;
  std::string resume_dir;  // when set, per-block checkpoint files live here
};

struct CensusClass {
  std::string certificate;
  FlagMap rep;  // canonical representative, rebuilt from the certificate
  EtClass label = EtClass::NotEdgeTransitive;
};

struct CensusResult {
  std::uint64_t candidates = 0;
  std::uint64_t profile_pass = 0;  // survivors of the local-uniformity filter
  std::vector<CensusClass> classes;  // sorted by certificate
};

std::uint64_t embedding_count(int n, bool orientable_only, bool normalized = true);

/// Streams every candidate embedding in the normalized space, in candidate
/// order. Throws Unsupported / TooLarge outside 3 <= n <= 6.
void for_each_embedding(int n, bool orientable_only,
                        const std::function<void(const OrientedMap&)>& fn);

/// OpenMP-parallel census kernel: enumerate, filter by equal per-vertex
/// face-size profiles, classify survivors, deduplicate by certificate.
CensusResult edge_transitive_census(const CensusOptions& opt);

/// Serial reference implementation on the general-purpose code path;
/// produces identical results (kept for testing and benchmarking).
CensusResult edge_transitive_census_reference(const CensusOptions& opt);

/// Exhaustive edge-transitive boundary embeddings of K_n, n in {2, 3},
/// over all flag systems with the right number of edges.
std::vector<FlagMap> boundary_census(int n);

struct VerifyOutcome {
  int n = 0;
  bool orientable_only = false;
  std::uint64_t candidates = 0;
  std::size_t census_classes = 0, constructed_classes = 0;
  bool match = false;
  std::string detail;
};

/// Compares the census against the constructed families (Biggs and James
/// maps, their Petrie duals, and the K6 pair) at this n. For n = 6 the
/// default run is orientable-only; full6 enables the long non-orientable
/// sweep.
VerifyOutcome verify_classification(int n, bool full6 = false, int jobs = 0);

}  // namespace etm
