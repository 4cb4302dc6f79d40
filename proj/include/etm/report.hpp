#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "etm/classify.hpp"
#include "etm/flagmap.hpp"

namespace etm {

/// Computed invariants of a map, as emitted by `map analyze --json`.
struct MapReport {
  long V = 0, E = 0, F = 0, petrie_count = 0;
  long chi = 0;
  bool orientable = false;
  bool has_boundary = false;
  std::optional<long> genus_or_crosscaps;  // absent for boundary maps
  std::vector<int> face_sizes, vertex_degrees, petrie_lengths;
  long aut_order = 0;
  bool flags_transitive = false, edge_transitive = false;
  bool vertex_transitive = false, arc_transitive = false;
  EtClass et_class = EtClass::NotEdgeTransitive;
};

MapReport analyze(const FlagMap& m);
MapReport analyze(const FlagMap& m, const AutGroup& aut);

nlohmann::json to_json(const MapReport& r);

}  // namespace etm
