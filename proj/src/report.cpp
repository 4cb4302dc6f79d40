#include "etm/report.hpp"

namespace etm {

MapReport analyze(const FlagMap& m) { return analyze(m, automorphisms(m)); }

MapReport analyze(const FlagMap& m, const AutGroup& aut) {
  MapReport r;
  auto c = m.counts();
  r.V = c.V;
  r.E = c.E;
  r.F = c.F;
  r.petrie_count = c.petrie;
  r.chi = c.V - c.E + c.F;
  r.has_boundary = m.has_boundary();
  r.orientable = m.is_orientable();
  if (!r.has_boundary) {
    if (r.orientable) {
      if ((2 - r.chi) % 2 == 0) r.genus_or_crosscaps = (2 - r.chi) / 2;
      // odd chi happens only for orbifold quotients; leave genus unset
    } else {
      r.genus_or_crosscaps = 2 - r.chi;
    }
  }
  r.face_sizes = m.face_sizes();
  r.vertex_degrees = m.vertex_degrees();
  r.petrie_lengths = m.petrie_lengths();
  r.aut_order = static_cast<long>(aut.order());
  Transitivity t = transitivity(m, aut);
  r.flags_transitive = t.flags;
  r.edge_transitive = t.edges;
  r.vertex_transitive = t.vertices;
  r.arc_transitive = t.arcs;
  r.et_class = et_class(m, aut);
  return r;
}

nlohmann::json to_json(const MapReport& r) {
  nlohmann::json j;
  j["V"] = r.V;
  j["E"] = r.E;
  j["F"] = r.F;
  j["petrie_count"] = r.petrie_count;
  j["chi"] = r.chi;
  j["orientable"] = r.orientable;
  j["has_boundary"] = r.has_boundary;
  if (r.genus_or_crosscaps)
    j["genus_or_crosscaps"] = *r.genus_or_crosscaps;
  else
    j["genus_or_crosscaps"] = nullptr;
  j["face_sizes"] = r.face_sizes;
  j["vertex_degrees"] = r.vertex_degrees;
  j["petrie_lengths"] = r.petrie_lengths;
  j["aut_order"] = r.aut_order;
  j["flags_transitive"] = r.flags_transitive;
  j["edge_transitive"] = r.edge_transitive;
  j["vertex_transitive"] = r.vertex_transitive;
  j["arc_transitive"] = r.arc_transitive;
  j["et_class"] = to_string(r.et_class);
  return j;
}

}  // namespace etm
