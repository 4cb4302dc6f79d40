// Command-line front end: constructions, analysis, classification, the
// exhaustive census, and the verification suite.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "etm/census.hpp"
#include "etm/construct.hpp"
#include "etm/field.hpp"
#include "etm/formulas.hpp"
#include "etm/io.hpp"
#include "etm/report.hpp"
#include "etm/verify.hpp"

namespace {

using nlohmann::json;

std::string cert_hex(const std::string& cert) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(cert.size() * 2);
  for (unsigned char c : cert) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

void print_report_text(const etm::MapReport& r) {
  auto multiset = [](const std::vector<int>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  std::cout << "V=" << r.V << " E=" << r.E << " F=" << r.F << " petrie_count=" << r.petrie_count
            << " chi=" << r.chi << "\n";
  std::cout << "orientable=" << (r.orientable ? "yes" : "no")
            << " boundary=" << (r.has_boundary ? "yes" : "no");
  if (r.genus_or_crosscaps)
    std::cout << (r.orientable ? " genus=" : " crosscaps=") << *r.genus_or_crosscaps;
  std::cout << "\n";
  std::cout << "face_sizes=" << multiset(r.face_sizes) << " vertex_degrees=" << multiset(r.vertex_degrees)
            << " petrie_lengths=" << multiset(r.petrie_lengths) << "\n";
  std::cout << "aut_order=" << r.aut_order << " et_class=" << etm::to_string(r.et_class)
            << " flags_transitive=" << r.flags_transitive << " edge_transitive=" << r.edge_transitive
            << " vertex_transitive=" << r.vertex_transitive << " arc_transitive=" << r.arc_transitive
            << "\n";
}

struct MapCommon {
  bool petrie = false, dual = false, emit_json = false;
  std::string out_file;
};

void add_common(CLI::App* cmd, MapCommon& mc) {
  cmd->add_flag("--petrie", mc.petrie, "apply the Petrie operation");
  cmd->add_flag("--dual", mc.dual, "apply the dual operation");
  cmd->add_flag("--json", mc.emit_json, "emit a JSON report");
  cmd->add_option("--out", mc.out_file, "write the map in flagmap v1 format");
}

// Formula block for the map families; present only while the transforms
// keep us inside them (identity or single Petrie).
std::optional<json> formula_json(const std::optional<etm::formulas::BiggsValues>& bv,
                                 const std::optional<etm::formulas::JamesValues>& jv, bool petrie) {
  json f;
  if (bv) {
    const auto& v = *bv;
    f["aut_order"] = v.aut_order;
    if (!petrie) {
      f["chi"] = v.chi;
      f["genus"] = v.genus;
      f["face_size"] = v.face_size;
      f["face_count"] = v.face_count;
      f["degree"] = v.degree;
      f["petrie_length"] = v.petrie_length;
      f["petrie_count"] = v.petrie_count;
      f["et_class"] = etm::to_string(v.cls);
    } else {
      f["chi"] = v.petrie_chi;
      f["face_size"] = v.petrie_length;
      f["face_count"] = v.petrie_count;
      f["degree"] = v.degree;
      f["petrie_length"] = v.face_size;
      f["petrie_count"] = v.face_count;
      f["et_class"] = etm::to_string(v.petrie_cls);
    }
    return f;
  }
  if (jv) {
    const auto& v = *jv;
    f["aut_order"] = v.aut_order;
    f["degree"] = v.n - 1;
    if (!petrie) {
      f["chi"] = v.chi;
      f["genus"] = v.genus;
      f["face_orbit_sizes"] = {v.face_orbit_small, v.face_orbit_large};
      f["petrie_length"] = v.petrie_length;
      f["petrie_count"] = v.petrie_count;
      f["et_class"] = "5*";
    } else {
      f["chi"] = v.petrie_chi;
      f["face_size"] = v.petrie_length;
      f["face_count"] = v.petrie_count;
      f["et_class"] = "5P";
    }
    return f;
  }
  return std::nullopt;
}

bool formula_consistent(const json& formula, const etm::MapReport& r, const etm::FlagMap& fm) {
  bool ok = true;
  auto li = [](const json& v) { return v.get<long>(); };
  if (formula.contains("chi")) ok = ok && li(formula["chi"]) == r.chi;
  if (formula.contains("aut_order")) ok = ok && li(formula["aut_order"]) == r.aut_order;
  if (formula.contains("genus"))
    ok = ok && r.genus_or_crosscaps && li(formula["genus"]) == *r.genus_or_crosscaps;
  if (formula.contains("et_class")) ok = ok && formula["et_class"].get<std::string>() == etm::to_string(r.et_class);
  if (formula.contains("face_size"))
    ok = ok && std::all_of(r.face_sizes.begin(), r.face_sizes.end(),
                           [&](int s) { return s == li(formula["face_size"]); });
  if (formula.contains("face_count")) ok = ok && li(formula["face_count"]) == r.F;
  if (formula.contains("degree"))
    ok = ok && std::all_of(r.vertex_degrees.begin(), r.vertex_degrees.end(),
                           [&](int d) { return d == li(formula["degree"]); });
  if (formula.contains("petrie_length"))
    ok = ok && std::all_of(r.petrie_lengths.begin(), r.petrie_lengths.end(),
                           [&](int l) { return l == li(formula["petrie_length"]); });
  if (formula.contains("petrie_count")) ok = ok && li(formula["petrie_count"]) == r.petrie_count;
  if (formula.contains("face_orbit_sizes")) {
    auto sizes = etm::aut_orbit_sizes(fm, etm::automorphisms(fm), etm::Incidence::Faces);
    std::vector<long> want = formula["face_orbit_sizes"].get<std::vector<long>>();
    std::sort(want.begin(), want.end());
    ok = ok && sizes == want;
  }
  return ok;
}

int emit_map(const etm::FlagMap& fm_in, const MapCommon& mc,
             const std::optional<etm::formulas::BiggsValues>& bv,
             const std::optional<etm::formulas::JamesValues>& jv) {
  etm::FlagMap fm = fm_in;
  if (mc.petrie) fm = fm.petrie_dual();
  if (mc.dual) fm = fm.dual();
  if (!mc.out_file.empty()) etm::write_flagmap_file(mc.out_file, fm);
  etm::MapReport r = etm::analyze(fm);
  std::optional<json> formula;
  if (!mc.dual) formula = formula_json(bv, jv, mc.petrie);
  if (mc.emit_json) {
    json j = etm::to_json(r);
    if (formula) {
      j["formula"] = *formula;
      j["consistent"] = formula_consistent(*formula, r, fm);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    print_report_text(r);
    if (formula)
      std::cout << "formula consistent=" << (formula_consistent(*formula, r, fm) ? "true" : "false")
                << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-transitive embeddings of complete graphs"};
  app.require_subcommand(1);

  // field info
  auto* field_cmd = app.add_subcommand("field", "finite field utilities");
  field_cmd->require_subcommand(1);
  auto* field_info = field_cmd->add_subcommand("info", "field summary");
  long fp = 0, fe = 1;
  bool field_json = false;
  field_info->add_option("--p", fp, "characteristic")->required();
  field_info->add_option("--e", fe, "extension degree");
  field_info->add_flag("--json", field_json, "emit JSON");

  // map subcommands
  auto* map_cmd = app.add_subcommand("map", "construct and inspect maps");
  map_cmd->require_subcommand(1);

  auto* biggs_cmd = map_cmd->add_subcommand("biggs", "Biggs map M_n(c)");
  long bn = 0;
  etm::Fel bc = 0;
  MapCommon bmc;
  biggs_cmd->add_option("--n", bn, "number of vertices (prime power)")->required();
  biggs_cmd->add_option("--c", bc, "primitive element index")->required();
  add_common(biggs_cmd, bmc);

  auto* james_cmd = map_cmd->add_subcommand("james", "James map M_n(c,j)");
  long jn = 0, jj = 0;
  etm::Fel jc = 0;
  MapCommon jmc;
  james_cmd->add_option("--n", jn, "number of vertices (prime power, 3 mod 4)")->required();
  james_cmd->add_option("--c", jc, "primitive element index")->required();
  james_cmd->add_option("--j", jj, "odd twist exponent, j != 1")->required();
  add_common(james_cmd, jmc);

  auto* k6_cmd = map_cmd->add_subcommand("k6", "the exceptional regular K6 pair");
  std::string which = "{3,5}";
  MapCommon kmc;
  k6_cmd->add_option("--which", which, "{3,5} or {5,5}");
  add_common(k6_cmd, kmc);

  auto* analyze_cmd = map_cmd->add_subcommand("analyze", "full report for a flagmap v1 file");
  std::string analyze_file;
  bool analyze_json = false;
  analyze_cmd->add_option("file", analyze_file, "flagmap v1 file")->required();
  analyze_cmd->add_flag("--json", analyze_json, "emit JSON");

  auto* classify_cmd = map_cmd->add_subcommand("classify", "class label and transitivity flags");
  std::string classify_file;
  classify_cmd->add_option("file", classify_file, "flagmap v1 file")->required();

  // catalog premaps
  auto* catalog_cmd = app.add_subcommand("catalog", "reference data");
  catalog_cmd->require_subcommand(1);
  auto* premaps_cmd = catalog_cmd->add_subcommand("premaps", "the 14 one-edge basic premaps");
  std::string premaps_dir;
  premaps_cmd->add_option("--out", premaps_dir, "write one flagmap v1 file per class");

  // census
  auto* census_cmd = app.add_subcommand("census", "exhaustive K_n embedding census");
  int cn = 4, cjobs = 0;
  bool c_orientable = false, c_boundary = false, c_raw = false;
  std::string c_shard, c_resume, c_out;
  census_cmd->add_option("--n", cn, "3..6 closed, 2..3 with --boundary")->required();
  census_cmd->add_flag("--orientable-only", c_orientable, "all-positive signatures only");
  census_cmd->add_flag("--boundary", c_boundary, "boundary census (n = 2 or 3)");
  census_cmd->add_option("--jobs", cjobs, "worker threads (0 = default)");
  census_cmd->add_option("--shard", c_shard, "I/M: process shard I of M");
  census_cmd->add_option("--resume", c_resume, "checkpoint directory");
  census_cmd->add_option("--out", c_out, "directory for class representative files");
  census_cmd->add_flag("--unnormalized", c_raw, "raw search space (cross-check, small n)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  int vmax = 27, vjobs = 0;
  verify_cmd->add_option("--max-n", vmax, "largest n to verify");
  verify_cmd->add_option("--jobs", vjobs, "census worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*field_info) {
      etm::Field f(fp, fe);
      auto prims = f.primitive_elements();
      auto orbits = f.galois_orbits(prims);
      if (field_json) {
        json j;
        j["p"] = f.p();
        j["e"] = f.e();
        j["n"] = f.order();
        j["modulus"] = f.modulus();
        j["modulus_string"] = f.modulus_string();
        j["phi"] = etm::euler_phi(f.order() - 1);
        j["primitive_elements"] = prims;
        j["galois_orbits"] = orbits;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "GF(" << f.order() << ") = GF(" << f.p() << "^" << f.e() << "), modulus "
                  << f.modulus_string() << "\n";
        std::cout << "phi(n-1) = " << etm::euler_phi(f.order() - 1) << "\n";
        std::cout << "primitive elements:";
        for (auto a : prims) std::cout << " " << a;
        std::cout << "\ngalois orbits:";
        for (const auto& orbit : orbits) {
          std::cout << " {";
          for (size_t i = 0; i < orbit.size(); ++i) std::cout << (i ? "," : "") << orbit[i];
          std::cout << "}";
        }
        std::cout << "\n";
      }
      return 0;
    }

    if (*biggs_cmd)
      return emit_map(etm::to_flag_map(etm::biggs_map(bn, bc)), bmc, etm::formulas::biggs_values(bn),
                      std::nullopt);
    if (*james_cmd)
      return emit_map(etm::to_flag_map(etm::james_map(jn, jc, jj)), jmc, std::nullopt,
                      etm::formulas::james_values(jn, jj));
    if (*k6_cmd) {
      auto [a, b] = etm::k6_regular_pair();
      if (which == "{3,5}" || which == "3,5")
        return emit_map(a, kmc, std::nullopt, std::nullopt);
      if (which == "{5,5}" || which == "5,5")
        return emit_map(b, kmc, std::nullopt, std::nullopt);
      throw etm::Error(etm::Err::Unsupported, "--which must be {3,5} or {5,5}");
    }

    if (*analyze_cmd) {
      etm::FlagMap fm = etm::read_flagmap_file(analyze_file);
      etm::MapReport r = etm::analyze(fm);
      if (analyze_json)
        std::cout << etm::to_json(r).dump(2) << "\n";
      else
        print_report_text(r);
      return 0;
    }

    if (*classify_cmd) {
      etm::FlagMap fm = etm::read_flagmap_file(classify_file);
      etm::AutGroup aut = etm::automorphisms(fm);
      etm::Transitivity t = etm::transitivity(fm, aut);
      std::cout << "et_class " << etm::to_string(etm::et_class(fm, aut)) << "\n";
      std::cout << "aut_order " << aut.order() << "\n";
      std::cout << "transitive: flags=" << t.flags << " edges=" << t.edges << " vertices=" << t.vertices
                << " arcs=" << t.arcs << " faces=" << t.faces << "\n";
      return 0;
    }

    if (*premaps_cmd) {
      const auto& catalog = etm::basic_premap_catalog();
      if (!premaps_dir.empty()) std::filesystem::create_directories(premaps_dir);
      for (const auto& entry : catalog) {
        std::string label = etm::to_string(entry.label);
        std::cout << "class " << label << ": " << entry.premap.size() << " flags\n";
        if (!premaps_dir.empty()) {
          std::string fname = label;
          for (char& ch : fname) {
            if (ch == '*') ch = 's';
          }
          etm::write_flagmap_file(premaps_dir + "/premap_" + fname + ".flagmap", entry.premap);
        }
      }
      return 0;
    }

    if (*census_cmd) {
      if (c_boundary) {
        auto maps = etm::boundary_census(cn);
        if (!c_out.empty()) std::filesystem::create_directories(c_out);
        for (size_t i = 0; i < maps.size(); ++i) {
          std::cout << etm::to_string(etm::et_class(maps[i])) << " "
                    << cert_hex(maps[i].canonical_form()) << "\n";
          if (!c_out.empty())
            etm::write_flagmap_file(c_out + "/boundary_n" + std::to_string(cn) + "_" + std::to_string(i) +
                                        ".flagmap",
                                    maps[i]);
        }
        std::cout << "n=" << cn << " boundary_edge_transitive_maps=" << maps.size() << "\n";
        return 0;
      }
      etm::CensusOptions opt;
      opt.n = cn;
      opt.orientable_only = c_orientable;
      opt.normalized = !c_raw;
      opt.jobs = cjobs;
      opt.resume_dir = c_resume;
      if (!c_shard.empty()) {
        auto slash = c_shard.find('/');
        if (slash == std::string::npos)
          throw etm::Error(etm::Err::Unsupported, "--shard must be I/M");
        opt.shard_index = std::stoull(c_shard.substr(0, slash));
        opt.shard_count = std::stoull(c_shard.substr(slash + 1));
      }
      etm::CensusResult res = etm::edge_transitive_census(opt);
      if (!c_out.empty()) std::filesystem::create_directories(c_out);
      for (size_t i = 0; i < res.classes.size(); ++i) {
        std::cout << etm::to_string(res.classes[i].label) << " " << cert_hex(res.classes[i].certificate)
                  << "\n";
        if (!c_out.empty())
          etm::write_flagmap_file(
              c_out + "/census_n" + std::to_string(cn) + "_class" + std::to_string(i) + ".flagmap",
              res.classes[i].rep);
      }
      std::cout << "n=" << cn << " candidates=" << res.candidates
                << " edge_transitive_classes=" << res.classes.size() << "\n";
      return 0;
    }

    if (*verify_cmd) {
      auto results = etm::run_acceptance(vmax, vjobs);
      bool all = true;
      for (const auto& r : results) {
        std::cout << "criterion " << r.number << " [" << r.name << "]: " << (r.pass ? "PASS" : "FAIL");
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        all = all && r.pass;
      }
      return all ? 0 : 1;
    }
  } catch (const etm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
