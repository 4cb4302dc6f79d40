#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etm/errors.hpp"

namespace etm {

/// The six map operations generated by dual (swap r0, r2) and Petrie
/// (replace r0 by r0r2); they realize an S3 action on maps.
enum class OmegaElem {
  Identity,
  Dual,
  Petrie,
  DualPetrie,   // dual, then Petrie
  PetrieDual,   // Petrie, then dual
  DualPetrieDual,
};

/// Abstract incidence graph from a flag system: vertex/edge orbits with
/// endpoint incidence. Loop-ish edges (one endpoint) keep u == v.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u <= v, sorted
};

/// A finite flag set acted on by three involutions r0, r1, r2 with
/// (r0 r2)^2 = 1 and a connected action. Fixed flags encode boundary.
/// Immutable after construction; all operations are pure.
class FlagMap {
 public:
  using Perm = std::vector<std::uint32_t>;

  /// Checks the type invariants; returns the first violation, if any.
  static std::optional<std::string> check(const Perm& r0, const Perm& r1, const Perm& r2);

  /// Validating constructor; throws InvalidFlagMap on any violation.
  static FlagMap from_involutions(Perm r0, Perm r1, Perm r2);

  std::uint32_t size() const { return n_; }
  std::uint32_t image(int i, std::uint32_t f) const { return r_[i][f]; }
  const Perm& r(int i) const { return r_[i]; }

  bool operator==(const FlagMap& other) const = default;

  struct Counts {
    long V = 0, E = 0, F = 0, petrie = 0;
  };
  Counts counts() const;
  long euler_characteristic() const;  // V - E + F
  bool has_boundary() const;
  bool is_orientable() const;  // closed and flag-2-colorable

  /// Genus when orientable, crosscap number when not; throws
  /// GenusUndefined for maps with boundary (chi is still available).
  long genus_or_crosscaps() const;

  std::vector<int> face_sizes() const;
  std::vector<int> vertex_degrees() const;
  std::vector<int> petrie_lengths() const;

  FlagMap dual() const;
  FlagMap petrie_dual() const;
  FlagMap omega(OmegaElem w) const;

  /// Orbit labels per flag under a set of generators (0,1,2 select the
  /// involutions, 3 selects the composite r0r2). Returns the orbit count;
  /// labels are 0-based in order of smallest member.
  std::uint32_t orbit_labels(const std::vector<int>& gens, std::vector<std::uint32_t>& label) const;

  std::uint32_t vertex_labels(std::vector<std::uint32_t>& label) const;  // <r1,r2>
  std::uint32_t edge_labels(std::vector<std::uint32_t>& label) const;    // <r0,r2>
  std::uint32_t face_labels(std::vector<std::uint32_t>& label) const;    // <r0,r1>
  std::uint32_t petrie_labels(std::vector<std::uint32_t>& label) const;  // <r0r2,r1>
  std::uint32_t arc_labels(std::vector<std::uint32_t>& label) const;     // <r2>

  SimpleGraph underlying_graph() const;
  bool is_complete(int n) const;

  /// Flag bijection phi with phi r_i = r_i phi, or nullopt. O(|flags|^2).
  std::optional<Perm> isomorphism_to(const FlagMap& other) const;
  bool isomorphic(const FlagMap& other) const { return isomorphism_to(other).has_value(); }

  /// Isomorphism-invariant certificate: lexicographically minimal BFS
  /// relabeling over all start flags. Equal certificates iff isomorphic.
  std::string canonical_form() const;

  /// Rebuild the canonical representative encoded by a certificate.
  static FlagMap from_certificate(const std::string& cert);

  /// Relabel flags by an arbitrary permutation (conjugates the r_i).
  FlagMap relabeled(const Perm& perm) const;

 private:
  FlagMap(Perm r0, Perm r1, Perm r2, std::uint32_t n)
      : n_(n), r_{std::move(r0), std::move(r1), std::move(r2)} {}

  std::uint32_t n_ = 0;
  Perm r_[3];
};

}  // namespace etm
