#include "etm/flagmap.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace etm {

std::optional<std::string> FlagMap::check(const Perm& r0, const Perm& r1, const Perm& r2) {
  const std::uint32_t n = static_cast<std::uint32_t>(r0.size());
  if (n == 0) return "empty flag set";
  if (r1.size() != n || r2.size() != n) return "image arrays differ in length";
  const Perm* rs[3] = {&r0, &r1, &r2};
  for (int i = 0; i < 3; ++i) {
    const Perm& r = *rs[i];
    for (std::uint32_t f = 0; f < n; ++f)
      if (r[f] >= n) return "r" + std::to_string(i) + " image out of range";
    for (std::uint32_t f = 0; f < n; ++f)
      if (r[r[f]] != f) return "r" + std::to_string(i) + " not involution";
  }
  for (std::uint32_t f = 0; f < n; ++f)
    if (r2[r0[r2[r0[f]]]] != f) return "(r0 r2)^2 not identity";

  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> stack = {0};
  seen[0] = true;
  std::uint32_t reached = 1;
  while (!stack.empty()) {
    std::uint32_t f = stack.back();
    stack.pop_back();
    for (int i = 0; i < 3; ++i) {
      std::uint32_t g = (*rs[i])[f];
      if (!seen[g]) {
        seen[g] = true;
        ++reached;
        stack.push_back(g);
      }
    }
  }
  if (reached != n) return "not connected";
  return std::nullopt;
}

FlagMap FlagMap::from_involutions(Perm r0, Perm r1, Perm r2) {
  if (auto violation = check(r0, r1, r2))
    throw Error(Err::InvalidFlagMap, *violation);
  std::uint32_t n = static_cast<std::uint32_t>(r0.size());
  return FlagMap(std::move(r0), std::move(r1), std::move(r2), n);
}

std::uint32_t FlagMap::orbit_labels(const std::vector<int>& gens, std::vector<std::uint32_t>& label) const {
  label.assign(n_, UINT32_MAX);
  std::uint32_t count = 0;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t s = 0; s < n_; ++s) {
    if (label[s] != UINT32_MAX) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      std::uint32_t f = stack.back();
      stack.pop_back();
      for (int g : gens) {
        std::uint32_t h = (g == 3) ? r_[2][r_[0][f]] : r_[g][f];
        if (label[h] == UINT32_MAX) {
          label[h] = count;
          stack.push_back(h);
        }
      }
    }
    ++count;
  }
  return count;
}

std::uint32_t FlagMap::vertex_labels(std::vector<std::uint32_t>& label) const {
  return orbit_labels({1, 2}, label);
}
std::uint32_t FlagMap::edge_labels(std::vector<std::uint32_t>& label) const {
  return orbit_labels({0, 2}, label);
}
std::uint32_t FlagMap::face_labels(std::vector<std::uint32_t>& label) const {
  return orbit_labels({0, 1}, label);
}
std::uint32_t FlagMap::petrie_labels(std::vector<std::uint32_t>& label) const {
  return orbit_labels({3, 1}, label);
}
std::uint32_t FlagMap::arc_labels(std::vector<std::uint32_t>& label) const {
  return orbit_labels({2}, label);
}

FlagMap::Counts FlagMap::counts() const {
  Counts c;
  std::vector<std::uint32_t> label;
  c.V = vertex_labels(label);
  c.E = edge_labels(label);
  c.F = face_labels(label);
  c.petrie = petrie_labels(label);
  return c;
}

long FlagMap::euler_characteristic() const {
  Counts c = counts();
  return c.V - c.E + c.F;
}

bool FlagMap::has_boundary() const {
  for (int i = 0; i < 3; ++i)
    for (std::uint32_t f = 0; f < n_; ++f)
      if (r_[i][f] == f) return true;
  return false;
}

bool FlagMap::is_orientable() const {
  // Closed and 2-colorable with every r_i color-flipping.
  std::vector<int> color(n_, -1);
  std::vector<std::uint32_t> stack = {0};
  color[0] = 0;
  while (!stack.empty()) {
    std::uint32_t f = stack.back();
    stack.pop_back();
    for (int i = 0; i < 3; ++i) {
      std::uint32_t g = r_[i][f];
      if (g == f) return false;  // boundary
      if (color[g] == -1) {
        color[g] = 1 - color[f];
        stack.push_back(g);
      } else if (color[g] == color[f]) {
        return false;
      }
    }
  }
  return true;
}

long FlagMap::genus_or_crosscaps() const {
  if (has_boundary())
    throw Error(Err::GenusUndefined, "map has boundary; only chi is defined");
  long chi = euler_characteristic();
  if (is_orientable()) {
    if ((2 - chi) % 2 != 0)
      throw Error(Err::GenusUndefined, "orientable with odd chi (orbifold quotient)");
    return (2 - chi) / 2;
  }
  return 2 - chi;
}

namespace {

std::vector<int> orbit_size_multiset(std::uint32_t count, const std::vector<std::uint32_t>& label) {
  std::vector<int> size(count, 0);
  for (std::uint32_t l : label) ++size[l];
  // Orbit flag counts halve to incidence sizes; boundary orbits may be odd.
  for (int& s : size) s = (s + 1) / 2;
  std::sort(size.begin(), size.end());
  return size;
}

}  // namespace

std::vector<int> FlagMap::face_sizes() const {
  std::vector<std::uint32_t> label;
  return orbit_size_multiset(face_labels(label), label);
}

std::vector<int> FlagMap::vertex_degrees() const {
  std::vector<std::uint32_t> label;
  return orbit_size_multiset(vertex_labels(label), label);
}

std::vector<int> FlagMap::petrie_lengths() const {
  std::vector<std::uint32_t> label;
  return orbit_size_multiset(petrie_labels(label), label);
}

FlagMap FlagMap::dual() const { return FlagMap(r_[2], r_[1], r_[0], n_); }

FlagMap FlagMap::petrie_dual() const {
  Perm r0p(n_);
  for (std::uint32_t f = 0; f < n_; ++f) r0p[f] = r_[2][r_[0][f]];
  return FlagMap(std::move(r0p), r_[1], r_[2], n_);
}

FlagMap FlagMap::omega(OmegaElem w) const {
  switch (w) {
    case OmegaElem::Identity: return *this;
    case OmegaElem::Dual: return dual();
    case OmegaElem::Petrie: return petrie_dual();
    case OmegaElem::DualPetrie: return dual().petrie_dual();
    case OmegaElem::PetrieDual: return petrie_dual().dual();
    case OmegaElem::DualPetrieDual: return dual().petrie_dual().dual();
  }
  return *this;
}

SimpleGraph FlagMap::underlying_graph() const {
  std::vector<std::uint32_t> vlab, elab;
  std::uint32_t nv = vertex_labels(vlab);
  std::uint32_t ne = edge_labels(elab);
  SimpleGraph g;
  g.n = static_cast<int>(nv);
  std::vector<std::pair<int, int>> ends(ne, {-1, -1});
  for (std::uint32_t f = 0; f < n_; ++f) {
    auto& e = ends[elab[f]];
    int v = static_cast<int>(vlab[f]);
    if (e.first == -1) {
      e.first = v;
    } else if (e.first != v && e.second == -1) {
      e.second = v;
    }
  }
  for (auto& e : ends) {
    if (e.second == -1) e.second = e.first;  // one-endpoint edge
    if (e.first > e.second) std::swap(e.first, e.second);
    g.edges.push_back(e);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

bool FlagMap::is_complete(int n) const {
  SimpleGraph g = underlying_graph();
  if (g.n != n) return false;
  if (g.edges.size() != static_cast<size_t>(n) * (n - 1) / 2) return false;
  for (auto [u, v] : g.edges)
    if (u == v) return false;
  for (size_t i = 1; i < g.edges.size(); ++i)
    if (g.edges[i] == g.edges[i - 1]) return false;  // parallel edges
  return true;
}

std::optional<FlagMap::Perm> FlagMap::isomorphism_to(const FlagMap& other) const {
  if (n_ != other.n_) return std::nullopt;
  std::vector<std::uint32_t> img(n_), queue;
  for (std::uint32_t target = 0; target < n_; ++target) {
    std::fill(img.begin(), img.end(), UINT32_MAX);
    img[0] = target;
    queue.assign(1, 0);
    bool ok = true;
    for (size_t qi = 0; qi < queue.size() && ok; ++qi) {
      std::uint32_t f = queue[qi];
      for (int i = 0; i < 3; ++i) {
        std::uint32_t g = r_[i][f];
        std::uint32_t gi = other.r_[i][img[f]];
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
    std::vector<bool> used(n_, false);
    for (std::uint32_t f = 0; f < n_ && ok; ++f) {
      if (used[img[f]]) ok = false;
      used[img[f]] = true;
    }
    if (ok) return img;
  }
  return std::nullopt;
}

std::string FlagMap::canonical_form() const {
  if (n_ > 0xFFFF) throw Error(Err::TooLarge, "certificate limited to 65535 flags");
  // BFS relabeling from each start flag with edge colors visited in the
  // fixed order r0, r1, r2; keep the lexicographically least encoding.
  std::vector<std::uint32_t> relab(n_), order(n_);
  std::vector<std::uint16_t> best, cur;
  for (std::uint32_t s = 0; s < n_; ++s) {
    std::fill(relab.begin(), relab.end(), UINT32_MAX);
    relab[s] = 0;
    order[0] = s;
    std::uint32_t next = 1;
    cur.clear();
    bool worse = false;
    for (std::uint32_t k = 0; k < n_ && !worse; ++k) {
      std::uint32_t f = order[k];
      for (int i = 0; i < 3; ++i) {
        std::uint32_t g = r_[i][f];
        if (relab[g] == UINT32_MAX) {
          relab[g] = next;
          order[next] = g;
          ++next;
        }
        cur.push_back(static_cast<std::uint16_t>(relab[g]));
        if (!best.empty()) {
          size_t idx = cur.size() - 1;
          if (cur[idx] > best[idx]) {
            worse = true;
            break;
          }
          if (cur[idx] < best[idx]) best.clear();  // cur is now strictly better
        }
      }
    }
    if (!worse && (best.empty() || cur < best)) best = cur;
  }
  std::string out;
  out.reserve(best.size() * 2 + 4);
  out.push_back(static_cast<char>(n_ & 0xFF));
  out.push_back(static_cast<char>((n_ >> 8) & 0xFF));
  for (std::uint16_t v : best) {
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
  }
  return out;
}

FlagMap FlagMap::from_certificate(const std::string& cert) {
  auto u16at = [&cert](size_t i) {
    return static_cast<std::uint16_t>(static_cast<unsigned char>(cert[2 * i]) |
                                      (static_cast<unsigned char>(cert[2 * i + 1]) << 8));
  };
  if (cert.size() < 2) throw Error(Err::ParseError, "certificate too short");
  std::uint32_t n = u16at(0);
  if (cert.size() != 2 + static_cast<size_t>(n) * 6)
    throw Error(Err::ParseError, "certificate length mismatch");
  Perm r[3];
  for (int i = 0; i < 3; ++i) r[i].resize(n);
  for (std::uint32_t f = 0; f < n; ++f)
    for (int i = 0; i < 3; ++i) r[i][f] = u16at(1 + 3 * static_cast<size_t>(f) + i);
  return from_involutions(std::move(r[0]), std::move(r[1]), std::move(r[2]));
}

FlagMap FlagMap::relabeled(const Perm& perm) const {
  Perm r[3];
  for (int i = 0; i < 3; ++i) {
    r[i].resize(n_);
    for (std::uint32_t f = 0; f < n_; ++f) r[i][perm[f]] = perm[r_[i][f]];
  }
  return from_involutions(std::move(r[0]), std::move(r[1]), std::move(r[2]));
}

}  // namespace etm
