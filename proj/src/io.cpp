#include "etm/io.hpp"

#include <fstream>
#include <sstream>

namespace etm {

void write_flagmap(std::ostream& os, const FlagMap& m) {
  os << "flags " << m.size() << "\n";
  for (int i = 0; i < 3; ++i) {
    os << "r" << i;
    for (std::uint32_t f = 0; f < m.size(); ++f) os << ' ' << m.image(i, f);
    os << "\n";
  }
}

FlagMap read_flagmap(std::istream& is) {
  std::string word;
  if (!(is >> word) || word != "flags") throw Error(Err::ParseError, "expected 'flags N' header");
  long n;
  if (!(is >> n) || n <= 0) throw Error(Err::ParseError, "bad flag count");
  FlagMap::Perm r[3];
  for (int i = 0; i < 3; ++i) {
    std::string tag = "r" + std::to_string(i);
    if (!(is >> word) || word != tag) throw Error(Err::ParseError, "expected line '" + tag + " ...'");
    r[i].resize(n);
    for (long f = 0; f < n; ++f) {
      long img;
      if (!(is >> img) || img < 0 || img >= n)
        throw Error(Err::ParseError, tag + " image " + std::to_string(f) + " missing or out of range");
      r[i][f] = static_cast<std::uint32_t>(img);
    }
  }
  return FlagMap::from_involutions(std::move(r[0]), std::move(r[1]), std::move(r[2]));
}

void write_flagmap_file(const std::string& path, const FlagMap& m) {
  std::ofstream os(path);
  if (!os) throw Error(Err::ParseError, "cannot open " + path + " for writing");
  write_flagmap(os, m);
}

FlagMap read_flagmap_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error(Err::ParseError, "cannot open " + path);
  return read_flagmap(is);
}

std::string to_dot(const SimpleGraph& g) {
  std::ostringstream os;
  os << "graph {\n";
  for (int v = 0; v < g.n; ++v) os << "  v" << v << ";\n";
  for (auto [u, v] : g.edges) os << "  v" << u << " -- v" << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace etm
