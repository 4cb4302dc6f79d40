#pragma once

#include <iosfwd>
#include <string>

#include "etm/flagmap.hpp"

namespace etm {

/// "flagmap v1" text format:
///   line 1: flags N
///   lines 2-4: r0|r1|r2 followed by N space-separated 0-based images
/// Fixed points encode boundary.
void write_flagmap(std::ostream& os, const FlagMap& m);
FlagMap read_flagmap(std::istream& is);  // throws ParseError / InvalidFlagMap

void write_flagmap_file(const std::string& path, const FlagMap& m);
FlagMap read_flagmap_file(const std::string& path);

/// Graphviz export of the underlying graph, plumbing for quick looks.
std::string to_dot(const SimpleGraph& g);

}  // namespace etm
