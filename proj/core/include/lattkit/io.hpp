#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lattkit/lattice.hpp"

namespace lattkit {

// Lattice text format, one lattice per file:
//   line 1:            lattice <n>
//   subsequent lines:  cover <a> <b>     (a covered by b, 0-based)
//                      label <i> <name>  (optional display name, no spaces)
//   comments:          # ...
// ASCII, LF line endings, single spaces between tokens.
FiniteLattice parse_lattice(std::istream& in);
FiniteLattice parse_lattice_text(const std::string& text);
FiniteLattice parse_lattice_file(const std::string& path);

// Deterministic emission: covers sorted by (a, b); label lines only for
// elements whose label differs from its decimal index.
std::string to_text(const FiniteLattice& L);

struct DotOptions {
  std::vector<int> highlight;  // filled nodes (e.g. the diagonal of M3<L>)
};

// Hasse diagram: one node per element, one edge per cover, elements of
// equal height share a rank.
std::string to_dot(const FiniteLattice& L, const DotOptions& opts = {});

}  // namespace lattkit
