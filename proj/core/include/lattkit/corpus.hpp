#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lattkit/lattice.hpp"

namespace lattkit {

struct CorpusEntry {
  std::string name;
  FiniteLattice lattice;
  // known flags; agree with the lattice_core predicates wherever set
  std::optional<bool> distributive;
  std::optional<bool> modular;
  std::optional<bool> simple;
};

// The named corpus: C1..C6, B2, B3, M3, N5, M3xC2, Fano.
const std::vector<CorpusEntry>& corpus_entries();
FiniteLattice named(std::string_view name);  // throws UnknownName
std::vector<std::string> corpus_names();

// Direct product with pairwise order; element (i, j) gets index i*|K|+j.
FiniteLattice product(const FiniteLattice& L, const FiniteLattice& K);

// All lattices on n labeled elements whose labeling is a linear extension
// (i < j in the lattice forces i < j as indices, so 0 is the bottom and
// n-1 the top).  Deterministic order; labeled duplicates under isomorphism
// are retained.  Throws SizeLimitExceeded for n > 6.
std::vector<FiniteLattice> enumerate_lattices(int n);

// Deterministic pseudo-random lattice: a meet/join-closed subset of a
// Boolean lattice B_k, k = ceil(log2 n) + 2, containing both bounds.
// Aims for exactly n elements; if the closure cannot be steered to n within
// the retry budget, returns the nearest size reached.
FiniteLattice random_lattice(int n, std::uint64_t seed);

}  // namespace lattkit
