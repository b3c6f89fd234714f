#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lattkit/congruence.hpp"
#include "lattkit/embedding.hpp"
#include "lattkit/lattice.hpp"

namespace lattkit {

// First verdict that failed, with whatever witness the check produced.
struct ExtensionFailure {
  std::string verdict;                  // "proper", "congruence_preserving", ...
  std::optional<Congruence> congruence; // colliding or unmatched congruence
  std::optional<int> element;           // offending target element
};

// Verdicts about an embedding L -> K, decided by full enumeration of both
// congruence lattices (the desk-scale oracle, uniform over any embedding).
struct ExtensionReport {
  bool proper = false;
  bool congruence_preserving = false;
  bool extensive = false;
  bool image_is_ideal = false;
  std::size_t con_source = 0;
  std::size_t con_target = 0;
  std::optional<ExtensionFailure> failure;

  // one-line machine-readable summary
  std::string summary_line() const;
  // flat key-value block
  std::string to_text() const;
};

ExtensionReport verify_extension(const Embedding& e, std::size_t max_congruences = 100000);

// Hall-Dilworth gluing: identifies a filter of L with an ideal of A via the
// isomorphism `iso` (a vector over L's elements, -1 outside the filter) and
// returns the glued lattice with both canonical embeddings.  L keeps its
// element indices; the elements of A outside the ideal are appended.
struct Gluing {
  FiniteLattice result;
  Embedding lower;  // L into the result
  Embedding upper;  // A into the result
};

Gluing glue(const FiniteLattice& L, const ElementSubset& filter, const FiniteLattice& A,
            const ElementSubset& ideal, const std::vector<int>& iso);

// K = L glued with M3<[a)> along the filter [a), which matches the
// <x,0,0> ideal of the triple lattice.  Requires a < 1 (the filter must
// have at least two elements); throws FilterTooSmall otherwise.  K is a
// proper congruence-preserving extension of L with L an ideal in K.
struct IdealExtension {
  FiniteLattice result;
  Embedding embedding;  // L into K, identity on indices
};

IdealExtension ideal_extension(const FiniteLattice& L, int a,
                               std::size_t max_candidates = 1000000);

}  // namespace lattkit
