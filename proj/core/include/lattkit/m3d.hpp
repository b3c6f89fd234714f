#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lattkit/boolean_triples.hpp"
#include "lattkit/embedding.hpp"
#include "lattkit/lattice.hpp"

namespace lattkit {

// The poset of balanced triples of L under the componentwise order.  It
// contains every Boolean triple; whether it is a lattice depends on L.
struct BalancedTriplePoset {
  FiniteLattice base;
  std::vector<Triple> members;  // lexicographic
  BitMatrix leq;                // componentwise order among members

  int size() const { return static_cast<int>(members.size()); }
  int index_of(Triple t) const;
};

BalancedTriplePoset balanced_poset(const FiniteLattice& L,
                                   std::size_t max_candidates = 1000000);

// M3[D]: for a distributive D the balanced triples form a modular lattice
// with componentwise meets; joins are poset lubs.  D embeds as the ideal
// {<x,0,0>}.  Throws NotDistributive when D is not distributive.
struct M3OfD {
  FiniteLattice base;
  std::vector<Triple> members;  // lexicographic, equal to the balanced triples
  FiniteLattice lattice;
  Embedding ideal_embedding;    // x |-> <x,0,0>

  int index_of(Triple t) const;
};

M3OfD m3_of_d(const FiniteLattice& D, std::size_t max_candidates = 1000000);

// First pair of balanced triples with no least upper / greatest lower
// bound, if the balanced poset fails to be a lattice.
struct BalancedPosetFailure {
  Triple a, b;
  bool join_side;  // true: no least upper bound
};
std::optional<BalancedPosetFailure> balanced_lattice_failure(
    const FiniteLattice& L, std::size_t max_candidates = 1000000);

}  // namespace lattkit
