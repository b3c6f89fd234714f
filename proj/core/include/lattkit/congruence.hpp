#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lattkit/embedding.hpp"
#include "lattkit/lattice.hpp"

namespace lattkit {

// A partition of 0..n-1 in canonical form: each element stores the smallest
// member of its block, so two congruences are equal iff their arrays are.
// Whether the partition respects a lattice's operations is the
// is_congruence question below; values produced by the closure routines
// always do.
class Congruence {
 public:
  Congruence() = default;

  static Congruence identity(int n);
  static Congruence universal(int n);
  // Canonicalizes an arbitrary block-id assignment (ids need not be block
  // minima on input, only consistent).
  static Congruence from_block_ids(std::vector<int> raw);

  int size() const { return static_cast<int>(block_.size()); }
  int block_id(int a) const { return block_[a]; }
  bool related(int a, int b) const { return block_[a] == block_[b]; }
  int block_count() const;
  std::vector<std::vector<int>> blocks() const;

  // true when every block of this partition is contained in a block of
  // `coarser`.
  bool refines(const Congruence& coarser) const;

  // Rendering used by the CLI: blocks by smallest member, elements
  // ascending, e.g. {0,1|2|3}.
  std::string to_block_string() const;

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence& a, const Congruence& b) {
    return a.block_ <=> b.block_;
  }

 private:
  std::vector<std::int32_t> block_;
};

// Substitution property check: for all related (a, b) and every c, a^c is
// related to b^c and avc to bvc.
bool is_congruence(const FiniteLattice& L, const Congruence& partition);

// Smallest congruence of L relating a and b, computed by seeding the pair
// and closing under the substitution property with union-find.
Congruence principal_congruence(const FiniteLattice& L, int a, int b);

// Smallest congruence containing both arguments.
Congruence congruence_join(const FiniteLattice& L, const Congruence& x, const Congruence& y);

// Largest congruence below both: blockwise intersection.
Congruence congruence_meet(const Congruence& x, const Congruence& y);

// Smallest congruence relating every seed pair.
Congruence congruence_generated(const FiniteLattice& L,
                                std::span<const std::pair<int, int>> seeds);

struct CongruenceLattice {
  std::vector<Congruence> congruences;  // sorted by block array, deterministic
  FiniteLattice order;                  // refinement order over `congruences`

  int index_of(const Congruence& c) const;
};

// Every congruence of L: the join-closure of the principal congruences
// (cover pairs generate them all) plus the identity.  The result is checked
// to be meet-closed before returning.  Throws SizeLimitExceeded when more
// than max_count congruences appear.
CongruenceLattice all_congruences(const FiniteLattice& L, std::size_t max_count = 100000);

// Pulls a congruence on e's target back along the embedding:
// x ~ y iff e(x) ~ e(y).
Congruence restrict_congruence(const Congruence& theta, const Embedding& e);

// Reference oracle: enumerates every partition of the universe (restricted
// growth strings) and filters by is_congruence.  Exponential; refuses
// n > max_n.  Kept independent of the join-closure path above so the two
// can be checked against each other.
std::vector<Congruence> congruences_by_partition_scan(const FiniteLattice& L, int max_n = 10);

}  // namespace lattkit
