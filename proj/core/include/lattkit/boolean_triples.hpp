#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lattkit/congruence.hpp"
#include "lattkit/embedding.hpp"
#include "lattkit/lattice.hpp"

namespace lattkit {

// An ordered triple of elements of some base lattice.
struct Triple {
  int x = 0, y = 0, z = 0;
  int operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// A triple is Boolean when each component is recovered from the joins of
// the other two:
//   x = (x v y) ^ (x v z),   y = (y v x) ^ (y v z),   z = (z v x) ^ (z v y).
bool is_boolean(const FiniteLattice& L, Triple t);

// A triple is balanced when its three pairwise meets coincide
// (x ^ y = y ^ z = z ^ x).  Every Boolean triple is balanced.
bool is_balanced(const FiniteLattice& L, Triple t);

// The smallest Boolean triple componentwise above t:
//   <(xvy)^(xvz), (yvx)^(yvz), (zvx)^(zvy)>.
// A closure operator on L^3; fixes exactly the Boolean triples.
Triple boolean_closure(const FiniteLattice& L, Triple t);

// When t is Boolean, the triple (u, v, w) = (xvy, xvz, yvz) whose pairwise
// meets reproduce t (x = u^v, y = u^w, z = v^w); nullopt otherwise.  A
// triple is Boolean iff some such representation exists.
std::optional<Triple> meet_representation(const FiniteLattice& L, Triple t);

// "<x,y,z>" using the base lattice's labels.
std::string render_triple(const FiniteLattice& base, Triple t);

// The lattice M3<L> of all Boolean triples of L: order componentwise, meet
// componentwise, join the Boolean closure of the componentwise join.
// Members are enumerated in lexicographic (x, y, z) order, so member
// indices are deterministic.
class TripleLattice {
 public:
  const FiniteLattice& base() const { return base_; }
  const FiniteLattice& lattice() const { return lattice_; }
  const std::vector<Triple>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  Triple member(int i) const { return members_[i]; }
  // index of a triple among the members, -1 if not Boolean
  int index_of(Triple t) const;
  // x |-> <x,x,x>
  const Embedding& diagonal() const { return diagonal_; }

 private:
  friend TripleLattice m3_hat(const FiniteLattice&, std::size_t);
  FiniteLattice base_;
  std::vector<Triple> members_;
  FiniteLattice lattice_;
  Embedding diagonal_;
};

// Builds M3<L>.  Throws SizeLimitExceeded when |L|^3 > max_candidates.
// The meet table is validated against componentwise meets and the join
// table against the closure formula; a mismatch throws std::logic_error.
TripleLattice m3_hat(const FiniteLattice& L, std::size_t max_candidates = 1000000);

// The four mutually exclusive shapes of a Boolean triple.
enum class TripleCase {
  Diagonal,                // <a,a,a>
  TwoValues,               // <b,a,a> / <a,b,a> / <a,a,b> with a < b
  ComparablePairWithMeet,  // permutation of <a, b, a^b>, a and b incomparable
  AtomsOfBoolean8,         // pairwise incomparable atoms of an 8-element Boolean sublattice
};

struct TripleClassification {
  TripleCase kind;
  // Diagonal
  int diagonal_value = -1;
  // TwoValues: small < big, big sits at big_position
  int small = -1, big = -1, big_position = -1;
  // ComparablePairWithMeet: meet_value = p ^ q at meet_position; p fills the
  // first remaining slot, q the second (positions ascending)
  int p = -1, q = -1, meet_value = -1, meet_position = -1;
  // AtomsOfBoolean8: the components in slot order and the sublattice
  std::array<int, 3> atoms{-1, -1, -1};
  std::array<int, 8> boolean8{};

  // Rebuilds the triple from the recorded witnesses.
  Triple reconstruct() const;
};

// Classifies a Boolean triple into exactly one of the four cases, with
// enough witnesses to reconstruct it.  Throws NotBoolean otherwise.  For
// the AtomsOfBoolean8 case the 8-element Boolean sublattice is built
// explicitly and verified.
TripleClassification classify_boolean(const FiniteLattice& L, Triple t);

// x |-> <x, 0, 0>: a lattice embedding of the base whose image is an ideal
// of M3<L>.
Embedding zero_embedding(const TripleLattice& M);

// Indices of {<0,0,0>, <1,0,0>, <0,1,0>, <0,0,1>, <1,1,1>}, a
// {0,1}-sublattice isomorphic to M3.  Throws TrivialLattice when |L| = 1.
std::array<int, 5> spanning_m3(const TripleLattice& M);

// Restriction of theta^3 to the Boolean triples: two members are related
// iff they are componentwise related.  Always a congruence of M3<L>;
// restricting it back along the diagonal returns theta.
Congruence lift_congruence(const TripleLattice& M, const Congruence& theta);

}  // namespace lattkit
