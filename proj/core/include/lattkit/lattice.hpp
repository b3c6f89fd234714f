#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lattkit/bitmatrix.hpp"
#include "lattkit/errors.hpp"

namespace lattkit {

// A subset of the universe 0..n-1 of some lattice, stored as a bitset.
class ElementSubset {
 public:
  ElementSubset() = default;
  explicit ElementSubset(int n) : n_(n), bits_((n + 63) / 64, 0) {}

  static ElementSubset full(int n);
  static ElementSubset of(int n, std::span<const int> elements);
  static ElementSubset of(int n, std::initializer_list<int> elements);

  int universe_size() const { return n_; }
  int count() const { return bits::popcount(bits_); }
  bool empty() const { return count() == 0; }
  bool contains(int a) const { return (bits_[a / 64] >> (a % 64)) & 1u; }
  void add(int a) { bits_[a / 64] |= std::uint64_t{1} << (a % 64); }
  void remove(int a) { bits_[a / 64] &= ~(std::uint64_t{1} << (a % 64)); }
  std::vector<int> elements() const;
  std::span<const std::uint64_t> words() const { return bits_; }
  std::span<std::uint64_t> words() { return bits_; }

  friend bool operator==(const ElementSubset&, const ElementSubset&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Finite lattice over elements 0..n-1.  The full order relation and both
// operation tables are materialized at construction, so every later query
// is a table lookup and every predicate a plain scan.  Instances are
// immutable once built.
class FiniteLattice {
 public:
  // Empty placeholder (size 0); assign a real lattice before use.
  FiniteLattice() = default;

  // Builds the lattice whose order is the reflexive-transitive closure of
  // the cover pairs (lo, hi).  Throws CyclicCovers if the covers contain a
  // cycle and NotALattice if some pair lacks a unique glb or lub.
  static FiniteLattice from_covers(int n, std::span<const std::pair<int, int>> covers,
                                   std::vector<std::string> labels = {});
  static FiniteLattice from_covers(int n, std::initializer_list<std::pair<int, int>> covers,
                                   std::vector<std::string> labels = {});

  // Builds from a full order relation (must be reflexive, antisymmetric and
  // transitive).  Throws NotALattice if the poset is not a lattice.
  static FiniteLattice from_order(BitMatrix leq, std::vector<std::string> labels = {});

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_.get(a, b); }
  bool lt(int a, int b) const { return a != b && leq_.get(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a) * n_ + b]; }
  int join(int a, int b) const { return join_[static_cast<std::size_t>(a) * n_ + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int height(int a) const { return height_[a]; }

  // true when hi covers lo (lo < hi with nothing strictly between).
  bool covers(int lo, int hi) const { return cover_.get(lo, hi); }
  const std::vector<std::pair<int, int>>& cover_pairs() const { return cover_pairs_; }

  std::span<const std::uint64_t> up_set(int a) const { return leq_.row(a); }
  std::span<const std::uint64_t> down_set(int a) const { return geq_.row(a); }
  const BitMatrix& order() const { return leq_; }

  std::string label(int a) const;
  bool has_custom_labels() const { return !labels_.empty(); }
  FiniteLattice with_labels(std::vector<std::string> labels) const;

  // Structural equality: same size and same order relation.  Labels are
  // display-only and not compared.
  friend bool operator==(const FiniteLattice& x, const FiniteLattice& y) {
    return x.n_ == y.n_ && x.leq_ == y.leq_;
  }

 private:
  static FiniteLattice build(BitMatrix leq, std::vector<std::string> labels);

  int n_ = 0;
  BitMatrix leq_;   // row a = up-set of a
  BitMatrix geq_;   // row a = down-set of a
  BitMatrix cover_;
  std::vector<std::int32_t> meet_, join_;
  std::vector<int> height_;
  std::vector<std::pair<int, int>> cover_pairs_;
  int bottom_ = 0, top_ = 0;
  std::vector<std::string> labels_;
};

// Checks whether a poset (given as a full order relation) is a lattice.
// On failure, (a, b) is the first pair lacking a bound and join_side tells
// which bound is missing.
struct LatticeCheck {
  bool is_lattice = true;
  int a = -1;
  int b = -1;
  bool join_side = false;
};
LatticeCheck poset_is_lattice(const BitMatrix& leq);

// ---- structural predicates ----------------------------------------------

// Identity scans: the distributive law over all triples, the modular law
// over all a <= c.  The forbidden-sublattice route is find_sublattice below;
// the two must agree and the tests hold them to that.
bool is_distributive(const FiniteLattice& L);
bool is_modular(const FiniteLattice& L);

// Upper semimodularity: a covers a^b implies avb covers b.
bool is_semimodular(const FiniteLattice& L);
std::optional<std::pair<int, int>> semimodularity_violation(const FiniteLattice& L);

enum class SublatticePattern { N5, M3 };

// Searches for a 5-element sublattice isomorphic to the pattern.
// M3 result: {o, a, b, c, i} with a,b,c pairwise incomparable, all pairwise
// meets o and joins i.  N5 result: {o, x, y, z, i} with y < z and x
// incomparable to both, x^y = x^z = o, xvy = xvz = i.
std::optional<std::array<int, 5>> find_sublattice(const FiniteLattice& L,
                                                  SublatticePattern pattern);

// ---- subsets --------------------------------------------------------------

bool is_ideal(const FiniteLattice& L, const ElementSubset& s);
bool is_filter(const FiniteLattice& L, const ElementSubset& s);
ElementSubset principal_filter(const FiniteLattice& L, int a);
ElementSubset principal_ideal(const FiniteLattice& L, int a);
ElementSubset interval(const FiniteLattice& L, int a, int b);

// Smallest superset of `seed` closed under meet, join and betweenness
// (x <= z <= y with x, y inside forces z inside).  `seed` must be nonempty.
ElementSubset convex_sublattice_generated(const FiniteLattice& L, const ElementSubset& seed);

// Extracts the sublattice induced on `s`, which must be closed under meet
// and join (throws std::invalid_argument otherwise).  When elements_out is
// given it receives the parent indices in ascending order, i.e. result
// element k corresponds to (*elements_out)[k] in L.
FiniteLattice sublattice(const FiniteLattice& L, const ElementSubset& s,
                         std::vector<int>* elements_out = nullptr);

// Backtracking isomorphism search with invariant pruning (height, cover
// degrees, ideal/filter sizes).  Intended for small lattices (<= ~20
// elements); returns the element bijection L -> K if one exists.
std::optional<std::vector<int>> is_isomorphic(const FiniteLattice& L, const FiniteLattice& K);

}  // namespace lattkit
