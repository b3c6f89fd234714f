#pragma once

#include <utility>
#include <vector>

#include "lattkit/lattice.hpp"

namespace lattkit {

// An injective meet- and join-preserving map between two lattices.  The
// constructor validates all three properties and throws
// std::invalid_argument on violation, so an Embedding value is always a
// genuine lattice embedding.
class Embedding {
 public:
  // Empty placeholder; assign a validated embedding before use.
  Embedding() = default;

  Embedding(FiniteLattice source, FiniteLattice target, std::vector<int> map);

  const FiniteLattice& source() const { return source_; }
  const FiniteLattice& target() const { return target_; }
  int operator()(int a) const { return map_[a]; }
  const std::vector<int>& map() const { return map_; }
  ElementSubset image() const;

 private:
  FiniteLattice source_;
  FiniteLattice target_;
  std::vector<int> map_;
};

}  // namespace lattkit
