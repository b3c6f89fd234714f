#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lattkit {

// Base class for everything lattkit throws on domain-level failures.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A poset handed to a lattice constructor has a pair with no unique
// greatest lower / least upper bound.  `join_side` is true when the least
// upper bound is missing, false for the greatest lower bound.
struct NotALattice : Error {
  NotALattice(int a_, int b_, bool join_side_)
      : Error("not a lattice: elements " + std::to_string(a_) + " and " +
              std::to_string(b_) +
              (join_side_ ? " have no least upper bound"
                          : " have no greatest lower bound")),
        a(a_), b(b_), join_side(join_side_) {}
  int a;
  int b;
  bool join_side;
};

struct CyclicCovers : Error {
  explicit CyclicCovers(const std::string& msg) : Error("cyclic covers: " + msg) {}
};

struct SizeLimitExceeded : Error {
  SizeLimitExceeded(const std::string& kind, std::size_t requested_, std::size_t limit_)
      : Error("size limit exceeded: " + kind + " needs " + std::to_string(requested_) +
              ", cap is " + std::to_string(limit_)),
        requested(requested_), limit(limit_) {}
  std::size_t requested;
  std::size_t limit;
};

struct NotDistributive : Error {
  explicit NotDistributive(const std::string& msg) : Error("not distributive: " + msg) {}
};

struct NotBoolean : Error {
  explicit NotBoolean(const std::string& msg) : Error("not a Boolean triple: " + msg) {}
};

struct UnknownName : Error {
  explicit UnknownName(const std::string& name)
      : Error("unknown corpus lattice: " + name) {}
};

struct NotAFilter : Error {
  explicit NotAFilter(const std::string& msg) : Error("not a filter: " + msg) {}
};

struct NotAnIdeal : Error {
  explicit NotAnIdeal(const std::string& msg) : Error("not an ideal: " + msg) {}
};

struct NotIsomorphism : Error {
  explicit NotIsomorphism(const std::string& msg) : Error("not an isomorphism: " + msg) {}
};

struct FilterTooSmall : Error {
  explicit FilterTooSmall(const std::string& msg) : Error("filter too small: " + msg) {}
};

struct TrivialLattice : Error {
  explicit TrivialLattice(const std::string& msg) : Error("trivial lattice: " + msg) {}
};

struct ParseError : Error {
  ParseError(int line_, const std::string& msg)
      : Error("parse error (line " + std::to_string(line_) + "): " + msg), line(line_) {}
  int line;
};

}  // namespace lattkit
