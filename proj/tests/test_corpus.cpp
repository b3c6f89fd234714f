#include "lattkit/corpus.hpp"

#include <set>

#include "doctest.h"
#include "lattkit/congruence.hpp"
#include "oracles.hpp"

using namespace lattkit;

TEST_CASE("named lattices") {
  CHECK(named("C1").size() == 1);
  CHECK(named("C6").size() == 6);
  CHECK(named("B2").size() == 4);
  CHECK(named("B3").size() == 8);
  CHECK(named("M3").size() == 5);
  CHECK(named("N5").size() == 5);
  CHECK(named("M3xC2").size() == 10);
  CHECK(named("Fano").size() == 16);
  CHECK_THROWS_AS(named("Z9"), UnknownName);
}

TEST_CASE("corpus flags agree with the predicates") {
  for (const CorpusEntry& e : corpus_entries()) {
    if (e.distributive) CHECK(*e.distributive == is_distributive(e.lattice));
    if (e.modular) CHECK(*e.modular == is_modular(e.lattice));
    if (e.simple) CHECK(*e.simple == (all_congruences(e.lattice).congruences.size() == 2));
  }
}

TEST_CASE("the Fano lattice is the height-3 plane of 7 points and 7 lines") {
  FiniteLattice f = named("Fano");
  CHECK(is_modular(f));
  CHECK_FALSE(is_distributive(f));
  int points = 0, lines = 0;
  for (int e = 0; e < f.size(); ++e) {
    if (e == f.bottom() || e == f.top()) continue;
    if (f.height(e) == 1) ++points;
    if (f.height(e) == 2) ++lines;
  }
  CHECK(points == 7);
  CHECK(lines == 7);
  // every line holds exactly 3 points; every point lies on exactly 3 lines
  for (int e = 0; e < f.size(); ++e) {
    if (f.height(e) == 2) {
      int on_line = 0;
      for (int p = 0; p < f.size(); ++p)
        if (f.height(p) == 1 && f.leq(p, e)) ++on_line;
      CHECK(on_line == 3);
    }
    if (f.height(e) == 1) {
      int through = 0;
      for (int l = 0; l < f.size(); ++l)
        if (f.height(l) == 2 && f.leq(e, l)) ++through;
      CHECK(through == 3);
    }
  }
  // two distinct points span a line, two distinct lines meet in a point
  for (int p = 1; p <= 7; ++p)
    for (int q = p + 1; q <= 7; ++q) CHECK(f.height(f.join(p, q)) == 2);
}

TEST_CASE("product order is pairwise") {
  FiniteLattice p = product(named("M3"), named("C2"));
  CHECK(p == named("M3xC2"));
  FiniteLattice b2 = product(named("C2"), named("C2"));
  CHECK(is_isomorphic(b2, named("B2")).has_value());
}

TEST_CASE("enumerate_lattices counts, frozen and against the slow enumerator") {
  const int expected[] = {0, 1, 1, 1, 2, 7, 39};
  for (int n = 1; n <= 6; ++n) {
    auto all = enumerate_lattices(n);
    CHECK(static_cast<int>(all.size()) == expected[n]);
    if (n <= 5) {
      auto slow = oracle::lattice_orders_by_covers(n);
      std::set<std::vector<std::uint64_t>> fast;
      for (const FiniteLattice& L : all) {
        std::vector<std::uint64_t> up(n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (L.leq(i, j)) up[i] |= std::uint64_t{1} << j;
        fast.insert(up);
      }
      CHECK(fast == slow);
    }
  }
  CHECK_THROWS_AS(enumerate_lattices(7), SizeLimitExceeded);
}

TEST_CASE("the five-element enumeration hits the known shapes") {
  auto all = enumerate_lattices(5);
  bool has_chain = false, has_m3 = false, has_n5 = false;
  for (const FiniteLattice& L : all) {
    if (is_isomorphic(L, named("C5"))) has_chain = true;
    if (is_isomorphic(L, named("M3"))) has_m3 = true;
    if (is_isomorphic(L, named("N5"))) has_n5 = true;
  }
  CHECK(has_chain);
  CHECK(has_m3);
  CHECK(has_n5);
}

TEST_CASE("enumeration is deterministic and bottoms are element 0") {
  auto a = enumerate_lattices(4);
  auto b = enumerate_lattices(4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  for (int n = 1; n <= 5; ++n)
    for (const FiniteLattice& L : enumerate_lattices(n)) {
      CHECK(L.bottom() == 0);
      CHECK(L.top() == n - 1);
    }
}

TEST_CASE("random lattices are deterministic, valid, and sized as requested") {
  CHECK(random_lattice(1, 7).size() == 1);
  CHECK(random_lattice(2, 7).size() == 2);
  for (std::uint64_t seed : {1ull, 42ull, 1234ull}) {
    FiniteLattice a = random_lattice(8, seed);
    FiniteLattice b = random_lattice(8, seed);
    CHECK(a == b);
    CHECK(a.size() >= 2);
    // full invariant scan
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y) {
        CHECK(a.meet(x, a.join(x, y)) == x);
        CHECK(a.join(x, a.meet(x, y)) == x);
      }
  }
  CHECK(random_lattice(8, 42).size() == 8);
}
