#include "lattkit/m3d.hpp"

#include <set>

#include "doctest.h"
#include "lattkit/corpus.hpp"
#include "lattkit/extensions.hpp"
#include "oracles.hpp"

using namespace lattkit;

TEST_CASE("balanced poset membership") {
  BalancedTriplePoset P2 = balanced_poset(named("C2"));
  CHECK(P2.size() == 5);
  CHECK(P2.members == m3_hat(named("C2")).members());

  BalancedTriplePoset P1 = balanced_poset(named("C1"));
  CHECK(P1.size() == 1);

  BalancedTriplePoset Pm3 = balanced_poset(named("M3"));
  CHECK(Pm3.size() == 50);
  CHECK(Pm3.index_of({1, 2, 3}) >= 0);                 // <a,b,c> is balanced
  CHECK_FALSE(is_boolean(named("M3"), {1, 2, 3}));     // but not Boolean
}

TEST_CASE("Boolean triples are a subset of the balanced triples everywhere") {
  for (const char* name : {"C4", "B2", "B3", "M3", "N5", "M3xC2"}) {
    FiniteLattice L = named(name);
    BalancedTriplePoset P = balanced_poset(L);
    TripleLattice M = m3_hat(L);
    for (Triple t : M.members()) CHECK(P.index_of(t) >= 0);
    // distributive lattices have no extra balanced triples; some
    // nondistributive ones (N5) happen to have none either
    if (is_distributive(L)) CHECK(P.size() == M.size());
  }
  CHECK(balanced_poset(named("M3")).size() > m3_hat(named("M3")).size());
  CHECK(balanced_poset(named("N5")).size() == m3_hat(named("N5")).size());
}

TEST_CASE("m3_of_d on C2 is the diamond") {
  M3OfD md = m3_of_d(named("C2"));
  CHECK(md.lattice.size() == 5);
  CHECK(is_isomorphic(md.lattice, named("M3")).has_value());
}

TEST_CASE("m3_of_d on C3 equals m3_hat(C3) memberwise") {
  M3OfD md = m3_of_d(named("C3"));
  TripleLattice M = m3_hat(named("C3"));
  CHECK(md.members.size() == 12);
  CHECK(md.members == M.members());
  for (int p = 0; p < md.lattice.size(); ++p)
    for (int q = 0; q < md.lattice.size(); ++q) {
      CHECK(md.lattice.meet(p, q) == M.lattice().meet(p, q));
      CHECK(md.lattice.join(p, q) == M.lattice().join(p, q));
    }
}

TEST_CASE("m3_of_d on B2 is a modular congruence-preserving extension") {
  FiniteLattice b2 = named("B2");
  M3OfD md = m3_of_d(b2);
  CHECK(is_modular(md.lattice));
  CHECK(all_congruences(b2).congruences.size() == 4);
  ExtensionReport rep = verify_extension(md.ideal_embedding);
  CHECK(rep.congruence_preserving);
  CHECK(rep.image_is_ideal);
  CHECK(rep.proper);
  CHECK(rep.con_source == 4);
  CHECK(rep.con_target == 4);
}

TEST_CASE("m3_of_d refuses nondistributive input") {
  CHECK_THROWS_AS(m3_of_d(named("M3")), NotDistributive);
  CHECK_THROWS_AS(m3_of_d(named("N5")), NotDistributive);
}

TEST_CASE("the spanning M3 and the ideal copy generate M3[D]") {
  for (const char* name : {"C3", "B2"}) {
    M3OfD md = m3_of_d(named(name));
    const FiniteLattice& K = md.lattice;
    FiniteLattice D = named(name);
    ElementSubset gen = md.ideal_embedding.image();
    int b = D.bottom(), t = D.top();
    for (Triple s : {Triple{b, b, b}, Triple{t, b, b}, Triple{b, t, b}, Triple{b, b, t},
                     Triple{t, t, t}})
      gen.add(md.index_of(s));
    bool grew = true;
    while (grew) {
      grew = false;
      auto elems = gen.elements();
      for (std::size_t p = 0; p < elems.size(); ++p)
        for (std::size_t q = p; q < elems.size(); ++q) {
          for (int v : {K.meet(elems[p], elems[q]), K.join(elems[p], elems[q])})
            if (!gen.contains(v)) {
              gen.add(v);
              grew = true;
            }
        }
    }
    CHECK(gen.count() == K.size());
  }
}

// The balanced poset of a finite lattice is always a lattice: balanced
// triples are closed under componentwise meet, and a finite
// meet-semilattice with a top element is a lattice.  The witness search
// machinery is exercised against a brute-force oracle instead of a
// positive witness.
TEST_CASE("balanced poset lattice check against the brute-force oracle") {
  auto brute_is_lattice = [](const FiniteLattice& L) {
    BalancedTriplePoset P = balanced_poset(L);
    auto leq = [&](int s, int t) { return P.leq.get(s, t); };
    for (int s = 0; s < P.size(); ++s)
      for (int t = 0; t < P.size(); ++t)
        if (!oracle::glb_scan(P.size(), leq, s, t) || !oracle::lub_scan(P.size(), leq, s, t))
          return false;
    return true;
  };
  for (const char* name : {"C3", "B2", "M3", "N5"}) {
    FiniteLattice L = named(name);
    CHECK(brute_is_lattice(L));
    CHECK_FALSE(balanced_lattice_failure(L).has_value());
  }
  for (int n = 1; n <= 5; ++n)
    for (const FiniteLattice& L : enumerate_lattices(n))
      CHECK_FALSE(balanced_lattice_failure(L).has_value());
}

TEST_CASE("componentwise meets of balanced triples are balanced") {
  for (const char* name : {"M3", "N5", "M3xC2"}) {
    FiniteLattice L = named(name);
    BalancedTriplePoset P = balanced_poset(L);
    for (Triple s : P.members)
      for (Triple t : P.members) {
        Triple m{L.meet(s.x, t.x), L.meet(s.y, t.y), L.meet(s.z, t.z)};
        CHECK(is_balanced(L, m));
      }
  }
}
