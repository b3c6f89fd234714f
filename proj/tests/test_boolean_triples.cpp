#include "lattkit/boolean_triples.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "lattkit/corpus.hpp"
#include "oracles.hpp"

using namespace lattkit;

namespace {
// M3 elements by label: o=0, a=1, b=2, c=3, i=4
constexpr int o = 0, a = 1, b = 2, c = 3, i = 4;
}  // namespace

TEST_CASE("condition on triples: diagonal, chain, M3 cases") {
  FiniteLattice m3 = named("M3");
  FiniteLattice c3 = named("C3");
  for (int x = 0; x < 5; ++x) CHECK(is_boolean(m3, {x, x, x}));
  CHECK_FALSE(is_boolean(c3, {0, 1, 2}));     // <0,m,1> in the chain
  CHECK(is_boolean(m3, {a, b, o}));           // <a,b,a^b>
  CHECK(is_balanced(m3, {a, b, c}));          // pairwise meets all o
  CHECK_FALSE(is_boolean(m3, {a, b, c}));     // (avb)^(avc) = i != a
}

TEST_CASE("every Boolean triple is balanced") {
  for (const char* name : {"C4", "B2", "M3", "N5", "B3"}) {
    FiniteLattice L = named(name);
    for (int x = 0; x < L.size(); ++x)
      for (int y = 0; y < L.size(); ++y)
        for (int z = 0; z < L.size(); ++z)
          if (is_boolean(L, {x, y, z})) CHECK(is_balanced(L, {x, y, z}));
  }
}

TEST_CASE("boolean_closure on the M3 examples") {
  FiniteLattice m3 = named("M3");
  CHECK(boolean_closure(m3, {a, a, a}) == Triple{a, a, a});
  CHECK(boolean_closure(m3, {b, c, a}) == Triple{i, i, i});
}

TEST_CASE("<x,0,1> closes to <x,x,1> in any bounded lattice") {
  for (const char* name : {"C3", "B2", "M3", "N5", "B3", "M3xC2"}) {
    FiniteLattice L = named(name);
    for (int x = 0; x < L.size(); ++x)
      CHECK(boolean_closure(L, {x, L.bottom(), L.top()}) == Triple{x, x, L.top()});
  }
}

TEST_CASE("boolean_closure is a closure operator with least-above minimality") {
  for (const char* name : {"C3", "M3", "N5"}) {
    FiniteLattice L = named(name);
    const int n = L.size();
    std::vector<Triple> all;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) all.push_back({x, y, z});
    auto tle = [&](Triple s, Triple t) {
      return L.leq(s.x, t.x) && L.leq(s.y, t.y) && L.leq(s.z, t.z);
    };
    for (Triple t : all) {
      Triple cl = boolean_closure(L, t);
      CHECK(tle(t, cl));
      CHECK(is_boolean(L, cl));
      CHECK(boolean_closure(L, cl) == cl);
      CHECK((is_boolean(L, t) == (cl == t)));
      for (Triple s : all) {
        if (tle(t, s)) {
          CHECK(tle(boolean_closure(L, t), boolean_closure(L, s)));
          if (is_boolean(L, s)) CHECK(tle(cl, s));
        }
      }
    }
  }
}

TEST_CASE("meet representations") {
  FiniteLattice m3 = named("M3");
  CHECK(meet_representation(m3, {a, a, a}) == Triple{a, a, a});
  CHECK(meet_representation(m3, {a, b, o}) == Triple{i, a, b});
  FiniteLattice c3 = named("C3");
  CHECK_FALSE(meet_representation(c3, {0, 1, 2}).has_value());
}

TEST_CASE("Boolean iff some exhaustive meet representation exists") {
  for (const char* name : {"C3", "B2", "M3", "N5"}) {
    FiniteLattice L = named(name);
    const int n = L.size();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          bool found = false;
          for (int u = 0; u < n && !found; ++u)
            for (int v = 0; v < n && !found; ++v)
              for (int w = 0; w < n && !found; ++w)
                if (L.meet(u, v) == x && L.meet(u, w) == y && L.meet(v, w) == z) found = true;
          CHECK(found == is_boolean(L, {x, y, z}));
          CHECK(found == meet_representation(L, {x, y, z}).has_value());
        }
  }
}

TEST_CASE("m3_hat on the two-element chain is the diamond") {
  TripleLattice M = m3_hat(named("C2"));
  CHECK(M.size() == 5);
  std::vector<Triple> expected{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}};
  CHECK(M.members() == expected);
  CHECK(is_isomorphic(M.lattice(), named("M3")).has_value());
}

TEST_CASE("m3_hat sizes") {
  CHECK(m3_hat(named("C1")).size() == 1);
  CHECK(m3_hat(named("C3")).size() == 12);
  CHECK(m3_hat(named("M3")).size() == 44);
  CHECK(m3_hat(named("N5")).size() == 41);
  CHECK(m3_hat(named("B3")).size() == 125);
}

TEST_CASE("m3_hat is strictly bigger than the diagonal for |L| >= 2") {
  for (const char* name : {"C2", "C3", "B2", "M3", "N5"}) {
    FiniteLattice L = named(name);
    TripleLattice M = m3_hat(L);
    CHECK(M.size() > L.size());
    // <a,a,b> with a < b is a member off the diagonal
    auto [lo, hi] = L.cover_pairs().front();
    int idx = M.index_of({lo, lo, hi});
    CHECK(idx >= 0);
    CHECK(M.member(idx).x == lo);
  }
}

TEST_CASE("m3_hat member order is componentwise") {
  FiniteLattice L = named("N5");
  TripleLattice M = m3_hat(L);
  for (int p = 0; p < M.size(); ++p)
    for (int q = 0; q < M.size(); ++q) {
      Triple s = M.member(p), t = M.member(q);
      bool cw = L.leq(s.x, t.x) && L.leq(s.y, t.y) && L.leq(s.z, t.z);
      CHECK(M.lattice().leq(p, q) == cw);
    }
}

TEST_CASE("m3_hat respects the candidate cap") {
  CHECK_THROWS_AS(m3_hat(named("B3"), 100), SizeLimitExceeded);
}

TEST_CASE("classification of the four shapes") {
  FiniteLattice m3 = named("M3");
  auto diag = classify_boolean(m3, {c, c, c});
  CHECK(diag.kind == TripleCase::Diagonal);
  CHECK(diag.diagonal_value == c);
  CHECK(diag.reconstruct() == Triple{c, c, c});

  FiniteLattice c2 = named("C2");
  auto two = classify_boolean(c2, {0, 0, 1});
  CHECK(two.kind == TripleCase::TwoValues);
  CHECK(two.small == 0);
  CHECK(two.big == 1);
  CHECK(two.big_position == 2);
  CHECK(two.reconstruct() == Triple{0, 0, 1});

  auto pair = classify_boolean(m3, {a, b, o});
  CHECK(pair.kind == TripleCase::ComparablePairWithMeet);
  CHECK(pair.meet_position == 2);
  CHECK(pair.meet_value == o);
  CHECK(pair.p == a);
  CHECK(pair.q == b);
  CHECK(pair.reconstruct() == Triple{a, b, o});

  FiniteLattice b3 = named("B3");
  auto atoms = classify_boolean(b3, {1, 2, 4});  // the three atoms of the cube
  CHECK(atoms.kind == TripleCase::AtomsOfBoolean8);
  CHECK(atoms.boolean8 == std::array<int, 8>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(atoms.reconstruct() == Triple{1, 2, 4});

  CHECK_THROWS_AS(classify_boolean(m3, {a, b, c}), NotBoolean);
}

TEST_CASE("classification is total and reconstructible over small corpora") {
  for (const char* name : {"C4", "B2", "M3", "N5", "B3", "M3xC2"}) {
    FiniteLattice L = named(name);
    TripleLattice M = m3_hat(L);
    for (Triple t : M.members()) {
      TripleClassification tc = classify_boolean(L, t);
      CHECK(tc.reconstruct() == t);
    }
  }
}

TEST_CASE("zero embedding lands on an ideal") {
  TripleLattice M = m3_hat(named("C2"));
  Embedding e = zero_embedding(M);
  CHECK(e.image() == ElementSubset::of(5, {M.index_of({0, 0, 0}), M.index_of({1, 0, 0})}));
  CHECK(is_ideal(M.lattice(), e.image()));
  for (const char* name : {"C3", "M3", "N5", "B2"}) {
    TripleLattice Mn = m3_hat(named(name));
    Embedding en = zero_embedding(Mn);  // constructor validates meet/join preservation
    CHECK(is_ideal(Mn.lattice(), en.image()));
    CHECK(is_isomorphic(sublattice(Mn.lattice(), en.image()), Mn.base()).has_value());
  }
}

TEST_CASE("spanning M3") {
  TripleLattice M2 = m3_hat(named("C2"));
  auto five2 = spanning_m3(M2);
  CHECK(ElementSubset::of(M2.size(), std::span<const int>(five2.data(), 5)).count() == 5);

  TripleLattice M3c3 = m3_hat(named("C3"));
  auto five = spanning_m3(M3c3);
  const FiniteLattice& K = M3c3.lattice();
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      if (p != q) {
        CHECK(K.meet(five[p], five[q]) == five[0]);
        CHECK(K.join(five[p], five[q]) == five[4]);
      }
  CHECK(five[0] == K.bottom());
  CHECK(five[4] == K.top());

  TripleLattice Mm3 = m3_hat(named("M3"));
  auto fm = spanning_m3(Mm3);
  ElementSubset s = ElementSubset::of(Mm3.size(), std::span<const int>(fm.data(), 5));
  CHECK(is_isomorphic(sublattice(Mm3.lattice(), s), named("M3")).has_value());

  CHECK_THROWS_AS(spanning_m3(m3_hat(named("C1"))), TrivialLattice);
}

TEST_CASE("congruence lifting") {
  FiniteLattice c3 = named("C3");
  TripleLattice M = m3_hat(c3);
  CHECK(lift_congruence(M, Congruence::identity(3)) == Congruence::identity(M.size()));
  CHECK(lift_congruence(M, Congruence::universal(3)) == Congruence::universal(M.size()));

  Congruence theta = principal_congruence(c3, 0, 1);  // collapse {0, m}
  Congruence lifted = lift_congruence(M, theta);
  CHECK(is_congruence(M.lattice(), lifted));
  std::vector<int> raw(M.size());
  for (int k = 0; k < M.size(); ++k) raw[k] = lifted.block_id(k);
  CHECK(oracle::is_congruence_full_scan(M.lattice(), raw));
}

TEST_CASE("lift is injective and restricting along the diagonal undoes it") {
  for (const char* name : {"C2", "C4", "B2", "M3", "N5", "M3xC2", "Fano"}) {
    FiniteLattice L = named(name);
    TripleLattice M = m3_hat(L);
    CongruenceLattice cl = all_congruences(L);
    std::set<Congruence> lifted;
    for (const Congruence& theta : cl.congruences) {
      Congruence up = lift_congruence(M, theta);
      CHECK(lifted.insert(up).second);  // injective
      CHECK(restrict_congruence(up, M.diagonal()) == theta);
    }
  }
}
