#include "lattkit/extensions.hpp"

#include <numeric>

#include "doctest.h"
#include "lattkit/boolean_triples.hpp"
#include "lattkit/corpus.hpp"

using namespace lattkit;

TEST_CASE("identity embedding: improper but congruence-preserving") {
  FiniteLattice m3 = named("M3");
  std::vector<int> id(5);
  std::iota(id.begin(), id.end(), 0);
  ExtensionReport rep = verify_extension(Embedding(m3, m3, id));
  CHECK_FALSE(rep.proper);
  CHECK(rep.congruence_preserving);
  CHECK(rep.extensive);
  CHECK(rep.image_is_ideal);
  REQUIRE(rep.failure.has_value());
  CHECK(rep.failure->verdict == "proper");
}

TEST_CASE("diagonal embedding into m3_hat: proper, congruence-preserving, extensive") {
  for (const char* name : {"C2", "C3", "B2", "M3", "N5"}) {
    TripleLattice M = m3_hat(named(name));
    ExtensionReport rep = verify_extension(M.diagonal());
    CHECK(rep.proper);
    CHECK(rep.congruence_preserving);
    CHECK(rep.extensive);
    CHECK(rep.con_source == rep.con_target);
    CHECK_FALSE(rep.image_is_ideal);  // the diagonal is not downward closed for |L| >= 2
  }
}

TEST_CASE("C2 into C3 as the bounds is not congruence-preserving") {
  FiniteLattice c2 = named("C2"), c3 = named("C3");
  ExtensionReport rep = verify_extension(Embedding(c2, c3, {0, 2}));
  CHECK(rep.proper);
  CHECK_FALSE(rep.congruence_preserving);
  CHECK(rep.con_source == 2);
  CHECK(rep.con_target == 4);
  REQUIRE(rep.failure.has_value());
  CHECK(rep.failure->verdict == "congruence_preserving");
  CHECK(rep.failure->congruence.has_value());
}

TEST_CASE("report verdicts are mutually consistent") {
  for (const char* name : {"C2", "C4", "M3"}) {
    TripleLattice M = m3_hat(named(name));
    ExtensionReport rep = verify_extension(M.diagonal());
    if (rep.congruence_preserving) CHECK(rep.con_source == rep.con_target);
  }
}

TEST_CASE("report serialization") {
  TripleLattice M = m3_hat(named("C2"));
  ExtensionReport rep = verify_extension(M.diagonal());
  CHECK(rep.summary_line() ==
        "proper=yes congruence_preserving=yes extensive=yes image_is_ideal=no "
        "con_source=2 con_target=2");
  CHECK(rep.to_text().find("proper: yes\n") != std::string::npos);
  // the diagonal image is not an ideal, and that is the first false verdict
  CHECK(rep.to_text().find("failure: image_is_ideal\n") != std::string::npos);

  std::vector<int> id(5);
  std::iota(id.begin(), id.end(), 0);
  FiniteLattice m3 = named("M3");
  ExtensionReport clean = verify_extension(Embedding(m3, m3, id));
  CHECK(clean.to_text().find("failure: proper\n") != std::string::npos);
}

TEST_CASE("gluing two chains stacks them") {
  FiniteLattice c2 = named("C2");
  std::vector<int> iso(2, -1);
  iso[1] = 0;  // top of the lower chain = bottom of the upper chain
  Gluing g = glue(c2, ElementSubset::of(2, {1}), c2, ElementSubset::of(2, {0}), iso);
  CHECK(g.result.size() == 3);
  CHECK(is_isomorphic(g.result, named("C3")).has_value());

  // once more on top: C4
  std::vector<int> iso2(3, -1);
  iso2[g.result.top()] = 0;
  Gluing g2 = glue(g.result, ElementSubset::of(3, {g.result.top()}), c2,
                   ElementSubset::of(2, {0}), iso2);
  CHECK(is_isomorphic(g2.result, named("C4")).has_value());
}

TEST_CASE("gluing M3 with a chain on top keeps M3 as an ideal") {
  FiniteLattice m3 = named("M3"), c2 = named("C2");
  std::vector<int> iso(5, -1);
  iso[4] = 0;  // i |-> bottom of C2
  Gluing g = glue(m3, ElementSubset::of(5, {4}), c2, ElementSubset::of(2, {0}), iso);
  CHECK(g.result.size() == 6);
  CHECK(is_ideal(g.result, g.lower.image()));
  CHECK(is_filter(g.result, g.upper.image()));
}

TEST_CASE("glue rejects bad inputs") {
  FiniteLattice m3 = named("M3"), c2 = named("C2");
  std::vector<int> iso(5, -1);
  iso[1] = 0;
  // {a} is not a filter of M3
  CHECK_THROWS_AS(glue(m3, ElementSubset::of(5, {1}), c2, ElementSubset::of(2, {0}), iso),
                  NotAFilter);
  // {1} (the top of C2) is not an ideal
  std::vector<int> iso2(5, -1);
  iso2[4] = 1;
  CHECK_THROWS_AS(glue(m3, ElementSubset::of(5, {4}), c2, ElementSubset::of(2, {1}), iso2),
                  NotAnIdeal);
  // size mismatch between filter and ideal
  std::vector<int> iso3(5, -1);
  iso3[4] = 0;
  CHECK_THROWS_AS(glue(m3, ElementSubset::of(5, {4}), c2, ElementSubset::of(2, {0, 1}), iso3),
                  NotIsomorphism);
  // order-reversing map between two-element chains
  FiniteLattice c3 = named("C3");
  std::vector<int> iso4(3, -1);
  iso4[1] = 1;
  iso4[2] = 0;
  CHECK_THROWS_AS(glue(c3, ElementSubset::of(3, {1, 2}), c3, ElementSubset::of(3, {0, 1}), iso4),
                  NotIsomorphism);
}

TEST_CASE("ideal extension of C2 at the bottom") {
  IdealExtension ext = ideal_extension(named("C2"), 0);
  CHECK(ext.result.size() == 5);  // 2 + (5 - 2)
  ExtensionReport rep = verify_extension(ext.embedding);
  CHECK(rep.proper);
  CHECK(rep.congruence_preserving);
  CHECK(rep.image_is_ideal);
  CHECK(rep.con_source == 2);
  CHECK(rep.con_target == 2);
}

TEST_CASE("ideal extension of M3 at the bottom") {
  IdealExtension ext = ideal_extension(named("M3"), 0);
  CHECK(ext.result.size() == 5 + 44 - 5);
  ExtensionReport rep = verify_extension(ext.embedding);
  CHECK(rep.proper);
  CHECK(rep.congruence_preserving);
  CHECK(rep.image_is_ideal);
}

TEST_CASE("ideal extension requires a nontrivial filter") {
  CHECK_THROWS_AS(ideal_extension(named("M3"), 4), FilterTooSmall);
  CHECK_THROWS_AS(ideal_extension(named("C1"), 0), FilterTooSmall);
}
