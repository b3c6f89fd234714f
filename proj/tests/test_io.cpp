#include "lattkit/io.hpp"

#include "doctest.h"
#include "lattkit/corpus.hpp"

using namespace lattkit;

TEST_CASE("parse a simple lattice file") {
  FiniteLattice L = parse_lattice_text("lattice 2\ncover 0 1\n");
  CHECK(L == named("C2"));
}

TEST_CASE("parse with comments, blank lines and labels") {
  FiniteLattice L = parse_lattice_text(
      "# the five-element diamond\n"
      "lattice 5\n"
      "\n"
      "cover 0 1\ncover 0 2\ncover 0 3\n"
      "cover 1 4\ncover 2 4\ncover 3 4\n"
      "label 0 o\nlabel 1 a\nlabel 2 b\nlabel 3 c\nlabel 4 i\n");
  CHECK(L == named("M3"));
  CHECK(L.label(0) == "o");
  CHECK(L.label(4) == "i");
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_lattice_text(""), ParseError);
  CHECK_THROWS_AS(parse_lattice_text("cover 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_lattice_text("lattice 2\nlattice 2\n"), ParseError);
  CHECK_THROWS_AS(parse_lattice_text("lattice 2\ncover 0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_lattice_text("lattice 2\ncover 0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_lattice_text("lattice 2\nfrobnicate\n"), ParseError);
  CHECK_THROWS_AS(parse_lattice_text("lattice 0\n"), ParseError);
  try {
    parse_lattice_text("lattice 2\ncover 0 5\n");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("emission is deterministic and round-trips") {
  for (const CorpusEntry& e : corpus_entries()) {
    std::string text = to_text(e.lattice);
    FiniteLattice back = parse_lattice_text(text);
    CHECK(back == e.lattice);
    CHECK(to_text(back) == text);
  }
  for (int n = 1; n <= 5; ++n)
    for (const FiniteLattice& L : enumerate_lattices(n)) {
      CHECK(parse_lattice_text(to_text(L)) == L);
    }
}

TEST_CASE("default labels are omitted, custom labels emitted") {
  CHECK(to_text(named("C2")) == "lattice 2\ncover 0 1\n");
  std::string m3 = to_text(named("M3"));
  CHECK(m3.find("label 0 o\n") != std::string::npos);
  // labels with whitespace are sanitized on emission
  FiniteLattice odd = named("C2").with_labels({"lo w", "hi"});
  CHECK(to_text(odd).find("label 0 lo_w\n") != std::string::npos);
}

TEST_CASE("DOT export shape") {
  FiniteLattice m3 = named("M3");
  std::string dot = to_dot(m3);
  CHECK(dot.find("digraph lattice {") == 0);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("n0 [label=\"o\"]") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = dot.find(" -> "); pos != std::string::npos;
       pos = dot.find(" -> ", pos + 1))
    ++edges;
  CHECK(edges == m3.cover_pairs().size());
  CHECK(dot.find("rank=same") != std::string::npos);

  DotOptions opts;
  opts.highlight = {0, 4};
  std::string lit = to_dot(m3, opts);
  CHECK(lit.find("n0 [label=\"o\", style=filled, fillcolor=lightblue]") != std::string::npos);
  CHECK(lit.find("n1 [label=\"a\"]") != std::string::npos);
}
