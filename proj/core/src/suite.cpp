#include "lattkit/suite.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "lattkit/boolean_triples.hpp"
#include "lattkit/congruence.hpp"
#include "lattkit/corpus.hpp"
#include "lattkit/extensions.hpp"
#include "lattkit/lattice.hpp"
#include "lattkit/m3d.hpp"

namespace lattkit::suite {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << "FAILED: " << what;
    }
  }
  void note(const std::string& s) {
    if (detail.tellp() > 0) detail << "; ";
    detail << s;
  }
};

// The main sweep: every labeled lattice on 2..5 elements plus the named
// nondistributive/bigger cases.
std::vector<std::pair<std::string, FiniteLattice>> main_sweep() {
  std::vector<std::pair<std::string, FiniteLattice>> out;
  for (int n = 2; n <= 5; ++n) {
    auto all = enumerate_lattices(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      out.emplace_back("enum" + std::to_string(n) + "#" + std::to_string(i), all[i]);
  }
  for (const char* name : {"M3", "N5", "B3", "M3xC2"}) out.emplace_back(name, named(name));
  return out;
}

std::vector<std::pair<std::string, FiniteLattice>> distributive_sweep() {
  std::vector<std::pair<std::string, FiniteLattice>> out;
  for (const char* name : {"C2", "C3", "C4", "C5", "C6", "B2", "B3"})
    out.emplace_back(name, named(name));
  out.emplace_back("C2xC3", product(named("C2"), named("C3")));
  out.emplace_back("C2xC4", product(named("C2"), named("C4")));
  return out;
}

std::set<Congruence> congruence_set(const CongruenceLattice& cl) {
  return {cl.congruences.begin(), cl.congruences.end()};
}

// ---- criteria ---------------------------------------------------------------

CriterionResult c1_m3hat_c2(const SuiteOptions& opts) {
  Check c;
  TripleLattice M = m3_hat(named("C2"), opts.max_triples);
  c.require(M.size() == 5, "expected 5 members");
  std::vector<Triple> expected{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}};
  std::vector<Triple> got = M.members();
  std::sort(expected.begin(), expected.end());
  c.require(got == expected, "member set differs from the five expected triples");
  c.require(is_isomorphic(M.lattice(), named("M3")).has_value(), "not isomorphic to M3");
  if (c.ok) c.note("5 members, isomorphic to M3");
  return {1, "m3hat(C2) is exactly the five expected triples and is isomorphic to M3", c.ok,
          c.detail.str()};
}

CriterionResult c2_m3hat_c3_count(const SuiteOptions& opts) {
  Check c;
  FiniteLattice C3 = named("C3");
  TripleLattice M = m3_hat(C3, opts.max_triples);
  // independent filter over all 27 candidate triples
  int count = 0;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) {
        int jxy = C3.join(x, y), jxz = C3.join(x, z), jyz = C3.join(y, z);
        if (x == C3.meet(jxy, jxz) && y == C3.meet(jxy, jyz) && z == C3.meet(jxz, jyz)) ++count;
      }
  c.require(M.size() == 12, "expected 12 members, got " + std::to_string(M.size()));
  c.require(count == 12, "direct filter disagrees: " + std::to_string(count));
  if (c.ok) c.note("12 members, matches the direct 27-triple filter");
  return {2, "m3hat(C3) has exactly 12 members, matching a direct filter", c.ok, c.detail.str()};
}

CriterionResult c3_proper_congruence_preserving(const SuiteOptions& opts) {
  Check c;
  int checked = 0;
  for (auto& [name, L] : main_sweep()) {
    TripleLattice M = m3_hat(L, opts.max_triples);
    ExtensionReport rep = verify_extension(M.diagonal(), opts.max_congruences);
    c.require(rep.proper, name + ": diagonal extension not proper");
    c.require(rep.congruence_preserving, name + ": not congruence-preserving");
    if (M.size() <= 6) {
      auto oracle = congruences_by_partition_scan(M.lattice());
      auto engine = all_congruences(M.lattice(), opts.max_congruences);
      c.require(std::set<Congruence>(oracle.begin(), oracle.end()) == congruence_set(engine),
                name + ": partition-filter oracle disagrees on Con(m3hat)");
    }
    if (!c.ok) break;
    ++checked;
  }
  if (c.ok) c.note(std::to_string(checked) + " lattices: proper and congruence-preserving");
  return {3, "the diagonal embedding into m3hat(L) is proper and congruence-preserving (sweep)",
          c.ok, c.detail.str()};
}

CriterionResult c4_extensive(const SuiteOptions& opts) {
  Check c;
  int checked = 0;
  for (auto& [name, L] : main_sweep()) {
    TripleLattice M = m3_hat(L, opts.max_triples);
    ElementSubset hull = convex_sublattice_generated(M.lattice(), M.diagonal().image());
    c.require(hull.count() == M.size(), name + ": convex hull of the diagonal is not everything");
    if (!c.ok) break;
    ++checked;
  }
  if (c.ok) c.note(std::to_string(checked) + " lattices: extensive");
  return {4, "the diagonal embedding into m3hat(L) is extensive (sweep)", c.ok, c.detail.str()};
}

CriterionResult c5_modular_iff_distributive(const SuiteOptions& opts) {
  Check c;
  int checked = 0;
  for (auto& [name, L] : main_sweep()) {
    TripleLattice M = m3_hat(L, opts.max_triples);
    bool lhs = is_modular(M.lattice());
    bool rhs = is_distributive(L);
    c.require(lhs == rhs, name + ": is_modular(m3hat) != is_distributive(L)");
    if (!c.ok) break;
    ++checked;
  }
  if (c.ok) {
    // the concrete N5 inside m3hat(M3): elements of M3 are o,a,b,c,i = 0..4
    FiniteLattice m3 = named("M3");
    TripleLattice M = m3_hat(m3, opts.max_triples);
    const Triple t_ooa{0, 0, 1}, t_oca{0, 3, 1}, t_cci{3, 3, 4}, t_iii{4, 4, 4}, t_boa{2, 0, 1};
    int i_ooa = M.index_of(t_ooa), i_oca = M.index_of(t_oca), i_cci = M.index_of(t_cci),
        i_iii = M.index_of(t_iii), i_boa = M.index_of(t_boa);
    c.require(i_ooa >= 0 && i_oca >= 0 && i_cci >= 0 && i_iii >= 0 && i_boa >= 0,
              "an expected N5 triple is not a member");
    if (c.ok) {
      c.require(M.lattice().meet(i_cci, i_boa) == i_ooa, "<c,c,i> ^ <b,o,a> != <o,o,a>");
      c.require(M.lattice().join(i_oca, i_boa) == i_iii, "<o,c,a> v <b,o,a> != <i,i,i>");
      ElementSubset five = ElementSubset::of(M.size(), {i_ooa, i_oca, i_cci, i_iii, i_boa});
      FiniteLattice sub = sublattice(M.lattice(), five);
      c.require(is_isomorphic(sub, named("N5")).has_value(),
                "the five triples do not form an N5 sublattice");
    }
    if (c.ok)
      c.note(std::to_string(checked) + " lattices: equivalence holds; N5 witness verified in "
             "m3hat(M3)");
  }
  return {5, "m3hat(L) is modular iff L is distributive; the concrete N5 sits in m3hat(M3)", c.ok,
          c.detail.str()};
}

CriterionResult c6_m3d(const SuiteOptions& opts) {
  Check c;
  int checked = 0;
  for (auto& [name, D] : distributive_sweep()) {
    M3OfD md = m3_of_d(D, opts.max_triples);
    const FiniteLattice& K = md.lattice;
    c.require(is_modular(K), name + ": M3[D] is not modular");

    // the five-triple spanning sublattice is isomorphic to M3
    int b = D.bottom(), t = D.top();
    std::array<int, 5> five{md.index_of({b, b, b}), md.index_of({t, b, b}),
                            md.index_of({b, t, b}), md.index_of({b, b, t}),
                            md.index_of({t, t, t})};
    bool present = std::all_of(five.begin(), five.end(), [](int i) { return i >= 0; });
    c.require(present, name + ": spanning triple missing");
    if (present) {
      ElementSubset s = ElementSubset::of(K.size(), std::span<const int>(five.data(), 5));
      c.require(is_isomorphic(sublattice(K, s), named("M3")).has_value(),
                name + ": the five triples are not an M3 sublattice");
    }

    // <x,0,0> is an ideal isomorphic to D
    ElementSubset image = md.ideal_embedding.image();
    c.require(is_ideal(K, image), name + ": <x,0,0> image is not an ideal");
    c.require(is_isomorphic(sublattice(K, image), D).has_value(),
              name + ": <x,0,0> image is not isomorphic to D");

    // the spanning M3 and the ideal copy of D generate M3[D]
    if (present) {
      ElementSubset gen = image;
      for (int i : five) gen.add(i);
      bool grew = true;
      while (grew) {
        grew = false;
        auto elems = gen.elements();
        for (std::size_t i = 0; i < elems.size(); ++i)
          for (std::size_t j = i; j < elems.size(); ++j) {
            int m = K.meet(elems[i], elems[j]), v = K.join(elems[i], elems[j]);
            if (!gen.contains(m)) { gen.add(m); grew = true; }
            if (!gen.contains(v)) { gen.add(v); grew = true; }
          }
      }
      c.require(gen.count() == K.size(), name + ": M3 and D do not generate M3[D]");
    }

    // congruence restriction along the ideal embedding is a bijection
    ExtensionReport rep = verify_extension(md.ideal_embedding, opts.max_congruences);
    c.require(rep.congruence_preserving, name + ": Con(M3[D]) -> Con(D) is not a bijection");

    // member set and operation tables agree with m3hat(D)
    TripleLattice M = m3_hat(D, opts.max_triples);
    c.require(M.members() == md.members, name + ": balanced and Boolean members differ");
    if (M.members() == md.members) {
      bool tables_equal = true;
      for (int i = 0; i < K.size() && tables_equal; ++i)
        for (int j = 0; j < K.size(); ++j)
          if (K.join(i, j) != M.lattice().join(i, j) || K.meet(i, j) != M.lattice().meet(i, j)) {
            tables_equal = false;
            break;
          }
      c.require(tables_equal, name + ": operation tables differ from m3hat(D)");
    }
    if (!c.ok) break;
    ++checked;
  }
  if (c.ok) c.note(std::to_string(checked) + " distributive lattices verified");
  return {6,
          "for distributive D: M3[D] is a modular lattice with a spanning M3, an ideal copy of D "
          "generating it, bijective congruence restriction, and equals m3hat(D)",
          c.ok, c.detail.str()};
}

CriterionResult c7_balanced_poset_failure(const SuiteOptions& opts) {
  Check c;
  int witnesses = 0;
  for (const char* name : {"M3", "N5"}) {
    FiniteLattice L = named(name);
    auto fail = balanced_lattice_failure(L, opts.max_triples);
    if (fail) {
      ++witnesses;
      c.note(std::string(name) + ": no " + (fail->join_side ? "lub" : "glb") + " for " +
             render_triple(L, fail->a) + " and " + render_triple(L, fail->b));
    } else {
      c.note(std::string(name) + ": balanced poset is a lattice");
    }
  }
  if (witnesses == 0)
    c.note("no finite witness can exist: balanced triples are closed under componentwise "
           "meet, so the balanced poset of a finite lattice is a finite meet-semilattice "
           "with top, hence a lattice");
  c.require(witnesses >= 1, "no witness found over {M3, N5}");
  return {7, "the balanced-triple poset of a nondistributive lattice can fail to be a lattice",
          c.ok, c.detail.str()};
}

CriterionResult c8_ideal_extension(const SuiteOptions& opts) {
  Check c;
  int cases = 0;
  std::vector<std::pair<std::string, FiniteLattice>> sweep;
  for (int n = 2; n <= 5; ++n) {
    auto all = enumerate_lattices(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      sweep.emplace_back("enum" + std::to_string(n) + "#" + std::to_string(i), all[i]);
  }
  for (const char* name : {"C2", "C3", "C4", "C5", "B2", "M3", "N5"})
    sweep.emplace_back(name, named(name));

  for (auto& [name, L] : sweep) {
    for (int a = 0; a < L.size(); ++a) {
      if (a == L.top()) continue;
      IdealExtension ext = ideal_extension(L, a, opts.max_triples);
      ExtensionReport rep = verify_extension(ext.embedding, opts.max_congruences);
      c.require(rep.image_is_ideal, name + " at " + std::to_string(a) + ": image not an ideal");
      c.require(rep.proper, name + " at " + std::to_string(a) + ": not proper");
      c.require(rep.congruence_preserving,
                name + " at " + std::to_string(a) + ": not congruence-preserving");
      if (!c.ok) break;
      ++cases;
    }
    if (!c.ok) break;
  }
  if (c.ok) c.note(std::to_string(cases) + " (lattice, element) cases verified");
  return {8,
          "ideal_extension(L, a) is a proper congruence-preserving extension with L an ideal "
          "(sweep over all corpus L with 2..5 elements and all a < 1)",
          c.ok, c.detail.str()};
}

CriterionResult c9_fano_not_semimodular(const SuiteOptions& opts) {
  Check c;
  FiniteLattice P = named("Fano");
  TripleLattice M = m3_hat(P, opts.max_triples);
  c.require(!is_semimodular(M.lattice()), "m3hat(Fano) is semimodular");

  // a triangle: three lines, pairwise meeting in three distinct points
  int bot = P.bottom(), top = P.top();
  std::vector<int> lines, points;
  for (int e = 0; e < P.size(); ++e) {
    if (e == bot || e == top) continue;
    if (P.covers(e, top)) lines.push_back(e);
    else points.push_back(e);
  }
  int l = -1, m = -1, nn = -1;
  for (std::size_t i = 0; i < lines.size() && l < 0; ++i)
    for (std::size_t j = i + 1; j < lines.size() && l < 0; ++j)
      for (std::size_t k = j + 1; k < lines.size() && l < 0; ++k) {
        int ab = P.meet(lines[i], lines[j]);
        int ac = P.meet(lines[i], lines[k]);
        int bc = P.meet(lines[j], lines[k]);
        if (ab != ac && ab != bc && ac != bc) {
          l = lines[i];
          m = lines[j];
          nn = lines[k];
        }
      }
  c.require(l >= 0, "no triangle of lines found");
  if (c.ok) {
    int a = P.meet(nn, m), b = P.meet(nn, l), cc = P.meet(m, l);
    int p = -1;
    for (int pt : points)
      if (!P.leq(pt, l) && !P.leq(pt, m) && !P.leq(pt, nn)) p = pt;
    c.require(p >= 0, "no point off the triangle found");
    if (c.ok) {
      int atom = M.index_of({p, bot, bot});
      int abc = M.index_of({a, b, cc});
      c.require(atom >= 0 && abc >= 0, "witness triples are not members");
      if (c.ok) {
        c.require(M.lattice().covers(M.lattice().bottom(), atom), "<p,0,0> is not an atom");
        Triple closed = boolean_closure(P, {P.join(p, a), b, cc});
        c.require(closed == Triple{top, l, l}, "closure(<pva,b,c>) != <1,l,l>");
        int join_idx = M.lattice().join(atom, abc);
        c.require(join_idx == M.index_of({top, l, l}), "<p,0,0> v <a,b,c> != <1,l,l>");
        int mid = M.index_of({nn, b, l});
        c.require(mid >= 0, "<n,b,l> is not a member");
        if (c.ok) {
          c.require(M.lattice().lt(abc, mid) && M.lattice().lt(mid, join_idx),
                    "<a,b,c> < <n,b,l> < <1,l,l> fails");
          c.require(!M.lattice().covers(abc, join_idx),
                    "the join unexpectedly covers <a,b,c>");
        }
      }
    }
  }
  if (c.ok)
    c.note("|m3hat(Fano)| = " + std::to_string(M.size()) +
           ", not semimodular, triangle witness verified");
  return {9, "m3hat(Fano) is not semimodular, with the triangle/extra-point witness", c.ok,
          c.detail.str()};
}

CriterionResult c10_triple_laws(const SuiteOptions& opts) {
  Check c;
  int lattices = 0;
  for (int n = 1; n <= 5 && c.ok; ++n) {
    for (const FiniteLattice& L : enumerate_lattices(n)) {
      const int sz = L.size();
      std::vector<Triple> all;
      for (int x = 0; x < sz; ++x)
        for (int y = 0; y < sz; ++y)
          for (int z = 0; z < sz; ++z) all.push_back({x, y, z});

      for (Triple t : all) {
        bool boolean = is_boolean(L, t);
        // (i) Boolean implies balanced
        if (boolean) c.require(is_balanced(L, t), "Boolean triple is not balanced");
        // (ii) Boolean iff some meet representation exists (exhaustive)
        bool any_rep = false;
        for (int u = 0; u < sz && !any_rep; ++u)
          for (int v = 0; v < sz && !any_rep; ++v)
            for (int w = 0; w < sz && !any_rep; ++w)
              if (L.meet(u, v) == t.x && L.meet(u, w) == t.y && L.meet(v, w) == t.z)
                any_rep = true;
        c.require(boolean == any_rep, "Boolean iff meet-representation fails");
        c.require(boolean == meet_representation(L, t).has_value(),
                  "meet_representation disagrees with is_boolean");
        // (iii) closure operator laws
        Triple cl = boolean_closure(L, t);
        c.require(L.leq(t.x, cl.x) && L.leq(t.y, cl.y) && L.leq(t.z, cl.z),
                  "closure is not extensive");
        c.require(boolean_closure(L, cl) == cl, "closure is not idempotent");
        c.require(is_boolean(L, cl), "closure is not Boolean");
        if (boolean) c.require(cl == t, "closure moves a Boolean triple");
        // least Boolean above: every Boolean triple above t is above cl
        for (Triple s : all) {
          if (!L.leq(t.x, s.x) || !L.leq(t.y, s.y) || !L.leq(t.z, s.z)) continue;
          if (!is_boolean(L, s)) continue;
          c.require(L.leq(cl.x, s.x) && L.leq(cl.y, s.y) && L.leq(cl.z, s.z),
                    "closure is not the least Boolean triple above");
        }
        if (!c.ok) break;
      }
      // monotonicity
      for (Triple t : all) {
        if (!c.ok) break;
        for (Triple s : all)
          if (L.leq(t.x, s.x) && L.leq(t.y, s.y) && L.leq(t.z, s.z)) {
            Triple ct = boolean_closure(L, t), cs = boolean_closure(L, s);
            c.require(L.leq(ct.x, cs.x) && L.leq(ct.y, cs.y) && L.leq(ct.z, cs.z),
                      "closure is not monotone");
          }
      }

      if (!c.ok) break;
      // (v) the <x,0,0> sublattice and the spanning M3
      TripleLattice M = m3_hat(L, opts.max_triples);
      Embedding zero = zero_embedding(M);  // constructor validates the embedding
      c.require(is_ideal(M.lattice(), zero.image()), "<x,0,0> image is not an ideal");
      c.require(is_isomorphic(sublattice(M.lattice(), zero.image()), L).has_value(),
                "<x,0,0> sublattice is not isomorphic to L");
      if (sz >= 2) {
        auto five = spanning_m3(M);
        ElementSubset s = ElementSubset::of(M.size(), std::span<const int>(five.data(), 5));
        c.require(s.count() == 5, "spanning M3 indices are not distinct");
        c.require(s.contains(M.lattice().bottom()) && s.contains(M.lattice().top()),
                  "spanning M3 misses a bound");
        c.require(is_isomorphic(sublattice(M.lattice(), s), named("M3")).has_value(),
                  "spanning set is not an M3 sublattice");
      }
      // (vi) classification: total, case-exclusive, reconstructible
      for (Triple t : M.members()) {
        TripleClassification tc = classify_boolean(L, t);
        c.require(tc.reconstruct() == t, "classification does not reconstruct the triple");
        // independent case prediction from the component profile
        std::array<int, 3> comps{t.x, t.y, t.z};
        std::sort(comps.begin(), comps.end());
        int distinct =
            static_cast<int>(std::unique(comps.begin(), comps.end()) - comps.begin());
        TripleCase expected;
        if (distinct == 1) expected = TripleCase::Diagonal;
        else if (distinct == 2) expected = TripleCase::TwoValues;
        else {
          bool any_cmp = L.comparable(t.x, t.y) || L.comparable(t.x, t.z) ||
                         L.comparable(t.y, t.z);
          expected = any_cmp ? TripleCase::ComparablePairWithMeet
                             : TripleCase::AtomsOfBoolean8;
        }
        c.require(tc.kind == expected, "classification case mismatch");
        if (!c.ok) break;
      }
      if (!c.ok) break;
      ++lattices;
    }
  }
  if (c.ok) c.note(std::to_string(lattices) + " lattices swept");
  return {10,
          "Boolean triple laws: balanced superset, meet representations, closure operator, "
          "<x,0,0> sublattice, spanning M3, and the four-case classification",
          c.ok, c.detail.str()};
}

CriterionResult c11_congruence_oracle(const SuiteOptions& opts) {
  Check c;
  int checked = 0;
  std::vector<std::pair<std::string, FiniteLattice>> sweep;
  for (const CorpusEntry& e : corpus_entries())
    if (e.lattice.size() <= 6) sweep.emplace_back(e.name, e.lattice);
  for (int n = 1; n <= 6; ++n) {
    auto all = enumerate_lattices(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      sweep.emplace_back("enum" + std::to_string(n) + "#" + std::to_string(i), all[i]);
  }
  for (auto& [name, L] : sweep) {
    auto oracle = congruences_by_partition_scan(L);
    auto engine = all_congruences(L, opts.max_congruences);
    c.require(std::set<Congruence>(oracle.begin(), oracle.end()) == congruence_set(engine),
              name + ": engine disagrees with the partition-filter oracle");
    if (!c.ok) break;
    ++checked;
  }
  c.require(all_congruences(named("C3"), opts.max_congruences).congruences.size() == 4,
            "|Con(C3)| != 4");
  c.require(all_congruences(named("M3"), opts.max_congruences).congruences.size() == 2,
            "|Con(M3)| != 2");
  c.require(all_congruences(named("N5"), opts.max_congruences).congruences.size() == 5,
            "|Con(N5)| != 5");
  if (c.ok)
    c.note(std::to_string(checked) + " lattices agree; |Con| of C3/M3/N5 = 4/2/5");
  return {11, "the congruence engine agrees exactly with the exhaustive partition oracle (n <= 6)",
          c.ok, c.detail.str()};
}

}  // namespace

std::vector<CriterionResult> run_all(const SuiteOptions& opts) {
  using Fn = std::function<CriterionResult(const SuiteOptions&)>;
  const Fn criteria[] = {
      c1_m3hat_c2,   c2_m3hat_c3_count, c3_proper_congruence_preserving,
      c4_extensive,  c5_modular_iff_distributive, c6_m3d,
      c7_balanced_poset_failure, c8_ideal_extension, c9_fano_not_semimodular,
      c10_triple_laws, c11_congruence_oracle,
  };
  std::vector<CriterionResult> results;
  int id = 1;
  for (const Fn& fn : criteria) {
    try {
      results.push_back(fn(opts));
    } catch (const std::exception& e) {
      results.push_back({id, "criterion aborted", false, std::string("exception: ") + e.what()});
    }
    results.back().id = id++;
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.passed; });
}

bool print_results(std::ostream& os, const std::vector<CriterionResult>& results) {
  int passed = 0;
  for (const CriterionResult& r : results) {
    os << '[' << (r.id < 10 ? " " : "") << r.id << "] " << (r.passed ? "PASS" : "FAIL") << "  "
       << r.name;
    if (!r.detail.empty()) os << "\n      " << r.detail;
    os << '\n';
    if (r.passed) ++passed;
  }
  os << "suite: " << passed << '/' << results.size() << " criteria passed\n";
  return passed == static_cast<int>(results.size());
}

}  // namespace lattkit::suite
