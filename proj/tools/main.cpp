// lattkit command line front end: build the triple-lattice constructions,
// inspect congruence lattices, verify extension properties, glue lattices,
// export DOT, and run the full verification suite.
//
// Exit codes: 0 ok, 1 verification failed, 2 usage error, 3 size limit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lattkit/boolean_triples.hpp"
#include "lattkit/congruence.hpp"
#include "lattkit/corpus.hpp"
#include "lattkit/extensions.hpp"
#include "lattkit/io.hpp"
#include "lattkit/lattice.hpp"
#include "lattkit/m3d.hpp"
#include "lattkit/suite.hpp"

namespace {

using namespace lattkit;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;
constexpr int kSizeLimit = 3;

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FiniteLattice resolve_input(const std::string& input) {
  if (!input.empty() && input[0] == '@') return named(input.substr(1));
  return parse_lattice_file(input);
}

int parse_element(const FiniteLattice& L, const std::string& s) {
  for (int i = 0; i < L.size(); ++i)
    if (L.label(i) == s) return i;
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos == s.size() && v >= 0 && v < L.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageFailure("no element named '" + s + "'");
}

std::vector<int> parse_element_list(const FiniteLattice& L, const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_element(L, item));
  }
  if (out.empty()) throw UsageFailure("empty element list");
  return out;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageFailure("cannot open output file: " + out_path);
  f << text;
}

std::size_t env_or(const char* var, std::size_t fallback) {
  if (const char* v = std::getenv(var)) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && parsed > 0) return static_cast<std::size_t>(parsed);
  }
  return fallback;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string render_witness_set(const FiniteLattice& K, std::span<const int> elems) {
  std::string s = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) s += ",";
    s += K.label(elems[i]);
  }
  s += "}";
  return s;
}

std::string case_name(TripleCase k) {
  switch (k) {
    case TripleCase::Diagonal: return "diagonal";
    case TripleCase::TwoValues: return "two_values";
    case TripleCase::ComparablePairWithMeet: return "comparable_pair_with_meet";
    case TripleCase::AtomsOfBoolean8: return "atoms_of_b8";
  }
  return "?";
}

int cmd_show(const FiniteLattice& L) {
  std::cout << "elements: " << L.size() << '\n'
            << "bottom: " << L.label(L.bottom()) << '\n'
            << "top: " << L.label(L.top()) << '\n'
            << "covers: " << L.cover_pairs().size() << '\n'
            << "distributive: " << yn(is_distributive(L)) << '\n'
            << "modular: " << yn(is_modular(L)) << '\n'
            << "semimodular: " << yn(is_semimodular(L)) << '\n';
  for (auto [a, b] : L.cover_pairs())
    std::cout << "cover " << L.label(a) << ' ' << L.label(b) << '\n';
  return kOk;
}

int cmd_m3hat(const FiniteLattice& L, bool dot, const std::string& out, std::size_t max_triples) {
  TripleLattice M = m3_hat(L, max_triples);
  std::string text;
  if (dot) {
    DotOptions d;
    d.highlight = M.diagonal().map();
    text = to_dot(M.lattice(), d);
  } else {
    text = to_text(M.lattice());
  }
  bool iso = M.size() == 5 && is_isomorphic(M.lattice(), named("M3")).has_value();
  std::string iso_line = std::string("isomorphic to M3: ") + yn(iso) + "\n";
  if (out.empty()) {
    std::cout << text;
    if (!dot) std::cout << "# " << iso_line;
  } else {
    write_output(text, out);
    std::cout << iso_line;
  }
  return kOk;
}

int cmd_m3d(const FiniteLattice& L, bool dot, const std::string& out, std::size_t max_triples) {
  M3OfD md = m3_of_d(L, max_triples);  // throws NotDistributive -> exit 1
  write_output(dot ? to_dot(md.lattice) : to_text(md.lattice), out);
  return kOk;
}

int cmd_con(const FiniteLattice& L, const std::string& format, std::size_t max_congruences) {
  CongruenceLattice cl = all_congruences(L, max_congruences);
  if (format == "blocks") {
    for (const Congruence& c : cl.congruences) std::cout << c.to_block_string() << '\n';
  } else if (format == "lattice") {
    std::cout << to_text(cl.order);
  } else if (format == "dot") {
    std::cout << to_dot(cl.order);
  } else {
    throw UsageFailure("unknown format '" + format + "' (blocks|lattice|dot)");
  }
  return kOk;
}

int cmd_classify(const FiniteLattice& L, std::size_t max_triples) {
  TripleLattice M = m3_hat(L, max_triples);
  for (Triple t : M.members()) {
    TripleClassification c = classify_boolean(L, t);
    std::cout << render_triple(L, t) << ": " << case_name(c.kind);
    switch (c.kind) {
      case TripleCase::Diagonal:
        std::cout << " value=" << L.label(c.diagonal_value);
        break;
      case TripleCase::TwoValues:
        std::cout << " small=" << L.label(c.small) << " big=" << L.label(c.big)
                  << " big_position=" << c.big_position;
        break;
      case TripleCase::ComparablePairWithMeet:
        std::cout << " p=" << L.label(c.p) << " q=" << L.label(c.q)
                  << " meet=" << L.label(c.meet_value) << " meet_position=" << c.meet_position;
        break;
      case TripleCase::AtomsOfBoolean8: {
        std::cout << " b8=";
        std::vector<int> b8(c.boolean8.begin(), c.boolean8.end());
        std::cout << render_witness_set(L, b8);
        break;
      }
    }
    std::cout << '\n';
  }
  return kOk;
}

int verify_property(const FiniteLattice& target, const std::string& what) {
  bool holds = false;
  std::string witness;
  if (what == "modular") {
    holds = is_modular(target);
    if (!holds) {
      if (auto w = find_sublattice(target, SublatticePattern::N5))
        witness = "N5" + render_witness_set(target, *w);
    }
  } else if (what == "distributive") {
    holds = is_distributive(target);
    if (!holds) {
      if (auto w = find_sublattice(target, SublatticePattern::M3))
        witness = "M3" + render_witness_set(target, *w);
      else if (auto w5 = find_sublattice(target, SublatticePattern::N5))
        witness = "N5" + render_witness_set(target, *w5);
    }
  } else {  // semimodular
    auto v = semimodularity_violation(target);
    holds = !v.has_value();
    if (v)
      witness = "a=" + target.label(v->first) + " b=" + target.label(v->second);
  }
  std::cout << what << '=' << yn(holds);
  if (!holds && !witness.empty()) std::cout << " witness=" << witness;
  std::cout << '\n';
  return holds ? kOk : kVerificationFailed;
}

int cmd_verify(const std::string& what, const FiniteLattice& L, const std::string& construction,
               const std::string& at, bool full_report, std::size_t max_triples,
               std::size_t max_congruences) {
  if (what == "cpe" || what == "extensive") {
    std::optional<Embedding> e;
    std::optional<TripleLattice> M;
    std::optional<M3OfD> md;
    if (construction == "m3hat" || construction.empty()) {
      M = m3_hat(L, max_triples);
      e = M->diagonal();
    } else if (construction == "m3d") {
      md = m3_of_d(L, max_triples);
      e = md->ideal_embedding;
    } else {
      throw UsageFailure("verify " + what + " needs --construction m3hat or m3d");
    }
    ExtensionReport rep = verify_extension(*e, max_congruences);
    if (full_report) std::cout << rep.to_text();
    else
      std::cout << "proper=" << yn(rep.proper)
                << " congruence_preserving=" << yn(rep.congruence_preserving)
                << " extensive=" << yn(rep.extensive) << '\n';
    bool pass = what == "cpe" ? (rep.proper && rep.congruence_preserving) : rep.extensive;
    return pass ? kOk : kVerificationFailed;
  }
  if (what == "ideal") {
    if (at.empty()) throw UsageFailure("verify ideal needs --at <element>");
    IdealExtension ext = ideal_extension(L, parse_element(L, at), max_triples);
    ExtensionReport rep = verify_extension(ext.embedding, max_congruences);
    if (full_report) std::cout << rep.to_text();
    else
      std::cout << "image_is_ideal=" << yn(rep.image_is_ideal) << " proper=" << yn(rep.proper)
                << " congruence_preserving=" << yn(rep.congruence_preserving) << '\n';
    return (rep.image_is_ideal && rep.proper && rep.congruence_preserving) ? kOk
                                                                           : kVerificationFailed;
  }
  if (what == "modular" || what == "distributive" || what == "semimodular") {
    if (construction == "m3hat") return verify_property(m3_hat(L, max_triples).lattice(), what);
    if (construction == "m3d") return verify_property(m3_of_d(L, max_triples).lattice, what);
    if (!construction.empty() && construction != "none")
      throw UsageFailure("unknown construction '" + construction + "'");
    return verify_property(L, what);
  }
  throw UsageFailure("unknown verification '" + what +
                     "' (cpe|extensive|ideal|modular|distributive|semimodular)");
}

int cmd_glue(const FiniteLattice& L, const FiniteLattice& A, const std::string& filter_csv,
             const std::string& ideal_csv, const std::string& iso_csv, const std::string& out) {
  auto f_elems = parse_element_list(L, filter_csv);
  auto i_elems = parse_element_list(A, ideal_csv);
  ElementSubset F = ElementSubset::of(L.size(), f_elems);
  ElementSubset I = ElementSubset::of(A.size(), i_elems);

  std::vector<int> iso(L.size(), -1);
  if (!iso_csv.empty()) {
    std::stringstream ss(iso_csv);
    std::string pair;
    while (std::getline(ss, pair, ',')) {
      auto colon = pair.find(':');
      if (colon == std::string::npos) throw UsageFailure("--iso wants f:i pairs");
      iso[parse_element(L, pair.substr(0, colon))] = parse_element(A, pair.substr(colon + 1));
    }
  } else {
    // search for an isomorphism between the induced sublattices
    std::vector<int> f_sorted, i_sorted;
    FiniteLattice FL = sublattice(L, F, &f_sorted);
    FiniteLattice IL = sublattice(A, I, &i_sorted);
    auto m = is_isomorphic(FL, IL);
    if (!m) throw NotIsomorphism("filter and ideal are not isomorphic");
    for (std::size_t k = 0; k < f_sorted.size(); ++k) iso[f_sorted[k]] = i_sorted[(*m)[k]];
  }

  Gluing g = glue(L, F, A, I, iso);
  write_output(to_text(g.result), out);
  return kOk;
}

int cmd_ideal_ext(const FiniteLattice& L, const std::string& at, const std::string& out,
                  std::size_t max_triples, std::size_t max_congruences) {
  if (at.empty()) throw UsageFailure("ideal-ext needs --at <element>");
  IdealExtension ext = ideal_extension(L, parse_element(L, at), max_triples);
  std::string text = to_text(ext.result);
  ExtensionReport rep = verify_extension(ext.embedding, max_congruences);
  if (out.empty()) {
    std::cout << text << "# " << rep.summary_line() << '\n';
  } else {
    write_output(text, out);
    std::cout << rep.summary_line() << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite lattice computations: Boolean triple lattices, congruence lattices, "
               "and congruence-preserving extensions"};
  app.require_subcommand(1);

  std::size_t max_triples = env_or("LATTKIT_MAX_TRIPLES", 1000000);
  std::size_t max_congruences = env_or("LATTKIT_MAX_CONGRUENCES", 100000);
  app.add_option("--max-triples", max_triples, "cap on |L|^3 candidate triples");
  app.add_option("--max-congruences", max_congruences, "cap on enumerated congruences");

  std::string input, input2, out, format = "blocks", construction, what, at;
  std::string filter_csv, ideal_csv, iso_csv, emit_name;
  bool dot = false, full_report = false;

  auto* show = app.add_subcommand("show", "print lattice stats and Hasse covers");
  show->add_option("input", input, "lattice file or @name")->required();

  auto* m3hat_cmd = app.add_subcommand("m3hat", "emit the Boolean triple lattice M3<L>");
  m3hat_cmd->add_option("input", input)->required();
  m3hat_cmd->add_flag("--dot", dot, "emit DOT with the diagonal highlighted");
  m3hat_cmd->add_option("-o,--output", out, "write to file instead of stdout");

  auto* m3d_cmd = app.add_subcommand("m3d", "emit M3[D] (distributive input only)");
  m3d_cmd->add_option("input", input)->required();
  m3d_cmd->add_flag("--dot", dot);
  m3d_cmd->add_option("-o,--output", out);

  auto* con_cmd = app.add_subcommand("con", "list the congruences of a lattice");
  con_cmd->add_option("input", input)->required();
  con_cmd->add_option("--format", format, "blocks|lattice|dot");

  auto* classify_cmd = app.add_subcommand("classify", "classify every Boolean triple of L");
  classify_cmd->add_option("input", input)->required();

  auto* verify_cmd = app.add_subcommand("verify", "verify a property, print verdict and witness");
  verify_cmd->add_option("what", what, "cpe|extensive|ideal|modular|distributive|semimodular")
      ->required();
  verify_cmd->add_option("input", input)->required();
  verify_cmd->add_option("--construction", construction, "m3hat|m3d|none");
  verify_cmd->add_option("--at", at, "element for ideal verification");
  verify_cmd->add_flag("--report", full_report, "print the full key-value report");

  auto* glue_cmd = app.add_subcommand("glue", "Hall-Dilworth gluing of two lattices");
  glue_cmd->add_option("lower", input, "lower lattice")->required();
  glue_cmd->add_option("upper", input2, "upper lattice")->required();
  glue_cmd->add_option("--filter", filter_csv, "filter of the lower lattice (comma list)")
      ->required();
  glue_cmd->add_option("--ideal", ideal_csv, "ideal of the upper lattice (comma list)")
      ->required();
  glue_cmd->add_option("--iso", iso_csv, "f:i pairs; searched automatically if omitted");
  glue_cmd->add_option("-o,--output", out);

  auto* ideal_ext_cmd =
      app.add_subcommand("ideal-ext", "proper congruence-preserving extension with L an ideal");
  ideal_ext_cmd->add_option("input", input)->required();
  ideal_ext_cmd->add_option("--at", at, "element a with a < 1")->required();
  ideal_ext_cmd->add_option("-o,--output", out);

  auto* export_cmd = app.add_subcommand("export-dot", "emit a Hasse diagram in DOT");
  export_cmd->add_option("input", input)->required();
  export_cmd->add_option("-o,--output", out);

  auto* corpus_cmd = app.add_subcommand("corpus", "named lattice corpus");
  auto* corpus_list = corpus_cmd->add_subcommand("list", "list corpus lattices");
  auto* corpus_emit = corpus_cmd->add_subcommand("emit", "emit a corpus lattice");
  corpus_emit->add_option("name", emit_name)->required();
  corpus_cmd->require_subcommand(1);

  auto* suite_cmd = app.add_subcommand("suite", "run every acceptance criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsageError;
  }

  try {
    if (*show) return cmd_show(resolve_input(input));
    if (*m3hat_cmd) return cmd_m3hat(resolve_input(input), dot, out, max_triples);
    if (*m3d_cmd) return cmd_m3d(resolve_input(input), dot, out, max_triples);
    if (*con_cmd) return cmd_con(resolve_input(input), format, max_congruences);
    if (*classify_cmd) return cmd_classify(resolve_input(input), max_triples);
    if (*verify_cmd)
      return cmd_verify(what, resolve_input(input), construction, at, full_report,
                        max_triples, max_congruences);
    if (*glue_cmd)
      return cmd_glue(resolve_input(input), resolve_input(input2), filter_csv, ideal_csv,
                      iso_csv, out);
    if (*ideal_ext_cmd)
      return cmd_ideal_ext(resolve_input(input), at, out, max_triples, max_congruences);
    if (*export_cmd) {
      write_output(to_dot(resolve_input(input)), out);
      return kOk;
    }
    if (*corpus_cmd) {
      if (*corpus_list) {
        for (const CorpusEntry& e : corpus_entries())
          std::cout << e.name << " n=" << e.lattice.size() << '\n';
        return kOk;
      }
      if (*corpus_emit) {
        std::cout << to_text(named(emit_name));
        return kOk;
      }
    }
    if (*suite_cmd) {
      suite::SuiteOptions opts;
      opts.max_triples = max_triples;
      opts.max_congruences = max_congruences;
      auto results = suite::run_all(opts);
      return suite::print_results(std::cout, results) ? kOk : kVerificationFailed;
    }
  } catch (const SizeLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const NotDistributive& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const UsageFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
