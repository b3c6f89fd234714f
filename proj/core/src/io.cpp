#include "lattkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lattkit {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

int parse_int(const std::string& tok, int line_no) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line_no, "expected an integer, got '" + tok + "'");
  }
}

std::string sanitize_label(std::string s) {
  for (char& c : s)
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') c = '_';
  return s;
}

}  // namespace

FiniteLattice parse_lattice(std::istream& in) {
  int n = -1;
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels;
  bool any_label = false;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = tokens_of(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] == "lattice") {
      if (n >= 0) throw ParseError(line_no, "duplicate 'lattice' line");
      if (toks.size() != 2) throw ParseError(line_no, "usage: lattice <n>");
      n = parse_int(toks[1], line_no);
      if (n < 1) throw ParseError(line_no, "element count must be positive");
      labels.assign(n, {});
      continue;
    }
    if (n < 0) throw ParseError(line_no, "file must start with 'lattice <n>'");
    if (toks[0] == "cover") {
      if (toks.size() != 3) throw ParseError(line_no, "usage: cover <a> <b>");
      int a = parse_int(toks[1], line_no);
      int b = parse_int(toks[2], line_no);
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw ParseError(line_no, "cover element out of range");
      covers.emplace_back(a, b);
    } else if (toks[0] == "label") {
      if (toks.size() != 3) throw ParseError(line_no, "usage: label <i> <name>");
      int i = parse_int(toks[1], line_no);
      if (i < 0 || i >= n) throw ParseError(line_no, "label element out of range");
      labels[i] = toks[2];
      any_label = true;
    } else {
      throw ParseError(line_no, "unknown directive '" + toks[0] + "'");
    }
  }
  if (n < 0) throw ParseError(line_no, "missing 'lattice <n>' line");
  if (any_label) {
    for (int i = 0; i < n; ++i)
      if (labels[i].empty()) labels[i] = std::to_string(i);
  } else {
    labels.clear();
  }
  return FiniteLattice::from_covers(n, covers, std::move(labels));
}

FiniteLattice parse_lattice_text(const std::string& text) {
  std::istringstream is(text);
  return parse_lattice(is);
}

FiniteLattice parse_lattice_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open file: " + path);
  return parse_lattice(f);
}

std::string to_text(const FiniteLattice& L) {
  std::ostringstream os;
  os << "lattice " << L.size() << '\n';
  for (auto [a, b] : L.cover_pairs()) os << "cover " << a << ' ' << b << '\n';
  for (int i = 0; i < L.size(); ++i) {
    std::string lbl = sanitize_label(L.label(i));
    if (lbl != std::to_string(i)) os << "label " << i << ' ' << lbl << '\n';
  }
  return os.str();
}

std::string to_dot(const FiniteLattice& L, const DotOptions& opts) {
  std::vector<bool> lit(L.size(), false);
  for (int h : opts.highlight)
    if (h >= 0 && h < L.size()) lit[h] = true;

  auto escape = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    return out;
  };

  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < L.size(); ++i) {
    os << "  n" << i << " [label=\"" << escape(L.label(i)) << '"';
    if (lit[i]) os << ", style=filled, fillcolor=lightblue";
    os << "];\n";
  }
  int max_h = 0;
  for (int i = 0; i < L.size(); ++i) max_h = std::max(max_h, L.height(i));
  for (int h = 0; h <= max_h; ++h) {
    bool any = false;
    std::ostringstream rank;
    rank << "  { rank=same;";
    for (int i = 0; i < L.size(); ++i)
      if (L.height(i) == h) {
        rank << " n" << i << ';';
        any = true;
      }
    rank << " }\n";
    if (any) os << rank.str();
  }
  for (auto [a, b] : L.cover_pairs()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace lattkit
