#include "lattkit/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace lattkit {

namespace {

FiniteLattice chain(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return FiniteLattice::from_covers(n, covers);
}

FiniteLattice boolean_lattice(int k) {
  const int n = 1 << k;
  std::vector<std::pair<int, int>> covers;
  for (int s = 0; s < n; ++s)
    for (int b = 0; b < k; ++b)
      if (!(s & (1 << b))) covers.emplace_back(s, s | (1 << b));
  return FiniteLattice::from_covers(n, covers);
}

FiniteLattice m3() {
  return FiniteLattice::from_covers(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
      {"o", "a", "b", "c", "i"});
}

FiniteLattice n5() {
  // 0 < a < 1 and 0 < b < c < 1, a incomparable to b and c
  return FiniteLattice::from_covers(5, {{0, 1}, {0, 2}, {2, 3}, {1, 4}, {3, 4}},
                                    {"0", "a", "b", "c", "1"});
}

// Subspace lattice of the 7-point projective plane: bottom, the points
// 1..7 (nonzero vectors over GF(2)^3), the lines {p, q, p xor q}, top.
FiniteLattice fano() {
  const int n = 16;  // 0: bottom, 1..7: points, 8..14: lines, 15: top
  std::vector<std::array<int, 3>> lines;
  for (int p = 1; p <= 7; ++p)
    for (int q = p + 1; q <= 7; ++q) {
      int r = p ^ q;
      if (r > q) lines.push_back({p, q, r});
    }
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels(n);
  labels[0] = "0";
  labels[15] = "1";
  for (int p = 1; p <= 7; ++p) {
    labels[p] = "p" + std::to_string(p);
    covers.emplace_back(0, p);
  }
  for (std::size_t li = 0; li < lines.size(); ++li) {
    int idx = 8 + static_cast<int>(li);
    labels[idx] = "l" + std::to_string(lines[li][0]) + std::to_string(lines[li][1]) +
                  std::to_string(lines[li][2]);
    for (int p : lines[li]) covers.emplace_back(p, idx);
    covers.emplace_back(idx, 15);
  }
  return FiniteLattice::from_covers(n, covers, std::move(labels));
}

std::vector<CorpusEntry> build_entries() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, FiniteLattice l, bool dist, bool mod, bool simple) {
    out.push_back(CorpusEntry{std::move(name), std::move(l), dist, mod, simple});
  };
  add("C1", chain(1), true, true, false);
  add("C2", chain(2), true, true, true);
  add("C3", chain(3), true, true, false);
  add("C4", chain(4), true, true, false);
  add("C5", chain(5), true, true, false);
  add("C6", chain(6), true, true, false);
  add("B2", boolean_lattice(2), true, true, false);
  add("B3", boolean_lattice(3), true, true, false);
  add("M3", m3(), false, true, true);
  add("N5", n5(), false, false, false);
  add("M3xC2", product(m3(), chain(2)), false, true, false);
  add("Fano", fano(), false, true, true);
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = build_entries();
  return entries;
}

FiniteLattice named(std::string_view name) {
  for (const CorpusEntry& e : corpus_entries())
    if (e.name == name) return e.lattice;
  throw UnknownName(std::string(name));
}

std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const CorpusEntry& e : corpus_entries()) names.push_back(e.name);
  return names;
}

FiniteLattice product(const FiniteLattice& L, const FiniteLattice& K) {
  const int nl = L.size(), nk = K.size();
  const int n = nl * nk;
  BitMatrix leq(n);
  for (int i1 = 0; i1 < nl; ++i1)
    for (int j1 = 0; j1 < nk; ++j1)
      for (int i2 = 0; i2 < nl; ++i2)
        for (int j2 = 0; j2 < nk; ++j2)
          if (L.leq(i1, i2) && K.leq(j1, j2)) leq.set(i1 * nk + j1, i2 * nk + j2);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nk; ++j) labels.push_back(L.label(i) + "." + K.label(j));
  return FiniteLattice::from_order(std::move(leq), std::move(labels));
}

std::vector<FiniteLattice> enumerate_lattices(int n) {
  if (n < 1) throw std::invalid_argument("element count must be positive");
  if (n > 6)
    throw SizeLimitExceeded("labeled lattice enumeration universe", static_cast<std::size_t>(n),
                            6);
  // strict pairs (i, j), i < j, in lexicographic order
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const int np = static_cast<int>(pairs.size());

  std::vector<FiniteLattice> out;
  for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
    std::vector<std::uint64_t> up(n, 0);
    for (int i = 0; i < n; ++i) up[i] |= std::uint64_t{1} << i;
    for (int k = 0; k < np; ++k)
      if (mask & (1u << k)) up[pairs[k].first] |= std::uint64_t{1} << pairs[k].second;
    // transitivity: j in up(i) implies up(j) subset of up(i)
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = i + 1; j < n && transitive; ++j)
        if ((up[i] >> j) & 1u)
          if (up[j] & ~up[i]) transitive = false;
    if (!transitive) continue;

    BitMatrix leq(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((up[i] >> j) & 1u) leq.set(i, j);
    if (!poset_is_lattice(leq).is_lattice) continue;
    out.push_back(FiniteLattice::from_order(std::move(leq)));
  }
  return out;
}

FiniteLattice random_lattice(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("element count must be positive");
  if (n == 1) return chain(1);

  int k = 2;
  while ((1 << (k - 2)) < n) ++k;  // k = ceil(log2 n) + 2
  const std::uint32_t full = (1u << k) - 1;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, full);

  auto close = [](std::set<std::uint32_t> s) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::uint32_t> v(s.begin(), s.end());
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
          if (s.insert(v[i] & v[j]).second) changed = true;
          if (s.insert(v[i] | v[j]).second) changed = true;
        }
    }
    return s;
  };

  auto build = [](const std::set<std::uint32_t>& closed) {
    std::vector<std::uint32_t> masks(closed.begin(), closed.end());
    const int m = static_cast<int>(masks.size());
    BitMatrix leq(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if ((masks[i] & masks[j]) == masks[i]) leq.set(i, j);
    return FiniteLattice::from_order(std::move(leq));
  };

  std::set<std::uint32_t> generators{0, full};
  std::optional<std::set<std::uint32_t>> best;
  for (int attempt = 0; attempt < 400; ++attempt) {
    std::set<std::uint32_t> closed = close(generators);
    int sz = static_cast<int>(closed.size());
    if (sz == n) return build(closed);
    if (!best || std::abs(static_cast<int>(best->size()) - n) > std::abs(sz - n)) best = closed;
    if (sz < n) {
      generators.insert(pick(rng));
    } else {
      // drop a random non-bound generator; resample from scratch if none left
      std::vector<std::uint32_t> extra;
      for (std::uint32_t g : generators)
        if (g != 0 && g != full) extra.push_back(g);
      if (extra.empty()) {
        generators = {0, full};
      } else {
        std::uniform_int_distribution<std::size_t> which(0, extra.size() - 1);
        generators.erase(extra[which(rng)]);
        if (generators.size() <= 2) generators = {0, full, pick(rng)};
      }
    }
  }
  return build(*best);
}

}  // namespace lattkit
