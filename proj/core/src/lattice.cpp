#include "lattkit/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace lattkit {

// ---- ElementSubset --------------------------------------------------------

ElementSubset ElementSubset::full(int n) {
  ElementSubset s(n);
  for (int i = 0; i < n; ++i) s.add(i);
  return s;
}

ElementSubset ElementSubset::of(int n, std::span<const int> elements) {
  ElementSubset s(n);
  for (int e : elements) {
    if (e < 0 || e >= n) throw std::out_of_range("subset element out of range");
    s.add(e);
  }
  return s;
}

ElementSubset ElementSubset::of(int n, std::initializer_list<int> elements) {
  return of(n, std::span<const int>(elements.begin(), elements.size()));
}

std::vector<int> ElementSubset::elements() const {
  std::vector<int> out;
  bits::for_each(bits_, [&](int i) { out.push_back(i); });
  return out;
}

// ---- table construction ----------------------------------------------------

namespace {

struct TableResult {
  bool ok = true;
  int fail_a = -1, fail_b = -1;
  bool fail_join = false;
  std::vector<std::int32_t> meet, join;
};

// Computes glb/lub tables by bitset scans.  For the glb of (a, b): the
// intersection D of the two down-sets is itself down-closed, so if it has a
// unique maximal element c then D = down(c) and c is the glb; the element of
// D with the largest down-set is always maximal in D, so it is the only
// candidate.  Dually for lub.
TableResult compute_tables(const BitMatrix& leq, const BitMatrix& geq) {
  const int n = leq.size();
  const int words = leq.words_per_row();
  TableResult r;
  r.meet.assign(static_cast<std::size_t>(n) * n, -1);
  r.join.assign(static_cast<std::size_t>(n) * n, -1);

  std::vector<int> down_size(n), up_size(n);
  for (int i = 0; i < n; ++i) {
    down_size[i] = bits::popcount(geq.row(i));
    up_size[i] = bits::popcount(leq.row(i));
  }

  std::vector<std::uint64_t> tmp(words);
  for (int a = 0; a < n && r.ok; ++a) {
    auto da = geq.row(a);
    auto ua = leq.row(a);
    for (int b = a; b < n; ++b) {
      // glb
      {
        auto db = geq.row(b);
        int best = -1;
        for (int k = 0; k < words; ++k) tmp[k] = da[k] & db[k];
        bits::for_each(tmp, [&](int i) {
          if (best < 0 || down_size[i] > down_size[best]) best = i;
        });
        if (best < 0 || !bits::subset(tmp, geq.row(best))) {
          r.ok = false;
          r.fail_a = a;
          r.fail_b = b;
          r.fail_join = false;
          break;
        }
        r.meet[static_cast<std::size_t>(a) * n + b] = best;
        r.meet[static_cast<std::size_t>(b) * n + a] = best;
      }
      // lub
      {
        auto ub = leq.row(b);
        int best = -1;
        for (int k = 0; k < words; ++k) tmp[k] = ua[k] & ub[k];
        bits::for_each(tmp, [&](int i) {
          if (best < 0 || up_size[i] > up_size[best]) best = i;
        });
        if (best < 0 || !bits::subset(tmp, leq.row(best))) {
          r.ok = false;
          r.fail_a = a;
          r.fail_b = b;
          r.fail_join = true;
          break;
        }
        r.join[static_cast<std::size_t>(a) * n + b] = best;
        r.join[static_cast<std::size_t>(b) * n + a] = best;
      }
    }
  }
  return r;
}

void validate_order(const BitMatrix& leq) {
  const int n = leq.size();
  for (int i = 0; i < n; ++i) {
    if (!leq.get(i, i)) throw std::invalid_argument("order relation is not reflexive");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq.get(i, j) && leq.get(j, i))
        throw CyclicCovers("elements " + std::to_string(i) + " and " + std::to_string(j) +
                           " are mutually comparable");
  // transitivity: j in up(i) implies up(j) subset of up(i)
  for (int i = 0; i < n; ++i) {
    auto ui = leq.row(i);
    bool ok = true;
    bits::for_each(ui, [&](int j) {
      if (ok && !bits::subset(leq.row(j), ui)) ok = false;
    });
    if (!ok) throw std::invalid_argument("order relation is not transitive");
  }
}

}  // namespace

LatticeCheck poset_is_lattice(const BitMatrix& leq) {
  BitMatrix geq = leq.transposed();
  TableResult t = compute_tables(leq, geq);
  LatticeCheck c;
  c.is_lattice = t.ok;
  if (!t.ok) {
    c.a = t.fail_a;
    c.b = t.fail_b;
    c.join_side = t.fail_join;
  }
  return c;
}

// ---- FiniteLattice ---------------------------------------------------------

FiniteLattice FiniteLattice::build(BitMatrix leq, std::vector<std::string> labels) {
  const int n = leq.size();
  if (n < 1) throw std::invalid_argument("a lattice needs at least one element");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("label count does not match element count");
  validate_order(leq);

  FiniteLattice L;
  L.n_ = n;
  L.geq_ = leq.transposed();
  TableResult t = compute_tables(leq, L.geq_);
  if (!t.ok) throw NotALattice(t.fail_a, t.fail_b, t.fail_join);
  L.meet_ = std::move(t.meet);
  L.join_ = std::move(t.join);

  int bot = 0, top = 0;
  for (int i = 1; i < n; ++i) {
    bot = L.meet_[static_cast<std::size_t>(bot) * n + i];
    top = L.join_[static_cast<std::size_t>(top) * n + i];
  }
  L.bottom_ = bot;
  L.top_ = top;

  // heights: process elements by increasing down-set size (a linear extension)
  std::vector<int> order(n), dsz(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = 0; i < n; ++i) dsz[i] = bits::popcount(L.geq_.row(i));
  std::sort(order.begin(), order.end(), [&](int x, int y) { return dsz[x] < dsz[y]; });
  L.height_.assign(n, 0);
  for (int i : order) {
    int h = 0;
    bits::for_each(L.geq_.row(i), [&](int j) {
      if (j != i) h = std::max(h, L.height_[j] + 1);
    });
    L.height_[i] = h;
  }

  // covers: lo < hi with down(hi) & up(lo) == {lo, hi}
  L.cover_ = BitMatrix(n);
  const int words = leq.words_per_row();
  std::vector<std::uint64_t> tmp(words);
  for (int hi = 0; hi < n; ++hi) {
    auto dh = L.geq_.row(hi);
    bits::for_each(dh, [&](int lo) {
      if (lo == hi) return;
      auto ul = leq.row(lo);
      int cnt = 0;
      for (int k = 0; k < words; ++k) {
        tmp[k] = dh[k] & ul[k];
        cnt += std::popcount(tmp[k]);
      }
      if (cnt == 2) L.cover_.set(lo, hi);
    });
  }
  for (int lo = 0; lo < n; ++lo)
    bits::for_each(L.cover_.row(lo), [&](int hi) { L.cover_pairs_.emplace_back(lo, hi); });
  std::sort(L.cover_pairs_.begin(), L.cover_pairs_.end());

  L.leq_ = std::move(leq);
  L.labels_ = std::move(labels);
  return L;
}

FiniteLattice FiniteLattice::from_order(BitMatrix leq, std::vector<std::string> labels) {
  return build(std::move(leq), std::move(labels));
}

FiniteLattice FiniteLattice::from_covers(int n, std::span<const std::pair<int, int>> covers,
                                         std::vector<std::string> labels) {
  if (n < 1) throw std::invalid_argument("a lattice needs at least one element");
  std::vector<std::vector<int>> up_adj(n);
  std::vector<int> indeg(n, 0);
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      throw std::out_of_range("cover pair out of range");
    if (lo == hi) throw CyclicCovers("self-cover on element " + std::to_string(lo));
    up_adj[lo].push_back(hi);
    ++indeg[hi];
  }
  // Kahn topological order over the cover DAG
  std::vector<int> topo;
  topo.reserve(n);
  std::vector<int> q;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) q.push_back(i);
  std::vector<int> deg = indeg;
  while (!q.empty()) {
    int v = q.back();
    q.pop_back();
    topo.push_back(v);
    for (int w : up_adj[v])
      if (--deg[w] == 0) q.push_back(w);
  }
  if (static_cast<int>(topo.size()) != n)
    throw CyclicCovers("cover relation contains a cycle");

  BitMatrix leq(n);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int v = *it;
    leq.set(v, v);
    auto rv = leq.row(v);
    for (int w : up_adj[v]) {
      auto rw = leq.row(w);
      for (int k = 0; k < leq.words_per_row(); ++k) rv[k] |= rw[k];
    }
  }
  return build(std::move(leq), std::move(labels));
}

FiniteLattice FiniteLattice::from_covers(int n, std::initializer_list<std::pair<int, int>> covers,
                                         std::vector<std::string> labels) {
  return from_covers(n, std::span<const std::pair<int, int>>(covers.begin(), covers.size()),
                     std::move(labels));
}

std::string FiniteLattice::label(int a) const {
  if (labels_.empty()) return std::to_string(a);
  return labels_[a];
}

FiniteLattice FiniteLattice::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_)
    throw std::invalid_argument("label count does not match element count");
  FiniteLattice copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

// ---- predicates ------------------------------------------------------------

bool is_distributive(const FiniteLattice& L) {
  const int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return false;
  return true;
}

bool is_modular(const FiniteLattice& L) {
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (!L.leq(a, c)) continue;
      for (int b = 0; b < n; ++b)
        if (L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), c)) return false;
    }
  return true;
}

std::optional<std::pair<int, int>> semimodularity_violation(const FiniteLattice& L) {
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int m = L.meet(a, b);
      if (L.covers(m, a) && !L.covers(b, L.join(a, b))) return std::make_pair(a, b);
    }
  return std::nullopt;
}

bool is_semimodular(const FiniteLattice& L) { return !semimodularity_violation(L).has_value(); }

std::optional<std::array<int, 5>> find_sublattice(const FiniteLattice& L,
                                                  SublatticePattern pattern) {
  const int n = L.size();
  if (pattern == SublatticePattern::M3) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (L.comparable(a, b)) continue;
        int o = L.meet(a, b), i = L.join(a, b);
        for (int c = b + 1; c < n; ++c) {
          if (c == a || L.comparable(a, c) || L.comparable(b, c)) continue;
          if (L.meet(a, c) == o && L.meet(b, c) == o && L.join(a, c) == i && L.join(b, c) == i)
            return std::array<int, 5>{o, a, b, c, i};
        }
      }
    return std::nullopt;
  }
  // N5: x incomparable to y < z with x^y = x^z and xvy = xvz
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (L.comparable(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (z == y || !L.lt(y, z) || L.comparable(x, z)) continue;
        if (L.meet(x, y) == L.meet(x, z) && L.join(x, y) == L.join(x, z))
          return std::array<int, 5>{L.meet(x, y), x, y, z, L.join(x, y)};
      }
    }
  return std::nullopt;
}

// ---- subsets ----------------------------------------------------------------

bool is_ideal(const FiniteLattice& L, const ElementSubset& s) {
  if (s.universe_size() != L.size()) throw std::invalid_argument("subset universe mismatch");
  auto elems = s.elements();
  if (elems.empty()) return false;
  for (int x : elems) {
    bool ok = true;
    bits::for_each(L.down_set(x), [&](int y) {
      if (!s.contains(y)) ok = false;
    });
    if (!ok) return false;
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!s.contains(L.join(elems[i], elems[j]))) return false;
  return true;
}

bool is_filter(const FiniteLattice& L, const ElementSubset& s) {
  if (s.universe_size() != L.size()) throw std::invalid_argument("subset universe mismatch");
  auto elems = s.elements();
  if (elems.empty()) return false;
  for (int x : elems) {
    bool ok = true;
    bits::for_each(L.up_set(x), [&](int y) {
      if (!s.contains(y)) ok = false;
    });
    if (!ok) return false;
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!s.contains(L.meet(elems[i], elems[j]))) return false;
  return true;
}

ElementSubset principal_filter(const FiniteLattice& L, int a) {
  ElementSubset s(L.size());
  bits::for_each(L.up_set(a), [&](int x) { s.add(x); });
  return s;
}

ElementSubset principal_ideal(const FiniteLattice& L, int a) {
  ElementSubset s(L.size());
  bits::for_each(L.down_set(a), [&](int x) { s.add(x); });
  return s;
}

ElementSubset interval(const FiniteLattice& L, int a, int b) {
  if (!L.leq(a, b)) throw std::invalid_argument("interval endpoints must satisfy a <= b");
  ElementSubset s(L.size());
  for (int i = 0; i < L.size(); ++i)
    if (L.leq(a, i) && L.leq(i, b)) s.add(i);
  return s;
}

ElementSubset convex_sublattice_generated(const FiniteLattice& L, const ElementSubset& seed) {
  if (seed.universe_size() != L.size()) throw std::invalid_argument("subset universe mismatch");
  if (seed.empty()) throw std::invalid_argument("seed must be nonempty");
  ElementSubset cur = seed;
  const int words = static_cast<int>(cur.words().size());
  bool changed = true;
  while (changed) {
    changed = false;
    auto elems = cur.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i; j < elems.size(); ++j) {
        int m = L.meet(elems[i], elems[j]);
        int v = L.join(elems[i], elems[j]);
        if (!cur.contains(m)) {
          cur.add(m);
          changed = true;
        }
        if (!cur.contains(v)) {
          cur.add(v);
          changed = true;
        }
      }
    // betweenness: everything with some member below and some member above
    std::vector<std::uint64_t> above(words, 0), below(words, 0);
    for (int x : cur.elements()) {
      auto up = L.up_set(x);
      auto dn = L.down_set(x);
      for (int k = 0; k < words; ++k) {
        above[k] |= up[k];
        below[k] |= dn[k];
      }
    }
    auto w = cur.words();
    for (int k = 0; k < words; ++k) {
      std::uint64_t add = (above[k] & below[k]) & ~w[k];
      if (add) {
        w[k] |= add;
        changed = true;
      }
    }
  }
  return cur;
}

FiniteLattice sublattice(const FiniteLattice& L, const ElementSubset& s,
                         std::vector<int>* elements_out) {
  if (s.universe_size() != L.size()) throw std::invalid_argument("subset universe mismatch");
  auto elems = s.elements();
  if (elems.empty()) throw std::invalid_argument("sublattice of an empty subset");
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (!s.contains(L.meet(elems[i], elems[j])) || !s.contains(L.join(elems[i], elems[j])))
        throw std::invalid_argument("subset is not closed under meet and join");
    }
  const int m = static_cast<int>(elems.size());
  BitMatrix leq(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (L.leq(elems[i], elems[j])) leq.set(i, j);
  std::vector<std::string> labels;
  if (L.has_custom_labels()) {
    labels.reserve(m);
    for (int e : elems) labels.push_back(L.label(e));
  }
  if (elements_out) *elements_out = elems;
  return FiniteLattice::from_order(std::move(leq), std::move(labels));
}

// ---- isomorphism -------------------------------------------------------------

namespace {

using Signature = std::tuple<int, int, int, int, int>;

Signature element_signature(const FiniteLattice& L, int a) {
  int down = bits::popcount(L.down_set(a));
  int up = bits::popcount(L.up_set(a));
  int lower_covers = 0, upper_covers = 0;
  for (int b = 0; b < L.size(); ++b) {
    if (L.covers(b, a)) ++lower_covers;
    if (L.covers(a, b)) ++upper_covers;
  }
  return {L.height(a), down, up, lower_covers, upper_covers};
}

bool extend_map(const FiniteLattice& L, const FiniteLattice& K,
                const std::vector<std::vector<int>>& candidates, std::vector<int>& f,
                std::vector<bool>& used, int i) {
  const int n = L.size();
  if (i == n) return true;
  for (int k : candidates[i]) {
    if (used[k]) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) {
      if (L.leq(i, j) != K.leq(k, f[j])) ok = false;
      if (ok && L.leq(j, i) != K.leq(f[j], k)) ok = false;
    }
    if (!ok) continue;
    f[i] = k;
    used[k] = true;
    if (extend_map(L, K, candidates, f, used, i + 1)) return true;
    used[k] = false;
    f[i] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const FiniteLattice& L, const FiniteLattice& K) {
  const int n = L.size();
  if (n != K.size()) return std::nullopt;
  std::vector<Signature> sigL(n), sigK(n);
  for (int i = 0; i < n; ++i) {
    sigL[i] = element_signature(L, i);
    sigK[i] = element_signature(K, i);
  }
  {
    auto a = sigL, b = sigK;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<std::vector<int>> candidates(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (sigL[i] == sigK[k]) candidates[i].push_back(k);

  std::vector<int> f(n, -1);
  std::vector<bool> used(n, false);
  if (!extend_map(L, K, candidates, f, used, 0)) return std::nullopt;
  // order isomorphisms between lattices preserve meet and join; verify anyway
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (f[L.meet(a, b)] != K.meet(f[a], f[b])) return std::nullopt;
      if (f[L.join(a, b)] != K.join(f[a], f[b])) return std::nullopt;
    }
  return f;
}

}  // namespace lattkit
