#include "lattkit/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lattkit {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n), rank(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank[a] < rank[b]) std::swap(a, b);
    parent[b] = a;
    if (rank[a] == rank[b]) ++rank[a];
    return true;
  }
  std::vector<int> parent;
  std::vector<int> rank;
};

Congruence canonical_from_union_find(UnionFind& uf, int n) {
  std::vector<int> raw(n);
  for (int i = 0; i < n; ++i) raw[i] = uf.find(i);
  return Congruence::from_block_ids(std::move(raw));
}

// Core closure: the smallest congruence relating every pair in `work`.
// Processing only pairs that actually merge suffices: the final relation is
// the transitive closure of processed merges, and each merge enqueued its
// meet/join consequences.
Congruence substitution_closure(const FiniteLattice& L,
                                std::vector<std::pair<int, int>> work) {
  const int n = L.size();
  UnionFind uf(n);
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    if (!uf.unite(a, b)) continue;
    for (int c = 0; c < n; ++c) {
      int m1 = L.meet(a, c), m2 = L.meet(b, c);
      if (uf.find(m1) != uf.find(m2)) work.emplace_back(m1, m2);
      int j1 = L.join(a, c), j2 = L.join(b, c);
      if (uf.find(j1) != uf.find(j2)) work.emplace_back(j1, j2);
    }
  }
  return canonical_from_union_find(uf, n);
}

}  // namespace

// ---- Congruence -------------------------------------------------------------

Congruence Congruence::identity(int n) {
  Congruence c;
  c.block_.resize(n);
  std::iota(c.block_.begin(), c.block_.end(), 0);
  return c;
}

Congruence Congruence::universal(int n) {
  Congruence c;
  c.block_.assign(n, 0);
  return c;
}

Congruence Congruence::from_block_ids(std::vector<int> raw) {
  const int n = static_cast<int>(raw.size());
  Congruence c;
  c.block_.assign(n, -1);
  std::map<int, int> smallest;  // raw id -> smallest element seen
  for (int i = 0; i < n; ++i) {
    auto it = smallest.find(raw[i]);
    if (it == smallest.end()) smallest.emplace(raw[i], i);
  }
  for (int i = 0; i < n; ++i) c.block_[i] = smallest.at(raw[i]);
  return c;
}

int Congruence::block_count() const {
  int count = 0;
  for (int i = 0; i < size(); ++i)
    if (block_[i] == i) ++count;
  return count;
}

std::vector<std::vector<int>> Congruence::blocks() const {
  std::map<int, std::vector<int>> by_id;
  for (int i = 0; i < size(); ++i) by_id[block_[i]].push_back(i);
  std::vector<std::vector<int>> out;
  out.reserve(by_id.size());
  for (auto& [id, members] : by_id) out.push_back(std::move(members));
  return out;
}

bool Congruence::refines(const Congruence& coarser) const {
  if (size() != coarser.size()) throw std::invalid_argument("partition size mismatch");
  for (int i = 0; i < size(); ++i)
    if (coarser.block_[i] != coarser.block_[block_[i]]) return false;
  return true;
}

std::string Congruence::to_block_string() const {
  std::ostringstream os;
  os << '{';
  bool first_block = true;
  for (const auto& block : blocks()) {
    if (!first_block) os << '|';
    first_block = false;
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) os << ',';
      os << block[k];
    }
  }
  os << '}';
  return os.str();
}

// ---- operations --------------------------------------------------------------

bool is_congruence(const FiniteLattice& L, const Congruence& partition) {
  const int n = L.size();
  if (partition.size() != n) throw std::invalid_argument("partition size mismatch");
  // checking each element against its block representative suffices: the
  // relation is transitive, so pairwise compatibility follows.
  for (int a = 0; a < n; ++a) {
    int r = partition.block_id(a);
    if (r == a) continue;
    for (int c = 0; c < n; ++c) {
      if (!partition.related(L.meet(a, c), L.meet(r, c))) return false;
      if (!partition.related(L.join(a, c), L.join(r, c))) return false;
    }
  }
  return true;
}

Congruence principal_congruence(const FiniteLattice& L, int a, int b) {
  if (a < 0 || a >= L.size() || b < 0 || b >= L.size())
    throw std::out_of_range("element out of range");
  return substitution_closure(L, {{a, b}});
}

Congruence congruence_generated(const FiniteLattice& L,
                                std::span<const std::pair<int, int>> seeds) {
  return substitution_closure(L, std::vector<std::pair<int, int>>(seeds.begin(), seeds.end()));
}

Congruence congruence_join(const FiniteLattice& L, const Congruence& x, const Congruence& y) {
  const int n = L.size();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("partition size mismatch");
  std::vector<std::pair<int, int>> seeds;
  for (int i = 0; i < n; ++i) {
    if (x.block_id(i) != i) seeds.emplace_back(i, x.block_id(i));
    if (y.block_id(i) != i) seeds.emplace_back(i, y.block_id(i));
  }
  return substitution_closure(L, std::move(seeds));
}

Congruence congruence_meet(const Congruence& x, const Congruence& y) {
  const int n = x.size();
  if (y.size() != n) throw std::invalid_argument("partition size mismatch");
  std::map<std::pair<int, int>, int> key_to_id;
  std::vector<int> raw(n);
  for (int i = 0; i < n; ++i) {
    auto key = std::make_pair(x.block_id(i), y.block_id(i));
    auto [it, inserted] = key_to_id.emplace(key, i);
    raw[i] = it->second;
  }
  return Congruence::from_block_ids(std::move(raw));
}

int CongruenceLattice::index_of(const Congruence& c) const {
  auto it = std::lower_bound(congruences.begin(), congruences.end(), c);
  if (it == congruences.end() || !(*it == c)) return -1;
  return static_cast<int>(it - congruences.begin());
}

CongruenceLattice all_congruences(const FiniteLattice& L, std::size_t max_count) {
  const int n = L.size();

  // Principal congruences of cover pairs generate them all: con(a, b) for
  // a < b is the join of the covering steps along any maximal chain, and
  // con(a, b) = con(a^b, avb) in general.
  std::set<Congruence> known;
  known.insert(Congruence::identity(n));
  std::vector<Congruence> generators;
  for (auto [lo, hi] : L.cover_pairs()) {
    Congruence pc = principal_congruence(L, lo, hi);
    if (known.insert(pc).second) generators.push_back(pc);
  }

  std::vector<Congruence> frontier(known.begin(), known.end());
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const Congruence& f : frontier)
      for (const Congruence& g : generators) {
        Congruence j = congruence_join(L, f, g);
        if (known.insert(j).second) {
          next.push_back(j);
          if (known.size() > max_count)
            throw SizeLimitExceeded("congruence count", known.size(), max_count);
        }
      }
    frontier = std::move(next);
  }

  CongruenceLattice result;
  result.congruences.assign(known.begin(), known.end());

  // Con(L) is closed under intersection; a miss here is a construction bug.
  for (std::size_t i = 0; i < result.congruences.size(); ++i)
    for (std::size_t j = i + 1; j < result.congruences.size(); ++j) {
      Congruence m = congruence_meet(result.congruences[i], result.congruences[j]);
      if (!known.count(m))
        throw std::logic_error("congruence set is not meet-closed");
    }

  const int m = static_cast<int>(result.congruences.size());
  BitMatrix leq(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (result.congruences[i].refines(result.congruences[j])) leq.set(i, j);
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const Congruence& c : result.congruences) labels.push_back(c.to_block_string());
  result.order = FiniteLattice::from_order(std::move(leq), std::move(labels));
  return result;
}

Congruence restrict_congruence(const Congruence& theta, const Embedding& e) {
  if (theta.size() != e.target().size())
    throw std::invalid_argument("congruence does not live on the embedding target");
  const int n = e.source().size();
  std::vector<int> raw(n);
  std::map<int, int> target_block_to_source;  // block id in theta -> first source element
  for (int i = 0; i < n; ++i) {
    int tb = theta.block_id(e(i));
    auto [it, inserted] = target_block_to_source.emplace(tb, i);
    raw[i] = it->second;
  }
  return Congruence::from_block_ids(std::move(raw));
}

std::vector<Congruence> congruences_by_partition_scan(const FiniteLattice& L, int max_n) {
  const int n = L.size();
  if (n > max_n)
    throw SizeLimitExceeded("partition scan universe", static_cast<std::size_t>(n),
                            static_cast<std::size_t>(max_n));
  std::vector<Congruence> out;
  // restricted growth strings: a[0] = 0, a[i] <= max(a[0..i-1]) + 1
  std::vector<int> a(n, 0);
  while (true) {
    std::vector<int> raw(n);
    std::vector<int> first_of(n, -1);
    for (int i = 0; i < n; ++i) {
      if (first_of[a[i]] < 0) first_of[a[i]] = i;
      raw[i] = first_of[a[i]];
    }
    Congruence c = Congruence::from_block_ids(std::move(raw));
    if (is_congruence(L, c)) out.push_back(c);

    // next restricted growth string
    int i = n - 1;
    for (; i > 0; --i) {
      int mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, a[j]);
      if (a[i] <= mx) break;
    }
    if (i == 0) break;
    ++a[i];
    for (int j = i + 1; j < n; ++j) a[j] = 0;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lattkit
