#include "lattkit/m3d.hpp"

#include <algorithm>

namespace lattkit {

namespace {

int triple_index(const std::vector<Triple>& members, Triple t) {
  auto it = std::lower_bound(members.begin(), members.end(), t);
  if (it == members.end() || !(*it == t)) return -1;
  return static_cast<int>(it - members.begin());
}

}  // namespace

int BalancedTriplePoset::index_of(Triple t) const { return triple_index(members, t); }
int M3OfD::index_of(Triple t) const { return triple_index(members, t); }

BalancedTriplePoset balanced_poset(const FiniteLattice& L, std::size_t max_candidates) {
  const int n = L.size();
  const std::size_t candidates =
      static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (candidates > max_candidates)
    throw SizeLimitExceeded("triple candidates", candidates, max_candidates);

  BalancedTriplePoset P;
  P.base = L;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Triple t{x, y, z};
        if (is_balanced(L, t)) P.members.push_back(t);
      }
  const int m = static_cast<int>(P.members.size());
  P.leq = BitMatrix(m);
  for (int i = 0; i < m; ++i) {
    Triple a = P.members[i];
    for (int j = 0; j < m; ++j) {
      Triple b = P.members[j];
      if (L.leq(a.x, b.x) && L.leq(a.y, b.y) && L.leq(a.z, b.z)) P.leq.set(i, j);
    }
  }
  return P;
}

M3OfD m3_of_d(const FiniteLattice& D, std::size_t max_candidates) {
  if (!is_distributive(D))
    throw NotDistributive("M3[D] requires a distributive base lattice");
  BalancedTriplePoset P = balanced_poset(D, max_candidates);

  std::vector<std::string> labels;
  labels.reserve(P.members.size());
  for (Triple t : P.members) labels.push_back(render_triple(D, t));

  std::vector<Triple> members = std::move(P.members);
  FiniteLattice lattice = FiniteLattice::from_order(std::move(P.leq), std::move(labels));

  int zero = D.bottom();
  std::vector<int> map(D.size());
  for (int x = 0; x < D.size(); ++x) map[x] = triple_index(members, Triple{x, zero, zero});
  Embedding emb(D, lattice, std::move(map));
  return M3OfD{D, std::move(members), std::move(lattice), std::move(emb)};
}

std::optional<BalancedPosetFailure> balanced_lattice_failure(const FiniteLattice& L,
                                                             std::size_t max_candidates) {
  BalancedTriplePoset P = balanced_poset(L, max_candidates);
  LatticeCheck check = poset_is_lattice(P.leq);
  if (check.is_lattice) return std::nullopt;
  return BalancedPosetFailure{P.members[check.a], P.members[check.b], check.join_side};
}

}  // namespace lattkit
