#include "lattkit/boolean_triples.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lattkit {

bool is_boolean(const FiniteLattice& L, Triple t) {
  return t.x == L.meet(L.join(t.x, t.y), L.join(t.x, t.z)) &&
         t.y == L.meet(L.join(t.y, t.x), L.join(t.y, t.z)) &&
         t.z == L.meet(L.join(t.z, t.x), L.join(t.z, t.y));
}

bool is_balanced(const FiniteLattice& L, Triple t) {
  int xy = L.meet(t.x, t.y);
  return xy == L.meet(t.y, t.z) && xy == L.meet(t.z, t.x);
}

Triple boolean_closure(const FiniteLattice& L, Triple t) {
  return Triple{L.meet(L.join(t.x, t.y), L.join(t.x, t.z)),
                L.meet(L.join(t.y, t.x), L.join(t.y, t.z)),
                L.meet(L.join(t.z, t.x), L.join(t.z, t.y))};
}

std::optional<Triple> meet_representation(const FiniteLattice& L, Triple t) {
  Triple r{L.join(t.x, t.y), L.join(t.x, t.z), L.join(t.y, t.z)};
  if (L.meet(r.x, r.y) == t.x && L.meet(r.x, r.z) == t.y && L.meet(r.y, r.z) == t.z) return r;
  return std::nullopt;
}

std::string render_triple(const FiniteLattice& base, Triple t) {
  return "<" + base.label(t.x) + "," + base.label(t.y) + "," + base.label(t.z) + ">";
}

int TripleLattice::index_of(Triple t) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), t);
  if (it == members_.end() || !(*it == t)) return -1;
  return static_cast<int>(it - members_.begin());
}

TripleLattice m3_hat(const FiniteLattice& L, std::size_t max_candidates) {
  const int n = L.size();
  const std::size_t candidates =
      static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (candidates > max_candidates)
    throw SizeLimitExceeded("triple candidates", candidates, max_candidates);

  TripleLattice M;
  M.base_ = L;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Triple t{x, y, z};
        if (is_boolean(L, t)) M.members_.push_back(t);
      }

  const int m = static_cast<int>(M.members_.size());
  BitMatrix leq(m);
  for (int i = 0; i < m; ++i) {
    Triple a = M.members_[i];
    for (int j = 0; j < m; ++j) {
      Triple b = M.members_[j];
      if (L.leq(a.x, b.x) && L.leq(a.y, b.y) && L.leq(a.z, b.z)) leq.set(i, j);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (Triple t : M.members_) labels.push_back(render_triple(L, t));
  M.lattice_ = FiniteLattice::from_order(std::move(leq), std::move(labels));

  // Cross-check the poset-derived tables against the defining formulas:
  // meets are componentwise, joins are closures of componentwise joins.
  for (int i = 0; i < m; ++i) {
    Triple a = M.members_[i];
    for (int j = i; j < m; ++j) {
      Triple b = M.members_[j];
      int cw_meet = M.index_of(Triple{L.meet(a.x, b.x), L.meet(a.y, b.y), L.meet(a.z, b.z)});
      if (cw_meet < 0 || cw_meet != M.lattice_.meet(i, j))
        throw std::logic_error("componentwise meet disagrees with poset glb");
      Triple cw_join{L.join(a.x, b.x), L.join(a.y, b.y), L.join(a.z, b.z)};
      int closed = M.index_of(boolean_closure(L, cw_join));
      if (closed < 0 || closed != M.lattice_.join(i, j))
        throw std::logic_error("closure-formula join disagrees with poset lub");
    }
  }

  std::vector<int> diag(n);
  for (int x = 0; x < n; ++x) diag[x] = M.index_of(Triple{x, x, x});
  M.diagonal_ = Embedding(L, M.lattice_, std::move(diag));
  return M;
}

Triple TripleClassification::reconstruct() const {
  switch (kind) {
    case TripleCase::Diagonal:
      return Triple{diagonal_value, diagonal_value, diagonal_value};
    case TripleCase::TwoValues: {
      Triple t{small, small, small};
      if (big_position == 0) t.x = big;
      if (big_position == 1) t.y = big;
      if (big_position == 2) t.z = big;
      return t;
    }
    case TripleCase::ComparablePairWithMeet: {
      std::array<int, 3> slots{};
      int rest[2], r = 0;
      for (int pos = 0; pos < 3; ++pos)
        if (pos != meet_position) rest[r++] = pos;
      slots[meet_position] = meet_value;
      slots[rest[0]] = p;
      slots[rest[1]] = q;
      return Triple{slots[0], slots[1], slots[2]};
    }
    case TripleCase::AtomsOfBoolean8:
      return Triple{atoms[0], atoms[1], atoms[2]};
  }
  return Triple{};
}

TripleClassification classify_boolean(const FiniteLattice& L, Triple t) {
  if (!is_boolean(L, t)) throw NotBoolean(render_triple(L, t));

  TripleClassification c{};
  std::array<int, 3> comp{t.x, t.y, t.z};
  std::array<int, 3> distinct = comp;
  std::sort(distinct.begin(), distinct.end());
  int values = static_cast<int>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());

  if (values == 1) {
    c.kind = TripleCase::Diagonal;
    c.diagonal_value = t.x;
    return c;
  }

  if (values == 2) {
    // the repeated value is the meet of the pair, so it is the smaller one
    int a, b, pos_b;
    if (comp[0] == comp[1]) {
      a = comp[0]; b = comp[2]; pos_b = 2;
    } else if (comp[0] == comp[2]) {
      a = comp[0]; b = comp[1]; pos_b = 1;
    } else {
      a = comp[1]; b = comp[0]; pos_b = 0;
    }
    if (!L.lt(a, b))
      throw std::logic_error("two-valued Boolean triple without a < b");
    c.kind = TripleCase::TwoValues;
    c.small = a;
    c.big = b;
    c.big_position = pos_b;
    return c;
  }

  // three distinct components
  bool cmp01 = L.comparable(comp[0], comp[1]);
  bool cmp02 = L.comparable(comp[0], comp[2]);
  bool cmp12 = L.comparable(comp[1], comp[2]);
  if (cmp01 || cmp02 || cmp12) {
    // exactly one component lies below both others; it equals their meet
    int meet_pos = -1;
    for (int posn = 0; posn < 3; ++posn) {
      int other1 = comp[(posn + 1) % 3], other2 = comp[(posn + 2) % 3];
      if (L.lt(comp[posn], other1) && L.lt(comp[posn], other2)) {
        meet_pos = posn;
        break;
      }
    }
    if (meet_pos < 0)
      throw std::logic_error("Boolean triple with a comparable pair but no least component");
    int rest[2], r = 0;
    for (int posn = 0; posn < 3; ++posn)
      if (posn != meet_pos) rest[r++] = posn;
    int pp = comp[rest[0]], qq = comp[rest[1]];
    if (L.comparable(pp, qq) || L.meet(pp, qq) != comp[meet_pos])
      throw std::logic_error("Boolean triple does not match the <a,b,a^b> shape");
    c.kind = TripleCase::ComparablePairWithMeet;
    c.p = pp;
    c.q = qq;
    c.meet_value = comp[meet_pos];
    c.meet_position = meet_pos;
    return c;
  }

  // pairwise incomparable: the components are the atoms of an 8-element
  // Boolean sublattice {bot, x, y, z, xvy, xvz, yvz, top}
  int bot = L.meet(t.x, t.y);
  int top = L.join(L.join(t.x, t.y), t.z);
  std::array<int, 8> B{bot, t.x, t.y, t.z, L.join(t.x, t.y), L.join(t.x, t.z), L.join(t.y, t.z), top};
  {
    auto sorted = B;
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) != sorted.end())
      throw std::logic_error("Boolean-8 witness has fewer than 8 elements");
  }
  // subset map S |-> join of the atoms in S; verify the cube structure
  auto elem_of = [&](unsigned mask) {
    int e = bot;
    if (mask & 1u) e = L.join(e, t.x);
    if (mask & 2u) e = L.join(e, t.y);
    if (mask & 4u) e = L.join(e, t.z);
    return e;
  };
  for (unsigned s = 0; s < 8; ++s)
    for (unsigned u = 0; u < 8; ++u) {
      if (L.meet(elem_of(s), elem_of(u)) != elem_of(s & u) ||
          L.join(elem_of(s), elem_of(u)) != elem_of(s | u))
        throw std::logic_error("Boolean-8 witness is not a Boolean cube");
    }
  c.kind = TripleCase::AtomsOfBoolean8;
  c.atoms = {t.x, t.y, t.z};
  std::sort(B.begin(), B.end());
  c.boolean8 = B;
  return c;
}

Embedding zero_embedding(const TripleLattice& M) {
  const FiniteLattice& L = M.base();
  int zero = L.bottom();
  std::vector<int> map(L.size());
  for (int x = 0; x < L.size(); ++x) {
    int idx = M.index_of(Triple{x, zero, zero});
    if (idx < 0) throw std::logic_error("<x,0,0> is not a member");
    map[x] = idx;
  }
  return Embedding(L, M.lattice(), std::move(map));
}

std::array<int, 5> spanning_m3(const TripleLattice& M) {
  const FiniteLattice& L = M.base();
  if (L.size() == 1) throw TrivialLattice("spanning M3 needs 0 != 1");
  int b = L.bottom(), t = L.top();
  std::array<int, 5> out{
      M.index_of(Triple{b, b, b}), M.index_of(Triple{t, b, b}), M.index_of(Triple{b, t, b}),
      M.index_of(Triple{b, b, t}), M.index_of(Triple{t, t, t})};
  for (int i : out)
    if (i < 0) throw std::logic_error("spanning triple is not a member");
  return out;
}

Congruence lift_congruence(const TripleLattice& M, const Congruence& theta) {
  if (theta.size() != M.base().size())
    throw std::invalid_argument("congruence does not live on the base lattice");
  const int m = M.size();
  std::map<std::array<int, 3>, int> class_to_first;
  std::vector<int> raw(m);
  for (int i = 0; i < m; ++i) {
    Triple t = M.member(i);
    std::array<int, 3> key{theta.block_id(t.x), theta.block_id(t.y), theta.block_id(t.z)};
    auto [it, inserted] = class_to_first.emplace(key, i);
    raw[i] = it->second;
  }
  return Congruence::from_block_ids(std::move(raw));
}

}  // namespace lattkit
