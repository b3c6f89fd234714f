#include "lattkit/extensions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "lattkit/boolean_triples.hpp"

namespace lattkit {

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string ExtensionReport::summary_line() const {
  std::ostringstream os;
  os << "proper=" << yn(proper) << " congruence_preserving=" << yn(congruence_preserving)
     << " extensive=" << yn(extensive) << " image_is_ideal=" << yn(image_is_ideal)
     << " con_source=" << con_source << " con_target=" << con_target;
  return os.str();
}

std::string ExtensionReport::to_text() const {
  std::ostringstream os;
  os << "proper: " << yn(proper) << '\n'
     << "congruence_preserving: " << yn(congruence_preserving) << '\n'
     << "extensive: " << yn(extensive) << '\n'
     << "image_is_ideal: " << yn(image_is_ideal) << '\n'
     << "con_source: " << con_source << '\n'
     << "con_target: " << con_target << '\n';
  if (failure) {
    os << "failure: " << failure->verdict;
    if (failure->congruence) os << " congruence=" << failure->congruence->to_block_string();
    if (failure->element) os << " element=" << *failure->element;
    os << '\n';
  } else {
    os << "failure: none\n";
  }
  return os.str();
}

ExtensionReport verify_extension(const Embedding& e, std::size_t max_congruences) {
  const FiniteLattice& L = e.source();
  const FiniteLattice& K = e.target();
  ExtensionReport rep;

  CongruenceLattice conL = all_congruences(L, max_congruences);
  CongruenceLattice conK = all_congruences(K, max_congruences);
  rep.con_source = conL.congruences.size();
  rep.con_target = conK.congruences.size();

  auto fail = [&](const std::string& verdict, std::optional<Congruence> c,
                  std::optional<int> el) {
    if (!rep.failure) rep.failure = ExtensionFailure{verdict, std::move(c), el};
  };

  rep.proper = e.image().count() < K.size();
  if (!rep.proper) fail("proper", std::nullopt, std::nullopt);

  // restriction map Con(K) -> Con(L): bijective iff injective and surjective
  rep.congruence_preserving = true;
  std::map<Congruence, const Congruence*> seen;
  for (const Congruence& theta : conK.congruences) {
    Congruence r = restrict_congruence(theta, e);
    auto [it, inserted] = seen.emplace(std::move(r), &theta);
    if (!inserted) {
      rep.congruence_preserving = false;
      fail("congruence_preserving", theta, std::nullopt);
      break;
    }
  }
  if (rep.congruence_preserving) {
    for (const Congruence& phi : conL.congruences) {
      if (!seen.count(phi)) {
        rep.congruence_preserving = false;
        fail("congruence_preserving", phi, std::nullopt);
        break;
      }
    }
  }

  ElementSubset image = e.image();
  ElementSubset hull = convex_sublattice_generated(K, image);
  rep.extensive = hull.count() == K.size();
  if (!rep.extensive) {
    for (int x = 0; x < K.size(); ++x)
      if (!hull.contains(x)) {
        fail("extensive", std::nullopt, x);
        break;
      }
  }

  rep.image_is_ideal = is_ideal(K, image);
  if (!rep.image_is_ideal) fail("image_is_ideal", std::nullopt, std::nullopt);

  return rep;
}

Gluing glue(const FiniteLattice& L, const ElementSubset& filter, const FiniteLattice& A,
            const ElementSubset& ideal, const std::vector<int>& iso) {
  if (!is_filter(L, filter)) throw NotAFilter("the glued-over subset of the lower lattice");
  if (!is_ideal(A, ideal)) throw NotAnIdeal("the glued-over subset of the upper lattice");
  if (static_cast<int>(iso.size()) != L.size())
    throw NotIsomorphism("iso must assign a value to every element of the lower lattice");

  const std::vector<int> f_elems = filter.elements();
  std::vector<bool> hit(A.size(), false);
  for (int x = 0; x < L.size(); ++x) {
    bool in_f = filter.contains(x);
    if (in_f != (iso[x] >= 0))
      throw NotIsomorphism("iso must be defined exactly on the filter");
    if (!in_f) continue;
    if (iso[x] >= A.size() || !ideal.contains(iso[x]))
      throw NotIsomorphism("iso must land in the ideal");
    if (hit[iso[x]]) throw NotIsomorphism("iso is not injective");
    hit[iso[x]] = true;
  }
  if (static_cast<int>(f_elems.size()) != ideal.count())
    throw NotIsomorphism("filter and ideal have different sizes");
  for (int x1 : f_elems)
    for (int x2 : f_elems)
      if (L.leq(x1, x2) != A.leq(iso[x1], iso[x2]))
        throw NotIsomorphism("iso does not preserve the order both ways");

  // universe: all of L, then A - ideal in ascending A order
  const int nL = L.size();
  std::vector<int> a_to_k(A.size(), -1);
  std::vector<int> appended;  // appended[k - nL] = A element
  for (int x : f_elems) a_to_k[iso[x]] = x;
  for (int a = 0; a < A.size(); ++a)
    if (!ideal.contains(a)) {
      a_to_k[a] = nL + static_cast<int>(appended.size());
      appended.push_back(a);
    }
  const int nK = nL + static_cast<int>(appended.size());

  BitMatrix leq(nK);
  for (int x = 0; x < nL; ++x)
    for (int y = 0; y < nL; ++y)
      if (L.leq(x, y)) leq.set(x, y);
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < A.size(); ++b)
      if (A.leq(a, b)) leq.set(a_to_k[a], a_to_k[b]);
  // x in L is below an appended element y iff x <= f in the filter with
  // iso(f) <= y in A
  for (int x = 0; x < nL; ++x)
    for (std::size_t k = 0; k < appended.size(); ++k) {
      bool below = false;
      for (int f : f_elems)
        if (L.leq(x, f) && A.leq(iso[f], appended[k])) {
          below = true;
          break;
        }
      if (below) leq.set(x, nL + static_cast<int>(k));
    }

  std::vector<std::string> labels;
  labels.reserve(nK);
  for (int x = 0; x < nL; ++x) labels.push_back(L.label(x));
  for (int a : appended) labels.push_back(A.label(a));

  FiniteLattice K = FiniteLattice::from_order(std::move(leq), std::move(labels));

  std::vector<int> lower_map(nL);
  std::iota(lower_map.begin(), lower_map.end(), 0);
  std::vector<int> upper_map(A.size());
  for (int a = 0; a < A.size(); ++a) upper_map[a] = a_to_k[a];

  Embedding lower(L, K, std::move(lower_map));
  Embedding upper(A, K, std::move(upper_map));
  return Gluing{std::move(K), std::move(lower), std::move(upper)};
}

IdealExtension ideal_extension(const FiniteLattice& L, int a, std::size_t max_candidates) {
  if (a < 0 || a >= L.size()) throw std::out_of_range("element out of range");
  ElementSubset filter = principal_filter(L, a);
  if (filter.count() < 2)
    throw FilterTooSmall("the filter of " + L.label(a) + " has a single element");

  std::vector<int> f_elems;
  FiniteLattice F = sublattice(L, filter, &f_elems);

  TripleLattice M = m3_hat(F, max_candidates);
  const FiniteLattice& A = M.lattice();
  Embedding zero = zero_embedding(M);

  ElementSubset ideal = zero.image();
  std::vector<int> iso(L.size(), -1);
  for (std::size_t i = 0; i < f_elems.size(); ++i) iso[f_elems[i]] = zero(static_cast<int>(i));

  Gluing g = glue(L, filter, A, ideal, iso);
  return IdealExtension{std::move(g.result), std::move(g.lower)};
}

}  // namespace lattkit
