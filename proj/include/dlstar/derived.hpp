#ifndef DLSTAR_DERIVED_HPP
#define DLSTAR_DERIVED_HPP

#include <vector>

#include "dlstar/group.hpp"

namespace dlstar {

namespace detail {

// Normal closure of `seeds` under conjugation by `conjugators`.
inline Group closure_under_conjugation(std::size_t degree, const std::vector<Permutation>& seeds,
                                       const std::vector<Permutation>& conjugators) {
  auto chain = std::make_shared<StabilizerChain>(degree);
  std::vector<Permutation> gens;
  for (const auto& s : seeds) {
    if (chain->add_generator(s)) gens.push_back(s);
  }
  std::vector<Permutation> inv;
  for (const auto& c : conjugators) inv.push_back(c.inverse());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (std::size_t j = 0; j < conjugators.size(); ++j) {
      Permutation c = inv[j] * gens[k] * conjugators[j];
      if (chain->add_generator(c)) gens.push_back(std::move(c));
    }
  }
  return Group(degree, std::move(gens), std::move(chain));
}

inline void require_same_degree(const Group& a, const Group& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch("groups act on different degrees");
}

}  // namespace detail

/// Smallest normal subgroup of g containing `elements`.
inline Group normal_closure(const Group& g, const std::vector<Permutation>& elements) {
  for (const auto& e : elements) {
    if (e.degree() != g.degree()) throw DegreeMismatch("element degree differs from group degree");
    if (!g.contains(e)) throw NotInGroup("normal_closure: element " + e.to_cycle_string() + " not in group");
  }
  return detail::closure_under_conjugation(g.degree(), elements, g.generators());
}

/// [a, b] for subgroups a, b of g: the normal closure in <a, b> of the
/// commutators of generator pairs.
inline Group commutator_subgroup(const Group& g, const Group& a, const Group& b) {
  detail::require_same_degree(g, a);
  detail::require_same_degree(g, b);
  if (!g.contains(a) || !g.contains(b)) throw NotInGroup("commutator_subgroup: arguments must be subgroups");
  std::vector<Permutation> comms;
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) comms.push_back(commutator(x, y));
  }
  std::vector<Permutation> conj = a.generators();
  conj.insert(conj.end(), b.generators().begin(), b.generators().end());
  return detail::closure_under_conjugation(g.degree(), comms, conj);
}

/// G' = [G, G].
inline Group derived_subgroup(const Group& g) {
  const auto& gens = g.generators();
  std::vector<Permutation> comms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  }
  return detail::closure_under_conjugation(g.degree(), comms, gens);
}

/// G = G^(0) > G^(1) > ... > G^(dl*), stopping at the first term whose
/// successor has the same order.
inline std::vector<Group> derived_terms(const Group& g) {
  std::vector<Group> terms{g};
  for (;;) {
    Group next = derived_subgroup(terms.back());
    if (next.order() == terms.back().order()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

struct DerivedSeriesReport {
  std::vector<Integer> orders;
  std::size_t dlstar = 0;
  Integer perfect_core_order = 1;
  bool is_solvable = true;
  bool is_perfect = true;

  friend bool operator==(const DerivedSeriesReport&, const DerivedSeriesReport&) = default;
};

inline DerivedSeriesReport report_from_terms(const std::vector<Group>& terms) {
  DerivedSeriesReport r;
  for (const auto& t : terms) r.orders.push_back(t.order());
  r.dlstar = terms.size() - 1;
  r.perfect_core_order = r.orders.back();
  r.is_solvable = r.perfect_core_order == 1;
  r.is_perfect = r.dlstar == 0;
  return r;
}

inline DerivedSeriesReport derived_series(const Group& g) { return report_from_terms(derived_terms(g)); }

/// G^(infinity), the largest perfect subgroup.
inline Group perfect_core(const Group& g) { return derived_terms(g).back(); }

/// Least n with G^(n) = G^(infinity).
inline std::size_t dl_star(const Group& g) { return derived_terms(g).size() - 1; }

/// Derived length of a solvable group; throws NotSolvable otherwise.
inline std::size_t derived_length(const Group& g) {
  auto terms = derived_terms(g);
  if (!terms.back().is_trivial()) throw NotSolvable("derived_length: group is not solvable");
  return terms.size() - 1;
}

inline bool is_solvable(const Group& g) { return perfect_core(g).is_trivial(); }

/// true when every conjugate of a generator of n by a generator of g lies in n.
inline bool is_normal(const Group& g, const Group& n) {
  detail::require_same_degree(g, n);
  for (const auto& x : n.generators()) {
    for (const auto& y : g.generators()) {
      if (!n.contains(conjugate(x, y))) return false;
    }
  }
  return true;
}

/// <a, b>
inline Group join(const Group& a, const Group& b) {
  detail::require_same_degree(a, b);
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Group(a.degree(), std::move(gens));
}

}  // namespace dlstar

#endif  // DLSTAR_DERIVED_HPP
