#ifndef DLSTAR_SUPPLEMENT_HPP
#define DLSTAR_SUPPLEMENT_HPP

#include <random>

#include "dlstar/derived.hpp"

namespace dlstar {

/// Searches for a solvable S <= G with <G^(infinity), S> = G, which forces
/// dl(S) >= dl*(G). Each trial lifts the generators of G that are needed
/// modulo the perfect core, multiplying each by a random element of the
/// core (the identity in the first trial). Throws NotFound after `budget`
/// failed trials; failure is not a proof that no supplement exists.
inline Group find_solvable_supplement(const Group& g, std::size_t budget, std::uint64_t seed = 1) {
  auto terms = derived_terms(g);
  const Group& core = terms.back();
  if (core.is_trivial()) return g;
  if (terms.size() == 1) return Group::trivial(g.degree());
  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < budget; ++trial) {
    StabilizerChain span_check(g.degree());
    for (const auto& c : core.generators()) span_check.add_generator(c);
    std::vector<Permutation> lifts;
    for (const auto& x : g.generators()) {
      if (span_check.contains(x)) continue;
      Permutation lift = trial == 0 ? x : x * core.chain().random_element(rng);
      span_check.add_generator(lift);
      lifts.push_back(std::move(lift));
    }
    Group s(g.degree(), std::move(lifts));
    if (is_solvable(s)) return s;
  }
  throw NotFound("find_solvable_supplement: no solvable supplement found within budget");
}

}  // namespace dlstar

#endif  // DLSTAR_SUPPLEMENT_HPP
