#pragma once

#include <string>
#include <vector>

#include "psolv/errors.hpp"
#include "psolv/limits.hpp"
#include "psolv/numeric.hpp"
#include "psolv/perm_group.hpp"
#include "psolv/permutation.hpp"

namespace psolv {

/// Smallest normal subgroup of G containing S, by conjugation-closure
/// iteration: conjugate current generators by G-generators, adjoin escapees,
/// rebuild, repeat to a fixed point. Generator order keeps it deterministic.
inline PermGroup normal_closure(const PermGroup& group, const std::vector<Permutation>& seed) {
  for (const auto& s : seed)
    if (!group.contains(s)) throw contract_error("normal_closure: seed element outside G");
  std::vector<Permutation> gens = seed;
  PermGroup closure(group.degree(), gens);
  for (;;) {
    std::vector<Permutation> escaped;
    for (const auto& h : closure.generators())
      for (const auto& g : group.generators()) {
        Permutation conj = h.conjugated_by(g);
        if (!closure.contains(conj)) escaped.push_back(std::move(conj));
      }
    if (escaped.empty()) return closure;
    gens = closure.generators();
    gens.insert(gens.end(), escaped.begin(), escaped.end());
    closure = PermGroup(group.degree(), gens);
  }
}

/// [G,G]: normal closure of the commutators of all generator pairs.
inline PermGroup derived_subgroup(const PermGroup& group) {
  std::vector<Permutation> commutators;
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = Permutation::commutator(gens[i], gens[j]);
      if (!c.is_identity()) commutators.push_back(std::move(c));
    }
  return normal_closure(group, commutators);
}

/// N_G(H) by brute element scan (grows an overgroup of H incrementally).
inline PermGroup normalizer(const PermGroup& group, const PermGroup& subgroup,
                            const Limits& limits = default_limits()) {
  if (!group.contains_group(subgroup))
    throw contract_error("normalizer: H is not a subgroup of G");
  auto normalizes = [&](const Permutation& g) {
    for (const auto& h : subgroup.generators())
      if (!subgroup.contains(h.conjugated_by(g))) return false;
    return true;
  };
  PermGroup result = subgroup;
  for (const auto& g : group.elements(limits)) {
    if (result.contains(g) || !normalizes(g)) continue;
    std::vector<Permutation> gens = result.generators();
    gens.push_back(g);
    result = PermGroup(group.degree(), gens);
  }
  return result;
}

/// H \cap K, by enumerating the smaller group and filtering by membership.
inline PermGroup intersection(const PermGroup& h, const PermGroup& k,
                              const Limits& limits = default_limits()) {
  if (h.degree() != k.degree()) throw input_error("intersection: degree mismatch");
  const PermGroup& small = h.order() <= k.order() ? h : k;
  const PermGroup& large = h.order() <= k.order() ? k : h;
  PermGroup result = PermGroup::trivial(h.degree());
  for (const auto& g : small.elements(limits)) {
    if (!large.contains(g) || result.contains(g)) continue;
    std::vector<Permutation> gens = result.generators();
    gens.push_back(g);
    result = PermGroup(h.degree(), gens);
  }
  return result;
}

/// Frattini subgroup of a p-group: Phi(P) = P^p [P,P], generated by the
/// derived subgroup together with the p-th powers of the generators.
inline PermGroup frattini_of_p_group(const PermGroup& p_group, std::uint64_t p) {
  require_prime(p);
  if (!is_power_of(p_group.order(), p))
    throw contract_error("frattini_of_p_group: order " + p_group.order().get_str() +
                         " is not a power of " + std::to_string(p));
  std::vector<Permutation> gens = derived_subgroup(p_group).generators();
  for (const auto& g : p_group.generators()) {
    Permutation gp = g.power(p);
    if (!gp.is_identity()) gens.push_back(std::move(gp));
  }
  return PermGroup(p_group.degree(), gens);
}

}  // namespace psolv
