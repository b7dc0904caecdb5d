#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "psolv/errors.hpp"
#include "psolv/limits.hpp"
#include "psolv/numeric.hpp"
#include "psolv/perm_group.hpp"
#include "psolv/subgroup_ops.hpp"

namespace psolv {

/// A Sylow p-subgroup of G; the trivial group when p does not divide |G|.
///
/// Strategy (small-order tier): seed with the p-part of an element of maximal
/// p-order found by exhaustive scan, then repeatedly pick the first p-part of
/// a normalizer element falling outside the current subgroup. Each step grows
/// the subgroup inside the p-part of its normalizer, so it terminates at full
/// Sylow order. Scan order is the fixed enumeration order.
inline PermGroup sylow_subgroup(const PermGroup& group, std::uint64_t p,
                                const Limits& limits = default_limits()) {
  require_prime(p);
  mpz_class target = p_part(group.order(), p);
  if (target == 1) return PermGroup::trivial(group.degree());
  if (group.order() > static_cast<unsigned long>(limits.enumeration_cap))
    throw capacity_error("Sylow computation needs |G| <= enumeration cap " +
                         std::to_string(limits.enumeration_cap) + ", got " +
                         group.order().get_str());

  const std::vector<Permutation> elements = group.elements(limits);
  Permutation seed = group.identity();
  std::uint64_t best_p_order = 1;
  for (const auto& g : elements) {
    Permutation gp = g.p_power_part(p);
    std::uint64_t o = gp.order();
    if (o > best_p_order) {
      best_p_order = o;
      seed = std::move(gp);
    }
  }

  PermGroup sylow(group.degree(), {seed});
  while (sylow.order() < target) {
    PermGroup norm = normalizer(group, sylow, limits);
    bool extended = false;
    for (const auto& g : norm.elements(limits)) {
      Permutation gp = g.p_power_part(p);
      if (gp.is_identity() || sylow.contains(gp)) continue;
      std::vector<Permutation> gens = sylow.generators();
      gens.push_back(gp);
      PermGroup grown(group.degree(), gens);
      if (!is_power_of(grown.order(), p))
        throw internal_error("Sylow extension left the p-group tower");
      sylow = std::move(grown);
      extended = true;
      break;
    }
    if (!extended)
      throw internal_error("Sylow extension stalled below target order");
  }
  return sylow;
}

/// O^p(G): the smallest normal subgroup with p-group quotient; the normal
/// closure of one Sylow q-subgroup for every prime q != p dividing |G|.
inline PermGroup o_p(const PermGroup& group, std::uint64_t p,
                     const Limits& limits = default_limits()) {
  require_prime(p);
  std::vector<Permutation> seed;
  for (std::uint64_t q : prime_divisors(group.order())) {
    if (q == p) continue;
    PermGroup sylow_q = sylow_subgroup(group, q, limits);
    seed.insert(seed.end(), sylow_q.generators().begin(), sylow_q.generators().end());
  }
  return normal_closure(group, seed);
}

/// O^{p'}(G): the smallest normal subgroup with quotient of order coprime to
/// p; the normal closure of a Sylow p-subgroup.
inline PermGroup o_p_prime(const PermGroup& group, std::uint64_t p,
                           const Limits& limits = default_limits()) {
  require_prime(p);
  return normal_closure(group, sylow_subgroup(group, p, limits).generators());
}

/// Tate-style p-nilpotency: O^p(G) is a normal p-complement exactly when its
/// order is coprime to p.
inline bool is_p_nilpotent(const PermGroup& group, std::uint64_t p,
                           const Limits& limits = default_limits()) {
  return !divides(p, o_p(group, p, limits).order());
}

/// Minimal generator count of a p-group: log_p |P : Phi(P)| (Burnside basis).
inline unsigned min_generators_p_group(const PermGroup& p_group, std::uint64_t p) {
  require_prime(p);
  if (!is_power_of(p_group.order(), p))
    throw contract_error("min_generators_p_group: order " + p_group.order().get_str() +
                         " is not a power of " + std::to_string(p));
  mpz_class index = p_group.order() / frattini_of_p_group(p_group, p).order();
  return log_base_p(index, p);
}

}  // namespace psolv
