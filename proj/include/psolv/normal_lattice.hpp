#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "psolv/errors.hpp"
#include "psolv/limits.hpp"
#include "psolv/perm_group.hpp"
#include "psolv/subgroup_ops.hpp"

namespace psolv {

/// One representative per conjugacy class, in element-enumeration order.
inline std::vector<Permutation> conjugacy_class_representatives(
    const PermGroup& group, const Limits& limits = default_limits()) {
  const std::vector<Permutation> elements = group.elements(limits);
  std::unordered_map<Permutation, char, PermutationHash> assigned;
  assigned.reserve(elements.size());
  std::vector<Permutation> reps;
  for (const auto& e : elements) {
    if (assigned.count(e)) continue;
    reps.push_back(e);
    // Orbit of e under conjugation by generators.
    std::vector<Permutation> orbit{e};
    assigned.emplace(e, 1);
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto& g : group.generators()) {
        Permutation c = orbit[head].conjugated_by(g);
        if (assigned.emplace(c, 1).second) orbit.push_back(std::move(c));
      }
  }
  return reps;
}

/// All normal subgroups of G: normal closures of single conjugacy-class
/// representatives, closed under pairwise join. Sorted by (order, generator
/// images) so the result is canonical.
inline std::vector<PermGroup> normal_subgroups(const PermGroup& group,
                                               const Limits& limits = default_limits()) {
  if (group.order() > static_cast<unsigned long>(limits.normal_lattice_cap))
    throw capacity_error("normal subgroup lattice needs |G| <= " +
                         std::to_string(limits.normal_lattice_cap) + ", got " +
                         group.order().get_str());

  std::vector<PermGroup> found{PermGroup::trivial(group.degree())};
  auto add_unique = [&](PermGroup candidate) {
    for (const auto& have : found)
      if (have.same_group_as(candidate)) return false;
    found.push_back(std::move(candidate));
    return true;
  };

  for (const auto& rep : conjugacy_class_representatives(group, limits)) {
    if (rep.is_identity()) continue;
    add_unique(normal_closure(group, {rep}));
  }

  // Close under joins; a join of normal subgroups is generated by the union.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (found[i].contains_group(found[j]) || found[j].contains_group(found[i])) continue;
      std::vector<Permutation> gens = found[i].generators();
      const auto& more = found[j].generators();
      gens.insert(gens.end(), more.begin(), more.end());
      add_unique(PermGroup(group.degree(), gens));
    }

  auto lex_key = [](const PermGroup& g) {
    std::vector<unsigned> key;
    for (const auto& perm : g.generators())
      key.insert(key.end(), perm.images().begin(), perm.images().end());
    return key;
  };
  std::sort(found.begin(), found.end(), [&](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return lex_key(a) < lex_key(b);
  });
  return found;
}

}  // namespace psolv
