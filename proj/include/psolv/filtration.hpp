#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "psolv/cohomology.hpp"
#include "psolv/errors.hpp"
#include "psolv/fp_matrix.hpp"
#include "psolv/limits.hpp"
#include "psolv/normal_lattice.hpp"
#include "psolv/numeric.hpp"
#include "psolv/perm_group.hpp"
#include "psolv/subgroup_ops.hpp"
#include "psolv/sylow.hpp"

namespace psolv {

/// O^p(G) = G, equivalently H^1(G) = 0. Both characterizations are computed
/// and must agree; a mismatch is a defect in the kernel, not in the input.
inline bool is_p_perfect(const PermGroup& group, std::uint64_t p,
                         const Limits& limits = default_limits()) {
  bool by_residual = o_p(group, p, limits).same_group_as(group);
  bool by_cohomology = h1_dim(group, p, limits) == 0;
  if (by_residual != by_cohomology)
    throw internal_error("p-perfect characterizations disagree on a group of order " +
                         group.order().get_str());
  return by_residual;
}

// ---------------------------------------------------------------------------
// Chief series
// ---------------------------------------------------------------------------

/// Tie-break rule used when several maximal normal subgroups have equal
/// order; flipping it yields a different but equally valid chief series,
/// which tests use to confirm Jordan-Hoelder invariance of derived counts.
enum class ChiefTieBreak { lex_smallest, lex_largest };

/// A descending chief series G = C_0 > C_1 > ... > C_r = 1: every term is
/// normal in G and consecutive quotients are chief factors. Each step picks
/// a maximal-order normal subgroup of G strictly inside the current term.
inline std::vector<PermGroup> chief_series(const PermGroup& group,
                                           const Limits& limits = default_limits(),
                                           ChiefTieBreak tie = ChiefTieBreak::lex_smallest) {
  const std::vector<PermGroup> normals = normal_subgroups(group, limits);
  std::vector<PermGroup> series{group};
  while (!series.back().is_trivial()) {
    const PermGroup& current = series.back();
    const PermGroup* next = nullptr;
    // `normals` is sorted ascending by (order, generator images); scan in the
    // direction matching the tie-break so the first maximal-order hit wins.
    auto consider = [&](const PermGroup& candidate) {
      if (candidate.order() >= current.order() || !current.contains_group(candidate)) return;
      if (next == nullptr || candidate.order() > next->order()) next = &candidate;
    };
    if (tie == ChiefTieBreak::lex_smallest)
      for (const auto& candidate : normals) consider(candidate);
    else
      for (auto it = normals.rbegin(); it != normals.rend(); ++it) consider(*it);
    if (next == nullptr) throw internal_error("chief series: no proper normal subgroup found");
    series.push_back(*next);
  }
  return series;
}

/// A chief factor is p-solvable exactly when it is a p-group or a p'-group
/// (it is characteristically simple, so nothing else can be p-solvable).
inline bool chief_factor_order_is_p_solvable(const mpz_class& factor_order, std::uint64_t p) {
  return is_power_of(factor_order, p) || !divides(p, factor_order);
}

/// Definitional p-solvability: every chief factor is a p-group or p'-group.
inline bool is_p_solvable_direct(const PermGroup& group, std::uint64_t p,
                                 const Limits& limits = default_limits()) {
  require_prime(p);
  const std::vector<PermGroup> series = chief_series(group, limits);
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    mpz_class factor = series[i].order() / series[i + 1].order();
    if (!chief_factor_order_is_p_solvable(factor, p)) return false;
  }
  return true;
}

/// Count of chief factors that are not p-solvable; independent of the chosen
/// chief series by Jordan-Hoelder.
inline unsigned non_p_solvable_length(const PermGroup& group, std::uint64_t p,
                                      const Limits& limits = default_limits(),
                                      ChiefTieBreak tie = ChiefTieBreak::lex_smallest) {
  require_prime(p);
  const std::vector<PermGroup> series = chief_series(group, limits, tie);
  unsigned count = 0;
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    mpz_class factor = series[i].order() / series[i + 1].order();
    if (!chief_factor_order_is_p_solvable(factor, p)) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Canonical series and length invariants
// ---------------------------------------------------------------------------

enum class FactorKind { p_group, p_prime_group, non_p_solvable_chief };

inline const char* factor_kind_name(FactorKind kind) {
  switch (kind) {
    case FactorKind::p_group: return "p-group";
    case FactorKind::p_prime_group: return "p'-group";
    case FactorKind::non_p_solvable_chief: return "non-p-solvable-chief";
  }
  return "?";
}

/// The canonical refined normal series: alternately strip the p'-head
/// (O^{p'}) and the p-head (O^p); when the current term R is both p-perfect
/// and p'-perfect but nontrivial, descend by one chief factor of G inside R
/// (necessarily non-p-solvable) and continue. Every factor is a p-group, a
/// p'-group, or a non-p-solvable chief factor of G.
struct CanonicalSeries {
  std::vector<PermGroup> terms;        // G = terms[0] > ... > 1
  std::vector<FactorKind> factor_kinds;  // one per consecutive gap
};

inline CanonicalSeries canonical_series(const PermGroup& group, std::uint64_t p,
                                        const Limits& limits = default_limits()) {
  require_prime(p);
  CanonicalSeries series;
  series.terms.push_back(group);
  std::optional<std::vector<PermGroup>> normals;  // computed lazily for descents
  while (!series.terms.back().is_trivial()) {
    const PermGroup current = series.terms.back();
    PermGroup p_prime_residual = o_p_prime(current, p, limits);
    if (!p_prime_residual.same_group_as(current)) {
      series.terms.push_back(p_prime_residual);
      series.factor_kinds.push_back(FactorKind::p_prime_group);
    }
    PermGroup p_residual = o_p(series.terms.back(), p, limits);
    if (!p_residual.same_group_as(series.terms.back())) {
      series.terms.push_back(p_residual);
      series.factor_kinds.push_back(FactorKind::p_group);
      continue;
    }
    if (series.terms.back().same_group_as(current) && !current.is_trivial()) {
      // Sticking point: O^p(R) = O^{p'}(R) = R != 1. Descend one chief factor.
      if (!normals) normals = normal_subgroups(group, limits);
      const PermGroup* next = nullptr;
      for (const auto& candidate : *normals) {
        if (candidate.order() >= current.order() || !current.contains_group(candidate)) continue;
        if (next == nullptr || candidate.order() > next->order()) next = &candidate;
      }
      if (next == nullptr) throw internal_error("canonical series: descent found no subgroup");
      mpz_class factor = current.order() / next->order();
      if (chief_factor_order_is_p_solvable(factor, p))
        throw internal_error("canonical series: descent factor unexpectedly p-solvable");
      series.terms.push_back(*next);
      series.factor_kinds.push_back(FactorKind::non_p_solvable_chief);
    }
  }
  return series;
}

/// Number of p-group factors in the canonical series. For p-solvable groups
/// this is the classical p-length of the alternating lower p-series.
inline unsigned p_length(const PermGroup& group, std::uint64_t p,
                         const Limits& limits = default_limits()) {
  const CanonicalSeries series = canonical_series(group, p, limits);
  unsigned count = 0;
  for (FactorKind kind : series.factor_kinds)
    if (kind == FactorKind::p_group) ++count;
  return count;
}

/// Number of factors of order divisible by p in the canonical series.
inline unsigned generalized_p_length(const PermGroup& group, std::uint64_t p,
                                     const Limits& limits = default_limits()) {
  const CanonicalSeries series = canonical_series(group, p, limits);
  unsigned count = 0;
  for (FactorKind kind : series.factor_kinds)
    if (kind != FactorKind::p_prime_group) ++count;
  return count;
}

/// Exhaustive minimum of p-divisible factor counts over all normal series of
/// G whose factors are p-groups, p'-groups, or non-p-solvable chief factors.
/// Shortest-path search over the full normal subgroup lattice.
inline unsigned exhaustive_generalized_p_length(const PermGroup& group, std::uint64_t p,
                                                const Limits& limits = default_limits()) {
  require_prime(p);
  if (group.order() > static_cast<unsigned long>(limits.exhaustive_series_cap))
    throw capacity_error("exhaustive series search needs |G| <= " +
                         std::to_string(limits.exhaustive_series_cap) + ", got " +
                         group.order().get_str());
  const std::vector<PermGroup> normals = normal_subgroups(group, limits);
  const std::size_t n = normals.size();

  // containment[i][j]: normals[i] <= normals[j]. The lattice is sorted by
  // order, so only j with larger-or-equal order can contain i.
  std::vector<std::vector<char>> contained(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      contained[i][j] = normals[j].order() >= normals[i].order() &&
                        normals[j].contains_group(normals[i]);

  auto edge_cost = [&](std::size_t lower, std::size_t upper) -> int {
    // -1: not an admissible factor; 0/1: admissible with that p-cost.
    mpz_class factor = normals[upper].order() / normals[lower].order();
    if (factor == 1) return -1;
    if (is_power_of(factor, p)) return 1;
    if (!divides(p, factor)) return 0;
    // Mixed order: admissible only as a non-p-solvable chief factor.
    for (std::size_t between = 0; between < n; ++between) {
      if (between == lower || between == upper) continue;
      if (contained[lower][between] && contained[between][upper]) return -1;
    }
    return 1;
  };

  // Dijkstra-style relaxation from G downward (costs are 0/1, lattice tiny).
  constexpr unsigned kUnreached = 0xffffffffu;
  std::vector<unsigned> best(n, kUnreached);
  std::size_t top = n, bottom = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (normals[i].same_group_as(group)) top = i;
    if (normals[i].is_trivial()) bottom = i;
  }
  if (top == n || bottom == n) throw internal_error("normal lattice missing G or 1");
  best[top] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t upper = 0; upper < n; ++upper) {
      if (best[upper] == kUnreached) continue;
      for (std::size_t lower = 0; lower < n; ++lower) {
        if (!contained[lower][upper]) continue;
        int cost = edge_cost(lower, upper);
        if (cost < 0) continue;
        unsigned total = best[upper] + static_cast<unsigned>(cost);
        if (total < best[lower]) {
          best[lower] = total;
          changed = true;
        }
      }
    }
  }
  if (best[bottom] == kUnreached)
    throw internal_error("exhaustive series search found no admissible series");
  return best[bottom];
}

// ---------------------------------------------------------------------------
// Theorem A filtration and criterion
// ---------------------------------------------------------------------------

struct TheoremATerm {
  PermGroup subgroup;   // M_i
  unsigned fixed_dim;   // dim H^1(M_i)^P
};

/// The descending chain M_1 = O^{p'}(G), M_i = O^{p'}(O^p(M_{i-1})), computed
/// to its stabilization index t. A trailing trivial term is dropped (it
/// contributes dimension 0); terms after stabilization also contribute 0
/// because O^p(M_t) = M_t forces H^1(M_t) = 0, so the finite sum equals the
/// full direct-sum dimension.
struct TheoremAFiltration {
  std::uint64_t p;
  PermGroup ambient;
  PermGroup sylow;
  std::vector<TheoremATerm> terms;
  PermGroup stable;    // M_t
  unsigned lhs_dim;    // dim H^1(P)
  bool verdict;        // lhs_dim == sum of term dims
};

inline TheoremAFiltration theorem_a_filtration(const PermGroup& group, std::uint64_t p,
                                               const Limits& limits = default_limits()) {
  require_prime(p);
  PermGroup sylow = sylow_subgroup(group, p, limits);
  std::vector<PermGroup> chain;
  chain.push_back(o_p_prime(group, p, limits));
  for (;;) {
    PermGroup next = o_p_prime(o_p(chain.back(), p, limits), p, limits);
    if (next.same_group_as(chain.back())) break;
    chain.push_back(std::move(next));
  }
  PermGroup stable = chain.back();
  if (chain.size() >= 2 && chain.back().is_trivial()) chain.pop_back();

  TheoremAFiltration result{p,      group, sylow, {}, std::move(stable),
                            h1_dim(sylow, p, limits), false};
  unsigned sum = 0;
  for (auto& m : chain) {
    unsigned dim = h1_fixed_dim(m, sylow, p, limits);
    sum += dim;
    result.terms.push_back({std::move(m), dim});
  }
  result.verdict = result.lhs_dim == sum;
  return result;
}

struct TheoremAVerdict {
  unsigned lhs;       // dim H^1(P)
  unsigned rhs;       // sum over i of dim H^1(M_i)^P
  bool p_solvable;    // lhs == rhs
};

inline TheoremAVerdict theorem_a_criterion(const PermGroup& group, std::uint64_t p,
                                           const Limits& limits = default_limits()) {
  const TheoremAFiltration filtration = theorem_a_filtration(group, p, limits);
  unsigned rhs = 0;
  for (const auto& term : filtration.terms) rhs += term.fixed_dim;
  return {filtration.lhs_dim, rhs, filtration.verdict};
}

// ---------------------------------------------------------------------------
// p-perfect filtrations
// ---------------------------------------------------------------------------

/// The p-perfect filtration extracted from the canonical series: G, then
/// every proper nontrivial series term that is p-perfect, then 1. Its
/// p-perfect length counts the gaps of index divisible by p.
struct PPerfectFiltration {
  std::uint64_t p;
  PermGroup ambient;
  CanonicalSeries refined;           // the underlying tagged series
  std::vector<PermGroup> members;    // J_0 = G > J_1 > ... > J_r = 1
  unsigned pperfect_length;
};

inline PPerfectFiltration p_perfect_filtration(const PermGroup& group, std::uint64_t p,
                                               const Limits& limits = default_limits()) {
  CanonicalSeries refined = canonical_series(group, p, limits);
  std::vector<PermGroup> members{group};
  for (std::size_t i = 1; i < refined.terms.size(); ++i) {
    const PermGroup& term = refined.terms[i];
    if (term.is_trivial() || term.same_group_as(group)) continue;
    if (is_p_perfect(term, p, limits)) members.push_back(term);
  }
  if (!members.back().is_trivial()) members.push_back(PermGroup::trivial(group.degree()));
  unsigned length = 0;
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    mpz_class index = members[i].order() / members[i + 1].order();
    if (divides(p, index)) ++length;
  }
  return {p, group, std::move(refined), std::move(members), length};
}

/// Verifies the restriction laws along a p-perfect filtration with
/// M_i = J_i \cap P: the induced maps of coinvariant spaces
/// H_1(M_i)_P -> H_1(M_j)_P (i >= j, M_0 = P) are injective, and are
/// isomorphisms exactly when p does not divide |J_j : J_i|.
inline bool prop4_check(const PermGroup& group, std::uint64_t p,
                        const PPerfectFiltration& filtration,
                        const Limits& limits = default_limits()) {
  if (!filtration.ambient.same_group_as(group) || filtration.p != p)
    throw contract_error("prop4_check: filtration belongs to a different (group, prime)");
  PermGroup sylow = sylow_subgroup(group, p, limits);

  struct Layer {
    ModPAbelianization module;
    FpMatrix relations;   // rows spanning { v A_x - v }
    unsigned coinv_dim;
  };
  std::vector<Layer> layers;
  std::vector<mpz_class> member_orders;
  for (const auto& member : filtration.members) {
    PermGroup m = member.same_group_as(group) ? sylow : intersection(member, sylow, limits);
    ModPAbelianization module(m, p, limits);
    ConjugationAction action(module, sylow);
    FpMatrix relations = action.relation_rows();
    unsigned coinv = module.dim() - static_cast<unsigned>(relations.rank());
    layers.push_back({std::move(module), std::move(relations), coinv});
    member_orders.push_back(member.order());
  }

  for (std::size_t i = 0; i < layers.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      // Matrix of the inclusion M_i -> M_j on abelianizations.
      const Layer& from = layers[i];
      const Layer& to = layers[j];
      FpMatrix inclusion(p, from.module.dim(), to.module.dim());
      for (unsigned r = 0; r < from.module.dim(); ++r)
        inclusion.set_row(r, to.module.project(from.module.basis_elements()[r]));
      std::size_t image_dim =
          inclusion.vstack(to.relations).rank() - to.relations.rank();
      bool injective = image_dim == from.coinv_dim;
      bool isomorphism = injective && from.coinv_dim == to.coinv_dim;
      bool coprime_index = !divides(p, member_orders[j] / member_orders[i]);
      if (!injective || isomorphism != coprime_index) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Tate checks
// ---------------------------------------------------------------------------

/// Tate's criterion at the dimension level:
/// dim H^1(G) = dim H^1(P) holds exactly when G is p-nilpotent.
inline bool tate_criterion_check(const PermGroup& group, std::uint64_t p,
                                 const Limits& limits = default_limits()) {
  PermGroup sylow = sylow_subgroup(group, p, limits);
  bool equal_dims = h1_dim(group, p, limits) == h1_dim(sylow, p, limits);
  return equal_dims == is_p_nilpotent(group, p, limits);
}

/// For every normal N of G with N \cap P <= Phi(P), N must be p-nilpotent.
inline bool tate_corollary_check(const PermGroup& group, std::uint64_t p,
                                 const Limits& limits = default_limits()) {
  require_prime(p);
  PermGroup sylow = sylow_subgroup(group, p, limits);
  PermGroup frattini = sylow.is_trivial() ? sylow : frattini_of_p_group(sylow, p);
  for (const auto& normal : normal_subgroups(group, limits)) {
    PermGroup meet = intersection(normal, sylow, limits);
    if (!frattini.contains_group(meet)) continue;
    if (!is_p_nilpotent(normal, p, limits)) return false;
  }
  return true;
}

}  // namespace psolv
