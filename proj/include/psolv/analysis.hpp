#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "psolv/cohomology.hpp"
#include "psolv/filtration.hpp"
#include "psolv/limits.hpp"
#include "psolv/perm_group.hpp"
#include "psolv/sylow.hpp"

namespace psolv {

/// The full computed profile of a (group, prime) pair.
struct AnalysisReport {
  std::string group;
  std::uint64_t prime = 2;
  mpz_class order;
  mpz_class sylow_order;
  unsigned d = 0;                 // minimal generator count of the Sylow subgroup
  unsigned h1_dim_group = 0;
  unsigned h1_dim_sylow = 0;

  bool p_solvable_criterion = false;   // Theorem A verdict (lhs == rhs)
  bool p_solvable_direct = false;      // chief-factor definition
  unsigned theorem_a_lhs = 0;
  unsigned theorem_a_rhs = 0;
  std::vector<mpz_class> theorem_a_term_orders;
  std::vector<unsigned> theorem_a_term_dims;
  mpz_class theorem_a_stable_order;

  std::vector<mpz_class> chief_factor_orders;
  std::vector<mpz_class> canonical_series_orders;
  std::vector<std::string> canonical_factor_kinds;
  std::vector<mpz_class> pperfect_member_orders;

  unsigned p_length = 0;
  unsigned non_p_solvable_length = 0;
  unsigned generalized_p_length = 0;
  unsigned pperfect_length = 0;
  std::optional<unsigned> generalized_p_length_exhaustive;

  bool bound_p_length_le_d = false;
  bool bound_non_p_solvable_le_d = false;
  bool bound_pperfect_le_d = false;
  bool bound_generalized_le_2d = false;
};

inline AnalysisReport analyze(const PermGroup& group, std::uint64_t p,
                              const std::string& name = "",
                              const Limits& limits = default_limits()) {
  require_prime(p);
  AnalysisReport report;
  report.group = name;
  report.prime = p;
  report.order = group.order();

  PermGroup sylow = sylow_subgroup(group, p, limits);
  report.sylow_order = sylow.order();
  report.d = min_generators_p_group(sylow, p);
  report.h1_dim_group = h1_dim(group, p, limits);
  report.h1_dim_sylow = h1_dim(sylow, p, limits);

  TheoremAFiltration filtration = theorem_a_filtration(group, p, limits);
  report.theorem_a_lhs = filtration.lhs_dim;
  for (const auto& term : filtration.terms) {
    report.theorem_a_term_orders.push_back(term.subgroup.order());
    report.theorem_a_term_dims.push_back(term.fixed_dim);
    report.theorem_a_rhs += term.fixed_dim;
  }
  report.theorem_a_stable_order = filtration.stable.order();
  report.p_solvable_criterion = filtration.verdict;
  report.p_solvable_direct = is_p_solvable_direct(group, p, limits);

  for (const auto& term : chief_series(group, limits))
    report.chief_factor_orders.push_back(term.order());

  PPerfectFiltration pperfect = p_perfect_filtration(group, p, limits);
  for (const auto& term : pperfect.refined.terms)
    report.canonical_series_orders.push_back(term.order());
  for (FactorKind kind : pperfect.refined.factor_kinds)
    report.canonical_factor_kinds.emplace_back(factor_kind_name(kind));
  for (const auto& member : pperfect.members)
    report.pperfect_member_orders.push_back(member.order());
  report.pperfect_length = pperfect.pperfect_length;

  unsigned p_count = 0, divisible_count = 0;
  for (FactorKind kind : pperfect.refined.factor_kinds) {
    if (kind == FactorKind::p_group) ++p_count;
    if (kind != FactorKind::p_prime_group) ++divisible_count;
  }
  report.p_length = p_count;
  report.generalized_p_length = divisible_count;
  report.non_p_solvable_length = non_p_solvable_length(group, p, limits);

  if (group.order() <= static_cast<unsigned long>(limits.exhaustive_series_cap))
    report.generalized_p_length_exhaustive = exhaustive_generalized_p_length(group, p, limits);

  report.bound_p_length_le_d = report.p_length <= report.d;
  report.bound_non_p_solvable_le_d = report.non_p_solvable_length <= report.d;
  report.bound_pperfect_le_d = report.pperfect_length <= report.d;
  report.bound_generalized_le_2d = report.generalized_p_length <= 2 * report.d;
  return report;
}

}  // namespace psolv
