#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "psolv/analysis.hpp"
#include "psolv/filtration.hpp"

namespace psolv {

/// Orders are emitted as JSON integers when they fit 64 bits, as decimal
/// strings otherwise, so reports stay byte-stable and lossless.
inline nlohmann::ordered_json json_order(const mpz_class& n) {
  if (n.fits_ulong_p()) return nlohmann::ordered_json(static_cast<std::uint64_t>(n.get_ui()));
  return nlohmann::ordered_json(n.get_str());
}

inline nlohmann::ordered_json json_orders(const std::vector<mpz_class>& values) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& v : values) arr.push_back(json_order(v));
  return arr;
}

inline nlohmann::ordered_json to_json(const AnalysisReport& report) {
  nlohmann::ordered_json j;
  j["group"] = report.group;
  j["prime"] = report.prime;
  j["order"] = json_order(report.order);
  j["sylow_order"] = json_order(report.sylow_order);
  j["d"] = report.d;
  j["h1_dim_group"] = report.h1_dim_group;
  j["h1_dim_sylow"] = report.h1_dim_sylow;
  j["p_solvable_criterion"] = report.p_solvable_criterion;
  j["p_solvable_direct"] = report.p_solvable_direct;
  j["theorem_a_lhs"] = report.theorem_a_lhs;
  j["theorem_a_rhs"] = report.theorem_a_rhs;
  j["theorem_a_term_orders"] = json_orders(report.theorem_a_term_orders);
  j["theorem_a_term_dims"] = report.theorem_a_term_dims;
  j["theorem_a_stable_order"] = json_order(report.theorem_a_stable_order);
  j["chief_factor_orders"] = json_orders(report.chief_factor_orders);
  j["canonical_series_orders"] = json_orders(report.canonical_series_orders);
  j["canonical_factor_kinds"] = report.canonical_factor_kinds;
  j["pperfect_member_orders"] = json_orders(report.pperfect_member_orders);
  j["p_length"] = report.p_length;
  j["non_p_solvable_length"] = report.non_p_solvable_length;
  j["generalized_p_length"] = report.generalized_p_length;
  j["pperfect_length"] = report.pperfect_length;
  if (report.generalized_p_length_exhaustive)
    j["generalized_p_length_exhaustive"] = *report.generalized_p_length_exhaustive;
  j["bound_p_length_le_d"] = report.bound_p_length_le_d;
  j["bound_non_p_solvable_le_d"] = report.bound_non_p_solvable_le_d;
  j["bound_pperfect_le_d"] = report.bound_pperfect_le_d;
  j["bound_generalized_le_2d"] = report.bound_generalized_le_2d;
  return j;
}

inline nlohmann::ordered_json to_json(const TheoremAFiltration& filtration) {
  nlohmann::ordered_json j;
  j["prime"] = filtration.p;
  j["ambient_order"] = json_order(filtration.ambient.order());
  j["sylow_order"] = json_order(filtration.sylow.order());
  j["lhs_dim"] = filtration.lhs_dim;
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& term : filtration.terms) {
    nlohmann::ordered_json t;
    t["order"] = json_order(term.subgroup.order());
    t["fixed_dim"] = term.fixed_dim;
    terms.push_back(t);
  }
  j["terms"] = terms;
  j["stable_order"] = json_order(filtration.stable.order());
  j["p_solvable"] = filtration.verdict;
  return j;
}

inline nlohmann::ordered_json to_json(const PPerfectFiltration& filtration) {
  nlohmann::ordered_json j;
  j["prime"] = filtration.p;
  j["ambient_order"] = json_order(filtration.ambient.order());
  nlohmann::ordered_json series = nlohmann::ordered_json::array();
  for (const auto& term : filtration.refined.terms) series.push_back(json_order(term.order()));
  j["canonical_series_orders"] = series;
  nlohmann::ordered_json kinds = nlohmann::ordered_json::array();
  for (FactorKind kind : filtration.refined.factor_kinds) kinds.push_back(factor_kind_name(kind));
  j["canonical_factor_kinds"] = kinds;
  nlohmann::ordered_json members = nlohmann::ordered_json::array();
  for (const auto& member : filtration.members) members.push_back(json_order(member.order()));
  j["members"] = members;
  j["pperfect_length"] = filtration.pperfect_length;
  return j;
}

}  // namespace psolv
