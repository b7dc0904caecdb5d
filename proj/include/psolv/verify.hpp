#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psolv/analysis.hpp"
#include "psolv/catalog.hpp"
#include "psolv/cohomology.hpp"
#include "psolv/filtration.hpp"
#include "psolv/limits.hpp"
#include "psolv/normal_lattice.hpp"
#include "psolv/numeric.hpp"
#include "psolv/sylow.hpp"

namespace psolv {

struct CheckResult {
  std::string suite;
  std::string group;
  std::uint64_t prime;
  std::string check;
  bool pass;
  std::string expected;
  std::string actual;
};

struct VerifyScope {
  std::optional<std::string> group;   // restrict to one catalog name
  std::optional<std::uint64_t> prime; // restrict to one prime
};

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "theorem-a", "theorem-b", "lemma1", "tate", "tate-cor", "prop4", "huppert"};
  return names;
}

namespace detail {

/// The (group, prime) cases a suite runs over: the catalog sorted by name,
/// each with the primes in {2,3,5,7} dividing its order.
inline std::vector<std::pair<std::string, std::uint64_t>> sweep_cases(const VerifyScope& scope) {
  std::vector<std::string> names = catalog_names();
  std::sort(names.begin(), names.end());
  std::vector<std::pair<std::string, std::uint64_t>> cases;
  for (const auto& name : names) {
    if (scope.group && *scope.group != name) continue;
    PermGroup group = catalog_get(name);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
      if (scope.prime && *scope.prime != p) continue;
      if (!divides(p, group.order())) continue;
      cases.emplace_back(name, p);
    }
  }
  return cases;
}

inline void report(std::vector<CheckResult>& out, const std::string& suite,
                   const std::string& group, std::uint64_t prime, const std::string& check,
                   bool pass, const std::string& expected, const std::string& actual) {
  out.push_back({suite, group, prime, check, pass, expected, actual});
}

inline void run_theorem_a(std::vector<CheckResult>& out, const std::string& name,
                          const PermGroup& group, std::uint64_t p, const Limits& limits) {
  TheoremAFiltration filtration = theorem_a_filtration(group, p, limits);
  unsigned rhs = 0;
  for (const auto& term : filtration.terms) rhs += term.fixed_dim;
  bool direct = is_p_solvable_direct(group, p, limits);

  report(out, "theorem-a", name, p, "criterion agrees with chief-factor definition",
         filtration.verdict == direct, direct ? "p-solvable" : "not p-solvable",
         filtration.verdict ? "p-solvable" : "not p-solvable");
  report(out, "theorem-a", name, p, "filtration stabilizes at 1 iff p-solvable",
         filtration.stable.is_trivial() == direct,
         direct ? "stable term trivial" : "stable term nontrivial",
         filtration.stable.is_trivial() ? "stable term trivial" : "stable term nontrivial");
  if (direct)
    report(out, "theorem-a", name, p, "dim H^1(P) equals sum of fixed dims",
           filtration.lhs_dim == rhs, std::to_string(filtration.lhs_dim), std::to_string(rhs));
  if (!filtration.stable.is_trivial())
    report(out, "theorem-a", name, p, "stable term has H^1 = 0",
           h1_dim(filtration.stable, p, limits) == 0, "0",
           std::to_string(h1_dim(filtration.stable, p, limits)));
}

inline void run_theorem_b(std::vector<CheckResult>& out, const std::string& name,
                          const PermGroup& group, std::uint64_t p, const Limits& limits) {
  AnalysisReport r = analyze(group, p, name, limits);
  report(out, "theorem-b", name, p, "p_length <= d", r.p_length <= r.d,
         "<= " + std::to_string(r.d), std::to_string(r.p_length));
  report(out, "theorem-b", name, p, "non_p_solvable_length <= d",
         r.non_p_solvable_length <= r.d, "<= " + std::to_string(r.d),
         std::to_string(r.non_p_solvable_length));
  report(out, "theorem-b", name, p, "pperfect_length <= d", r.pperfect_length <= r.d,
         "<= " + std::to_string(r.d), std::to_string(r.pperfect_length));
  report(out, "theorem-b", name, p, "generalized_p_length <= 2d",
         r.generalized_p_length <= 2 * r.d, "<= " + std::to_string(2 * r.d),
         std::to_string(r.generalized_p_length));
  if (r.generalized_p_length_exhaustive)
    report(out, "theorem-b", name, p, "canonical generalized length is minimal",
           r.generalized_p_length == *r.generalized_p_length_exhaustive,
           std::to_string(*r.generalized_p_length_exhaustive),
           std::to_string(r.generalized_p_length));
}

inline void run_lemma1(std::vector<CheckResult>& out, const std::string& name,
                       const PermGroup& group, std::uint64_t p, const Limits& limits) {
  for (const auto& normal : normal_subgroups(group, limits)) {
    if (!o_p(normal, p, limits).same_group_as(normal)) continue;
    bool ok = lemma1_dims_check(group, normal, p, limits);
    report(out, "lemma1", name, p,
           "dim H^1(P) = dim H^1(P/M) + dim H^1(M)^P for |N| = " + normal.order().get_str(),
           ok, "equality", ok ? "equality" : "mismatch");
  }
}

inline void run_tate(std::vector<CheckResult>& out, const std::string& name,
                     const PermGroup& group, std::uint64_t p, const Limits& limits) {
  bool ok = tate_criterion_check(group, p, limits);
  report(out, "tate", name, p, "dim H^1(G) = dim H^1(P) iff p-nilpotent", ok, "equivalence",
         ok ? "equivalence" : "violated");
}

inline void run_tate_cor(std::vector<CheckResult>& out, const std::string& name,
                         const PermGroup& group, std::uint64_t p, const Limits& limits) {
  if (group.order() > static_cast<unsigned long>(limits.normal_lattice_cap)) return;
  bool ok = tate_corollary_check(group, p, limits);
  report(out, "tate-cor", name, p, "N cap P <= Phi(P) forces N p-nilpotent", ok,
         "all normal subgroups pass", ok ? "all normal subgroups pass" : "violated");
}

inline void run_prop4(std::vector<CheckResult>& out, const std::string& name,
                      const PermGroup& group, std::uint64_t p, const Limits& limits) {
  PPerfectFiltration filtration = p_perfect_filtration(group, p, limits);
  bool ok = prop4_check(group, p, filtration, limits);
  report(out, "prop4", name, p,
         "coinvariant maps injective; strict exactly at p-divisible gaps", ok, "laws hold",
         ok ? "laws hold" : "violated");
}

inline void run_huppert(std::vector<CheckResult>& out, const std::string& name,
                        const PermGroup& group, std::uint64_t p, const Limits& limits) {
  if (!is_p_solvable_direct(group, p, limits)) return;
  unsigned l = p_length(group, p, limits);
  unsigned d = min_generators_p_group(sylow_subgroup(group, p, limits), p);
  report(out, "huppert", name, p, "p-solvable case: p_length <= d", l <= d,
         "<= " + std::to_string(d), std::to_string(l));
}

}  // namespace detail

/// Runs one named suite (or "all") over the catalog sweep; results are
/// ordered by (group, prime) and deterministic.
inline std::vector<CheckResult> run_verify_suite(const std::string& suite,
                                                 const VerifyScope& scope = {},
                                                 const Limits& limits = default_limits()) {
  const auto& names = verify_suite_names();
  bool all = suite == "all";
  if (!all && std::find(names.begin(), names.end(), suite) == names.end())
    throw input_error("unknown verify suite '" + suite +
                      "'; expected one of: theorem-a, theorem-b, lemma1, tate, tate-cor, "
                      "prop4, huppert, all");
  std::vector<CheckResult> results;
  for (const auto& [name, p] : detail::sweep_cases(scope)) {
    PermGroup group = catalog_get(name);
    if (all || suite == "theorem-a") detail::run_theorem_a(results, name, group, p, limits);
    if (all || suite == "theorem-b") detail::run_theorem_b(results, name, group, p, limits);
    if (all || suite == "lemma1") detail::run_lemma1(results, name, group, p, limits);
    if (all || suite == "tate") detail::run_tate(results, name, group, p, limits);
    if (all || suite == "tate-cor") detail::run_tate_cor(results, name, group, p, limits);
    if (all || suite == "prop4") detail::run_prop4(results, name, group, p, limits);
    if (all || suite == "huppert") detail::run_huppert(results, name, group, p, limits);
  }
  return results;
}

}  // namespace psolv
