#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "psolv/psolv.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapacityError = 3;
constexpr int kExitInternalError = 4;

std::string order_string(const mpz_class& n) { return n.get_str(); }

void print_analysis_table(const psolv::AnalysisReport& r) {
  auto yesno = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "group                     " << r.group << "\n"
            << "prime                     " << r.prime << "\n"
            << "order                     " << order_string(r.order) << "\n"
            << "sylow order               " << order_string(r.sylow_order) << "\n"
            << "d (Sylow generators)      " << r.d << "\n"
            << "dim H^1(G)                " << r.h1_dim_group << "\n"
            << "dim H^1(P)                " << r.h1_dim_sylow << "\n"
            << "p-solvable (criterion)    " << yesno(r.p_solvable_criterion) << "\n"
            << "p-solvable (direct)       " << yesno(r.p_solvable_direct) << "\n"
            << "theorem A lhs = rhs       " << r.theorem_a_lhs << " vs " << r.theorem_a_rhs
            << "\n";
  std::cout << "theorem A terms           ";
  for (std::size_t i = 0; i < r.theorem_a_term_orders.size(); ++i)
    std::cout << (i ? ", " : "") << "|M_" << i + 1 << "|=" << order_string(r.theorem_a_term_orders[i])
              << " dim=" << r.theorem_a_term_dims[i];
  std::cout << "\n"
            << "chief factor orders       ";
  for (std::size_t i = 0; i + 1 < r.chief_factor_orders.size(); ++i)
    std::cout << (i ? ", " : "")
              << mpz_class(r.chief_factor_orders[i] / r.chief_factor_orders[i + 1]).get_str();
  std::cout << "\n"
            << "p_length                  " << r.p_length << "\n"
            << "non_p_solvable_length     " << r.non_p_solvable_length << "\n"
            << "generalized_p_length      " << r.generalized_p_length;
  if (r.generalized_p_length_exhaustive)
    std::cout << " (exhaustive minimum " << *r.generalized_p_length_exhaustive << ")";
  std::cout << "\n"
            << "pperfect_length           " << r.pperfect_length << "\n"
            << "bounds                    l<=d " << yesno(r.bound_p_length_le_d) << ", nonsolv<=d "
            << yesno(r.bound_non_p_solvable_le_d) << ", pperfect<=d "
            << yesno(r.bound_pperfect_le_d) << ", gen<=2d " << yesno(r.bound_generalized_le_2d)
            << "\n";
}

int run_analyze(const std::string& name, const std::string& file, std::uint64_t prime,
                bool json) {
  psolv::PermGroup group =
      file.empty() ? psolv::catalog_get(name) : psolv::load_group_file(file);
  std::string label = file.empty() ? name : file;
  psolv::AnalysisReport report = psolv::analyze(group, prime, label);
  if (json)
    std::cout << psolv::to_json(report).dump(2) << "\n";
  else
    print_analysis_table(report);
  return kExitOk;
}

int run_filtration(const std::string& name, std::uint64_t prime, bool json) {
  psolv::PermGroup group = psolv::catalog_get(name);
  psolv::TheoremAFiltration chain = psolv::theorem_a_filtration(group, prime);
  psolv::PPerfectFiltration filtration = psolv::p_perfect_filtration(group, prime);
  if (json) {
    nlohmann::ordered_json j;
    j["group"] = name;
    j["theorem_a"] = psolv::to_json(chain);
    j["p_perfect"] = psolv::to_json(filtration);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "Theorem A chain for " << name << " at p = " << prime << " (dim H^1(P) = "
            << chain.lhs_dim << "):\n";
  for (std::size_t i = 0; i < chain.terms.size(); ++i)
    std::cout << "  M_" << i + 1 << ": order " << order_string(chain.terms[i].subgroup.order())
              << ", dim H^1(M)^P = " << chain.terms[i].fixed_dim << "\n";
  std::cout << "  stable term order " << order_string(chain.stable.order()) << " => "
            << (chain.verdict ? "p-solvable" : "not p-solvable") << "\n";
  std::cout << "Canonical series:\n";
  for (std::size_t i = 0; i < filtration.refined.terms.size(); ++i) {
    std::cout << "  order " << order_string(filtration.refined.terms[i].order());
    if (i < filtration.refined.factor_kinds.size())
      std::cout << "   factor below: "
                << psolv::factor_kind_name(filtration.refined.factor_kinds[i]);
    std::cout << "\n";
  }
  std::cout << "p-perfect filtration members:";
  for (const auto& member : filtration.members)
    std::cout << " " << order_string(member.order());
  std::cout << "\np-perfect length " << filtration.pperfect_length << "\n";
  return kExitOk;
}

int run_verify(const std::string& suite, const std::string& group_filter,
               std::uint64_t prime_filter, bool json) {
  psolv::VerifyScope scope;
  if (!group_filter.empty()) {
    psolv::catalog_get(group_filter);  // validates the name
    scope.group = group_filter;
  }
  if (prime_filter != 0) {
    psolv::require_prime(prime_filter);
    scope.prime = prime_filter;
  }
  std::vector<psolv::CheckResult> results = psolv::run_verify_suite(suite, scope);
  std::size_t failures = 0;
  for (const auto& r : results)
    if (!r.pass) ++failures;
  if (json) {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["cases"] = results.size();
    j["failures"] = failures;
    nlohmann::ordered_json violations = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      if (r.pass) continue;
      nlohmann::ordered_json v;
      v["suite"] = r.suite;
      v["group"] = r.group;
      v["prime"] = r.prime;
      v["check"] = r.check;
      v["expected"] = r.expected;
      v["actual"] = r.actual;
      violations.push_back(v);
    }
    j["violations"] = violations;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results)
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.suite << "  " << r.group << "  p="
                << r.prime << "  " << r.check
                << (r.pass ? "" : "  (expected " + r.expected + ", got " + r.actual + ")")
                << "\n";
    std::cout << results.size() << " checks, " << failures << " failure(s)\n";
  }
  return failures == 0 ? kExitOk : kExitViolation;
}

int run_catalog_list() {
  for (const auto& entry : psolv::catalog_entries())
    std::cout << entry.name << "  degree " << entry.degree << "  order " << entry.expected_order
              << "  (" << entry.description << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"psolv: mod-p degree-1 cohomology, Sylow residuals, and p-solvability "
               "verification for permutation groups"};
  app.require_subcommand(1);

  std::string analyze_name, analyze_file;
  std::uint64_t analyze_prime = 0;
  bool analyze_json = false;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full profile of a (group, prime) pair");
  analyze_cmd->add_option("name", analyze_name, "catalog group name");
  analyze_cmd->add_option("--file", analyze_file, "load group from a text file instead");
  analyze_cmd->add_option("-p,--prime", analyze_prime, "prime p")->required();
  analyze_cmd->add_flag("--json", analyze_json, "emit JSON");

  std::string verify_suite, verify_group;
  std::uint64_t verify_prime = 0;
  bool verify_json = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run an invariant suite over the catalog");
  verify_cmd->add_option("suite", verify_suite,
                         "theorem-a|theorem-b|lemma1|tate|tate-cor|prop4|huppert|all")
      ->required();
  verify_cmd->add_option("--group", verify_group, "restrict to one catalog group");
  verify_cmd->add_option("-p,--prime", verify_prime, "restrict to one prime");
  verify_cmd->add_flag("--json", verify_json, "emit JSON");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "catalog utilities");
  CLI::App* catalog_list_cmd = catalog_cmd->add_subcommand("list", "list catalog groups");
  (void)catalog_list_cmd;

  std::string filtration_name;
  std::uint64_t filtration_prime = 0;
  bool filtration_json = false;
  CLI::App* filtration_cmd =
      app.add_subcommand("filtration", "print the Theorem-A chain and p-perfect filtration");
  filtration_cmd->add_option("name", filtration_name, "catalog group name")->required();
  filtration_cmd->add_option("-p,--prime", filtration_prime, "prime p")->required();
  filtration_cmd->add_flag("--json", filtration_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*analyze_cmd) {
      if (analyze_name.empty() == analyze_file.empty())
        throw psolv::input_error("analyze needs exactly one of a group name or --file");
      return run_analyze(analyze_name, analyze_file, analyze_prime, analyze_json);
    }
    if (*verify_cmd) return run_verify(verify_suite, verify_group, verify_prime, verify_json);
    if (*catalog_cmd) return run_catalog_list();
    if (*filtration_cmd) return run_filtration(filtration_name, filtration_prime, filtration_json);
  } catch (const psolv::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const psolv::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacityError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitInputError;
}
