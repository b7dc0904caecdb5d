// Acceptance suite: runs each top-level claim the kernel is expected to
// reproduce, printing one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "psolv/psolv.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

void criterion(int number, const std::string& title, bool pass, const std::string& detail,
               double seconds) {
  std::ostringstream line;
  line << (pass ? "[PASS] " : "[FAIL] ") << number << ". " << title;
  if (!detail.empty()) line << " -- " << detail;
  line << " (" << seconds << " s)";
  std::cout << line.str() << std::endl;
  if (!pass) ++g_failures;
}

struct Timer {
  Clock::time_point start = Clock::now();
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }
};

std::vector<std::pair<std::string, std::uint64_t>> catalog_sweep() {
  std::vector<std::pair<std::string, std::uint64_t>> cases;
  for (const auto& name : psolv::catalog_names()) {
    psolv::PermGroup g = psolv::catalog_get(name);
    for (std::uint64_t p : {2, 3, 5, 7})
      if (psolv::divides(p, g.order())) cases.emplace_back(name, p);
  }
  return cases;
}

// 1. Theorem A: criterion verdict == definitional p-solvability, full sweep.
void criterion_theorem_a() {
  Timer timer;
  std::string detail;
  bool pass = true;
  for (const auto& [name, p] : catalog_sweep()) {
    psolv::PermGroup g = psolv::catalog_get(name);
    psolv::TheoremAVerdict verdict = psolv::theorem_a_criterion(g, p);
    bool direct = psolv::is_p_solvable_direct(g, p);
    if (verdict.p_solvable != direct) {
      pass = false;
      detail += name + "@p=" + std::to_string(p) + " ";
    }
  }
  criterion(1, "Theorem A equivalence over the catalog sweep", pass, detail, timer.seconds());
}

// 2. The Schur-cover counterexample at p = 2.
void criterion_schur_cover() {
  Timer timer;
  psolv::PermGroup g = psolv::catalog_get("2.S5");
  psolv::AnalysisReport r = psolv::analyze(g, 2, "2.S5");
  bool pass = r.generalized_p_length == 3 && r.d == 2 && r.generalized_p_length > r.d &&
              r.pperfect_length == 2 && r.pperfect_length <= r.d && r.p_length == 2 &&
              r.p_length <= r.d;
  std::ostringstream detail;
  detail << "generalized=" << r.generalized_p_length << " d=" << r.d
         << " pperfect=" << r.pperfect_length << " p_length=" << r.p_length;
  criterion(2, "Schur cover 2.S5: generalized 2-length 3 > d = 2", pass, detail.str(),
            timer.seconds());
}

// 3. Theorem B sweep plus Huppert's p-solvable case.
void criterion_theorem_b() {
  Timer timer;
  bool pass = true;
  std::string detail;
  const std::set<std::string> named_solvable = {"S3",  "S4", "SL(2,3)", "GL(2,3)", "D8",
                                                "Q8",  "C2", "C3",      "C6",      "C15"};
  for (const auto& [name, p] : catalog_sweep()) {
    psolv::PermGroup g = psolv::catalog_get(name);
    unsigned l = psolv::p_length(g, p);
    unsigned d = psolv::min_generators_p_group(psolv::sylow_subgroup(g, p), p);
    if (l > d) {
      pass = false;
      detail += name + "@p=" + std::to_string(p) + " ";
    }
    if (named_solvable.count(name) && !psolv::is_p_solvable_direct(g, p)) {
      pass = false;
      detail += name + " expected solvable ";
    }
  }
  criterion(3, "Theorem B: p_length <= d on the sweep (Huppert case included)", pass, detail,
            timer.seconds());
}

// 4. Lemma 2.1 dimension identity over enumerated p-perfect normal subgroups.
void criterion_lemma1() {
  Timer timer;
  bool pass = true;
  std::string detail;
  for (const auto& [name, p] : catalog_sweep()) {
    psolv::PermGroup g = psolv::catalog_get(name);
    for (const auto& n : psolv::normal_subgroups(g)) {
      if (!psolv::o_p(n, p).same_group_as(n)) continue;
      if (!psolv::lemma1_dims_check(g, n, p)) {
        pass = false;
        detail += name + "@p=" + std::to_string(p) + "/|N|=" + n.order().get_str() + " ";
      }
    }
  }
  // The worked instance (S4, A4, 2): 2 = 1 + 1.
  psolv::PermGroup s4 = psolv::symmetric_group(4);
  psolv::PermGroup syl = psolv::sylow_subgroup(s4, 2);
  psolv::PermGroup a4 = psolv::alternating_group(4);
  psolv::PermGroup m = psolv::intersection(a4, syl);
  if (psolv::h1_dim(syl, 2) != 2 ||
      psolv::h1_dim(psolv::quotient_group(syl, m).image(), 2) != 1 ||
      psolv::h1_fixed_dim(m, syl, 2) != 1) {
    pass = false;
    detail += "worked instance (S4, A4, 2) ";
  }
  criterion(4, "Lemma 2.1 dimension identity on all p-perfect normal subgroups", pass, detail,
            timer.seconds());
}

// 5. Tate's criterion on the sweep.
void criterion_tate() {
  Timer timer;
  bool pass = true;
  std::string detail;
  for (const auto& [name, p] : catalog_sweep()) {
    if (!psolv::tate_criterion_check(psolv::catalog_get(name), p)) {
      pass = false;
      detail += name + "@p=" + std::to_string(p) + " ";
    }
  }
  psolv::PermGroup s3 = psolv::symmetric_group(3);
  psolv::PermGroup s4 = psolv::symmetric_group(4);
  if (!(psolv::h1_dim(s3, 2) == psolv::h1_dim(psolv::sylow_subgroup(s3, 2), 2) &&
        psolv::is_p_nilpotent(s3, 2)))
    pass = false;
  if (!(psolv::h1_dim(s4, 2) != psolv::h1_dim(psolv::sylow_subgroup(s4, 2), 2) &&
        !psolv::is_p_nilpotent(s4, 2)))
    pass = false;
  criterion(5, "Tate's criterion across the sweep", pass, detail, timer.seconds());
}

// 6. Corollary 2.2 on all catalog groups within the lattice cap.
void criterion_tate_corollary() {
  Timer timer;
  bool pass = true;
  std::string detail;
  for (const auto& [name, p] : catalog_sweep()) {
    psolv::PermGroup g = psolv::catalog_get(name);
    if (g.order() > 10000) continue;
    if (!psolv::tate_corollary_check(g, p)) {
      pass = false;
      detail += name + "@p=" + std::to_string(p) + " ";
    }
  }
  criterion(6, "Corollary 2.2 (Frattini hypothesis forces p-nilpotency)", pass, detail,
            timer.seconds());
}

// 7. Proposition 4.1 laws on every constructed p-perfect filtration.
void criterion_prop4() {
  Timer timer;
  bool pass = true;
  std::string detail;
  for (const auto& [name, p] : catalog_sweep()) {
    psolv::PermGroup g = psolv::catalog_get(name);
    psolv::PPerfectFiltration filtration = psolv::p_perfect_filtration(g, p);
    if (!psolv::prop4_check(g, p, filtration)) {
      pass = false;
      detail += name + "@p=" + std::to_string(p) + " ";
    }
  }
  criterion(7, "Prop 4.1 injectivity and strictness laws", pass, detail, timer.seconds());
}

// 8. Oracle equivalence for every (N, P, p) triple arising in the sweep.
void criterion_oracle() {
  Timer timer;
  bool pass = true;
  std::string detail;
  for (const auto& [name, p] : catalog_sweep()) {
    psolv::PermGroup g = psolv::catalog_get(name);
    psolv::PermGroup syl = psolv::sylow_subgroup(g, p);
    std::vector<psolv::PermGroup> arising;
    for (const auto& term : psolv::theorem_a_filtration(g, p).terms)
      arising.push_back(term.subgroup);
    for (const auto& member : psolv::p_perfect_filtration(g, p).members)
      arising.push_back(psolv::intersection(member, syl));
    for (const auto& n : psolv::normal_subgroups(g))
      if (psolv::o_p(n, p).same_group_as(n))
        arising.push_back(psolv::intersection(n, syl));
    for (const auto& n : arising) {
      if (n.order() > 5000) continue;
      if (psolv::h1_fixed_dim(n, syl, p) != psolv::h1_hom_oracle(n, syl, p)) {
        pass = false;
        detail += name + "@p=" + std::to_string(p) + "/|N|=" + n.order().get_str() + " ";
      }
    }
  }
  // Worked dims: H^1(V4)^{D8} = 1 inside S4, H^1(S4) = 1, H^1(D8) = 2.
  psolv::PermGroup s4 = psolv::symmetric_group(4);
  psolv::PermGroup syl = psolv::sylow_subgroup(s4, 2);
  psolv::PermGroup v4 = psolv::o_p_prime(psolv::alternating_group(4), 2);
  if (psolv::h1_fixed_dim(v4, syl, 2) != 1 || psolv::h1_dim(s4, 2) != 1 ||
      psolv::h1_dim(syl, 2) != 2) {
    pass = false;
    detail += "worked dims ";
  }
  criterion(8, "h1_fixed_dim equals the homomorphism-counting oracle", pass, detail,
            timer.seconds());
}

// 9. Canonical generalized length equals the exhaustive minimum (|G| <= 2000).
void criterion_exhaustive_lengths() {
  Timer timer;
  bool pass = true;
  std::string detail;
  for (const auto& [name, p] : catalog_sweep()) {
    psolv::PermGroup g = psolv::catalog_get(name);
    if (g.order() > 2000) continue;
    unsigned canonical = psolv::generalized_p_length(g, p);
    unsigned minimum = psolv::exhaustive_generalized_p_length(g, p);
    if (canonical != minimum) {
      pass = false;
      detail += name + "@p=" + std::to_string(p) + " canonical=" + std::to_string(canonical) +
                " min=" + std::to_string(minimum) + " ";
    }
  }
  criterion(9, "canonical generalized p-length attains the exhaustive minimum", pass, detail,
            timer.seconds());
}

// 10. Kernel self-consistency: chain orders vs exhaustive closure, quotient
//     order arithmetic, Lagrange, and a clean full verify-all run.
void criterion_kernel() {
  Timer timer;
  bool pass = true;
  std::string detail;
  for (const auto& name : psolv::catalog_names()) {
    psolv::PermGroup g = psolv::catalog_get(name);
    if (g.order() > 10000) continue;

    // Exhaustive closure count must match the stabilizer-chain order.
    std::set<psolv::Permutation> closure{g.identity()};
    std::vector<psolv::Permutation> queue{g.identity()};
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto& gen : g.generators()) {
        psolv::Permutation next = queue[head] * gen;
        if (closure.insert(next).second) queue.push_back(std::move(next));
      }
    if (g.order() != closure.size()) {
      pass = false;
      detail += name + " order mismatch ";
    }
    for (const auto& e : closure)
      if (!g.contains(e)) {
        pass = false;
        detail += name + " membership mismatch ";
        break;
      }

    // Quotient orders multiply and Lagrange holds for derived subgroups,
    // Sylow subgroups, and residuals.
    for (std::uint64_t p : {2, 3, 5, 7}) {
      if (!psolv::divides(p, g.order())) continue;
      for (const auto& h : {psolv::derived_subgroup(g), psolv::sylow_subgroup(g, p),
                            psolv::o_p(g, p), psolv::o_p_prime(g, p)}) {
        if (g.order() % h.order() != 0) {
          pass = false;
          detail += name + " Lagrange ";
        }
      }
      psolv::PermGroup res = psolv::o_p(g, p);
      auto q = psolv::quotient_group(g, res);
      if (q.image().order() * res.order() != g.order()) {
        pass = false;
        detail += name + " quotient arithmetic ";
      }
    }
  }

  std::vector<psolv::CheckResult> all = psolv::run_verify_suite("all");
  std::size_t verify_failures = 0;
  for (const auto& r : all)
    if (!r.pass) ++verify_failures;
  if (verify_failures != 0) {
    pass = false;
    detail += "verify-all failures: " + std::to_string(verify_failures) + " ";
  }
  criterion(10, "kernel self-consistency and full verify-all sweep", pass, detail,
            timer.seconds());
}

}  // namespace

int main() {
  Timer total;
  criterion_theorem_a();
  criterion_schur_cover();
  criterion_theorem_b();
  criterion_lemma1();
  criterion_tate();
  criterion_tate_corollary();
  criterion_prop4();
  criterion_oracle();
  criterion_exhaustive_lengths();
  criterion_kernel();
  std::cout << (g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
            << total.seconds() << " s total)" << std::endl;
  return g_failures == 0 ? 0 : 1;
}
