#include <catch2/catch_amalgamated.hpp>

#include "psolv/verify.hpp"

namespace {

std::size_t failures(const std::vector<psolv::CheckResult>& results) {
  std::size_t n = 0;
  for (const auto& r : results)
    if (!r.pass) ++n;
  return n;
}

}  // namespace

TEST_CASE("suite names are validated") {
  CHECK_THROWS_AS(psolv::run_verify_suite("nope"), psolv::input_error);
}

TEST_CASE("single-group scopes pass") {
  psolv::VerifyScope s4_scope;
  s4_scope.group = "S4";
  for (const auto& suite : psolv::verify_suite_names()) {
    auto results = psolv::run_verify_suite(suite, s4_scope);
    INFO(suite);
    CHECK(failures(results) == 0);
  }

  psolv::VerifyScope cover_scope;
  cover_scope.group = "2.S5";
  cover_scope.prime = 2;
  auto results = psolv::run_verify_suite("theorem-b", cover_scope);
  CHECK(results.size() >= 4);
  CHECK(failures(results) == 0);
}

TEST_CASE("trivial scope runs cleanly") {
  psolv::VerifyScope scope;
  scope.group = "C2";
  scope.prime = 2;
  auto results = psolv::run_verify_suite("all", scope);
  CHECK(failures(results) == 0);
  CHECK(!results.empty());
}

TEST_CASE("results are ordered by group then prime") {
  psolv::VerifyScope scope;
  scope.group = "A5";
  auto results = psolv::run_verify_suite("tate", scope);
  REQUIRE(results.size() == 3);
  CHECK(results[0].prime == 2);
  CHECK(results[1].prime == 3);
  CHECK(results[2].prime == 5);
}
