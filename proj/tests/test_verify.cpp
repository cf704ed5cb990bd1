#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "hyperq/verify.hpp"

using namespace hyperq;

TEST_CASE("zero trials give an empty summary") {
  VerifyOptions opt;
  opt.trials = 0;
  VerifySummary s = run_verify(opt);
  CHECK(s.suites.empty());
  CHECK(s.all_passed());
  CHECK(s.requested_trials == 0);
}

TEST_CASE("default suites all pass at small scale") {
  VerifyOptions opt;
  opt.trials = 25;
  VerifySummary s = run_verify(opt);
  REQUIRE(s.suites.size() == 10);
  std::vector<std::string> names;
  for (const SuiteResult& suite : s.suites) {
    names.push_back(suite.name);
    INFO(suite.name << ": " << (suite.counterexample ? *suite.counterexample : ""));
    CHECK(suite.failures == 0);
    CHECK(suite.trials == 25);
    CHECK(suite.passes + suite.skips == suite.trials);
  }
  CHECK(s.all_passed());
  CHECK(names == std::vector<std::string>{
                     "factorizations", "row-sums", "polynomial-identities", "bounds",
                     "regularity-equivalence", "zero-bipartition", "union-product-spectra",
                     "subgraph-monotonicity", "power-spectrum", "converse-search"});
}

TEST_CASE("summaries are deterministic in the master seed") {
  VerifyOptions opt;
  opt.trials = 10;
  opt.seed = 12345;
  VerifySummary a = run_verify(opt);
  VerifySummary b = run_verify(opt);
  REQUIRE(a.suites.size() == b.suites.size());
  for (std::size_t i = 0; i < a.suites.size(); ++i) {
    CHECK(a.suites[i].passes == b.suites[i].passes);
    CHECK(a.suites[i].skips == b.suites[i].skips);
    CHECK(a.suites[i].notes == b.suites[i].notes);
  }
}

TEST_CASE("converse search logs witnesses over enough trials") {
  // Partially bipartite instances without eigenvalue zero exist and must be
  // reported as notes, not failures.
  VerifyOptions opt;
  opt.trials = 60;
  opt.seed = 2;
  VerifySummary s = run_verify(opt);
  const SuiteResult& conv = s.suites.back();
  REQUIRE(conv.name == "converse-search");
  CHECK(conv.failures == 0);
  CHECK_FALSE(conv.notes.empty());
}

TEST_CASE("wider parameter ranges stay green") {
  VerifyOptions opt;
  opt.trials = 10;
  opt.min_k = 2;
  opt.max_k = 4;
  opt.max_n = 10;
  opt.seed = 777;
  VerifySummary s = run_verify(opt);
  for (const SuiteResult& suite : s.suites) {
    INFO(suite.name << ": " << (suite.counterexample ? *suite.counterexample : ""));
    CHECK(suite.failures == 0);
  }
}
