#pragma once

// Aggregated verification: every numeric check the library can certify,
// grouped into nine criteria, plus the randomized property suites.

#include <cstdint>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace kmchar {

struct PropertyResult {
  std::string law;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
};

// Each law is exercised on `cases` random instances drawn from a generator
// seeded with `seed`.
std::vector<PropertyResult> run_property_suites(int cases, std::uint64_t seed);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

CriterionResult criterion_appendix_411();
CriterionResult criterion_homogeneous();
CriterionResult criterion_traces_level1();
CriterionResult criterion_duality(int jobs);
CriterionResult criterion_product_formulas(int jobs);
CriterionResult criterion_trace_chain(int jobs);
CriterionResult criterion_delta2();
CriterionResult criterion_theta();
CriterionResult criterion_properties(int cases = 1000, std::uint64_t seed = 20240601);

std::vector<CriterionResult> run_selftest(int jobs = 1);

Json selftest_json(const std::vector<CriterionResult>& results);
std::string selftest_table(const std::vector<CriterionResult>& results);

}  // namespace kmchar
