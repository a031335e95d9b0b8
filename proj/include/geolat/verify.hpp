#pragma once

// The acceptance checks, runnable one at a time or as named suites.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geolat::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Options {
  std::uint32_t seed = 20241015;
};

struct Suite {
  std::string name;
  std::vector<int> criteria;
};

// Criteria are numbered 1..criterion_count().
int criterion_count();
std::string criterion_name(int id);

// Never throws; an escaped exception fails the criterion with its message.
CriterionResult run_criterion(int id, const Options& options = {});

// "all" plus one suite per topic.
std::vector<Suite> suites();
std::optional<Suite> find_suite(std::string_view name);

std::vector<CriterionResult> run_suite(const Suite& suite, const Options& options = {});

// One line per result: "PASS  3  name (0.12 s): detail".
std::string format_result(const CriterionResult& r);

}  // namespace geolat::verify
