#pragma once

// The acceptance battery: one verdict per criterion, shared by the `suite`
// subcommand and the acceptance test binary.

#include <string>
#include <vector>

#include <json.hpp>

namespace sl2ybe {

struct SuiteOptions {
  int two_s_max = 6;  // grids documented as "2s <= 6"
};

struct CriterionResult {
  std::string id;      // "1", ..., "6a", "6b", ..., "11"
  std::string title;
  std::string anchor;  // equation anchor of the check
  bool pass = false;
  std::string detail;
};

std::vector<std::string> criterion_ids();
CriterionResult run_criterion(const std::string& id, const SuiteOptions& opts);
std::vector<CriterionResult> run_suite(const SuiteOptions& opts);

/// "PASS  6a  <title>  -- <detail>"
std::string format_line(const CriterionResult& r);
nlohmann::json to_json(const CriterionResult& r);

}  // namespace sl2ybe
