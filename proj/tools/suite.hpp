#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jsyz/backend.hpp"

namespace jsyz::suite {

struct CriterionInfo {
  int id = 0;
  std::string name;
  std::string group;  // "arrangement", "pencil", "property" or "tangent"
  double budget_seconds = 0;
};

struct CriterionResult {
  CriterionInfo info;
  bool pass = false;
  std::string detail;  // the measured values, or the first failed check
  double seconds = 0;
};

struct Options {
  Backend backend;
  /// Empty runs everything; otherwise a group name, a criterion number or a
  /// substring of a criterion name.
  std::string filter;
  /// Criterion whose fixtures get an extra generic line multiplied in (0: none).
  int corrupt = 0;
};

const std::vector<CriterionInfo>& criteria();

bool selected(const CriterionInfo& c, const std::string& filter);

/// Runs the selected criteria one after another, reporting each as it finishes.
std::vector<CriterionResult> run(const Options& options,
                                 const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  [ 3] name ... (0.41 s) detail"
std::string format_line(const CriterionResult& r);

}  // namespace jsyz::suite
