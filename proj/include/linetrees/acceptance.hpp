#ifndef LINETREES_ACCEPTANCE_HPP
#define LINETREES_ACCEPTANCE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "linetrees/corpus.hpp"

namespace linetrees {

struct AcceptanceOptions {
  CorpusOptions corpus;
  /// DFS step bound for every enumeration in the suite.
  std::uint64_t enumeration_bound = 10'000'000;
  /// Graphs with more tree arrays than this are skipped by the bijection check.
  std::uint64_t bijection_array_limit = 10'000;
  std::vector<std::uint64_t> shuffle_seeds = {11, 22, 33};
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  /// Zero when the criterion has no runtime budget.
  double budget_seconds = 0;
};

/// Runs the nine acceptance checks in order. `report` is called as each one
/// finishes. A check that throws is recorded as failed with the message.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {},
                                            const std::function<void(const CriterionResult&)>& report = {});

/// "PASS [3] title (1.23s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace linetrees

#endif  // LINETREES_ACCEPTANCE_HPP
