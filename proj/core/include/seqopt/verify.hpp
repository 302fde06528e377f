#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <seqopt/numbers.hpp>

namespace seqopt {

/// Named invariant suites runnable from the command line.
enum class Suite { Oracle, Bounds, Poly, Lemmas, All };

Suite parse_suite(const std::string& name);

struct VerifyOptions {
  std::uint64_t enum_budget = 20'000'000;
  std::uint64_t combo_budget = kDefaultComboBudget;
  unsigned jobs = 1;
  /// Restrict the lemmas suite to one id ("2.1", "3.2", ...). Empty = all.
  std::string which;
  /// Cap the grids at this n (0 keeps each check's default grid).
  int max_n = 0;
  /// Restrict to one dimension k (0 keeps each check's default set).
  int k = 0;
  /// Progress notes on stderr.
  bool progress = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // one line: the values that decided the verdict
};

/// Runs the suite's checks in order. Throws BudgetExceeded if a configured
/// budget is hit; any other failure is a false CheckResult, not an exception.
std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options = {});

}  // namespace seqopt
