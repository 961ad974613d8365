#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dunkl/cli/config.hpp"

namespace dunkl::cli {

enum class Suite { angular, radial, algebra, coherent, all };

Suite parse_suite(std::string_view text);

struct Check {
  std::string name;
  double tolerance = 0.0;
  std::function<double()> residual;
};

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

std::vector<Check> build_checks(Suite suite, const RunConfig& config);

// Runs on up to `threads` workers; results sorted by name, overrides applied.
std::vector<CheckResult> run_checks(std::vector<Check> checks, const std::vector<ToleranceOverride>& overrides,
                                    int threads);

// DUNKL_OSC_THREADS when set and positive, else the hardware concurrency.
int thread_cap();

void write_report(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace dunkl::cli
