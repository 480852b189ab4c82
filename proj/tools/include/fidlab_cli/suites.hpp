#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fidlab_cli/report.hpp"

namespace fidlab::cli {

struct SuiteOptions {
  std::vector<int> dims{2, 3, 4};
  int trials = 100;
  std::uint64_t seed = 0;
  int threads = 1;
};

const std::vector<std::string>& suite_names();

// Throws UnknownSuite for names outside suite_names() and "all".
Report run_suite(const std::string& name, const SuiteOptions& options);

// FIDLAB_THREADS if set and positive, else the hardware concurrency.
int default_threads();

}  // namespace fidlab::cli
