#ifndef C2INV_VERIFY_HPP
#define C2INV_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "config.hpp"

namespace c2inv {

enum class Suite { lemmas, prop, theorem1, all };

Suite suite_from_name(std::string_view name);
const char* suite_name(Suite s);

struct CheckResult {
  std::string suite;
  std::string name;
  enum class Status { pass, fail, skipped } status = Status::fail;
  std::string detail;
  double runtime_ms = 0.0;
};

// Runs every check in the suite; never throws on a failed check, only on
// setup errors (bad config).  Skipped checks record why.
std::vector<CheckResult> run_suite(Suite suite, const RunConfig& cfg);

struct SuiteSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};
SuiteSummary summarize(const std::vector<CheckResult>& results);

}  // namespace c2inv

#endif
