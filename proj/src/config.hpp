#ifndef C2INV_CONFIG_HPP
#define C2INV_CONFIG_HPP

#include <cstdint>
#include <string>
#include <thread>

namespace c2inv {

// Budgets make every exhaustive computation either finish or refuse up
// front; they never silently truncate a result.
struct RunConfig {
  std::uint64_t budget_evaluations = 1'000'000'000;  // point-count domain size
  std::uint64_t budget_states = 100'000'000;         // capped-array cells
  std::uint64_t seed = 1729;                         // for randomized suites
  std::uint32_t workers = 0;                         // 0 = hardware threads

  std::uint32_t effective_workers() const {
    if (workers != 0) return workers;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
};

}  // namespace c2inv

#endif
