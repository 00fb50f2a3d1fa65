#ifndef C2INV_REPORT_HPP
#define C2INV_REPORT_HPP

#include <string>

#include <json.hpp>

#include "catalog.hpp"
#include "counting.hpp"
#include "verify.hpp"

namespace c2inv {

// Record schema for one residue: graph, p, s, q, method, count, residue,
// modulus, runtime_ms, seed.  `count` is the raw integer behind the residue
// (zero count or coefficient); `runtime_ms` is informational and varies
// between runs.
nlohmann::json to_json(const ResidueReport& r, std::uint64_t seed);

nlohmann::json to_json(const CheckResult& r);

// One JSON object per line.
std::string check_results_to_lines(const std::vector<CheckResult>& results);

nlohmann::json catalog_to_json();

}  // namespace c2inv

#endif
