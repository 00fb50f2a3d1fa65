#include "report.hpp"

#include <sstream>

namespace c2inv {

nlohmann::json to_json(const ResidueReport& r, std::uint64_t seed) {
  nlohmann::json j{
      {"graph", r.graph_id}, {"p", r.p},
      {"s", r.s},            {"q", r.q},
      {"method", r.method},  {"residue", r.value},
      {"modulus", r.modulus}, {"runtime_ms", r.runtime_ms},
      {"seed", seed},
  };
  if (r.count) j["count"] = *r.count;
  else j["count"] = nullptr;
  return j;
}

nlohmann::json to_json(const CheckResult& r) {
  const char* status = r.status == CheckResult::Status::pass ? "pass"
                       : r.status == CheckResult::Status::fail ? "fail"
                                                                : "skipped";
  return nlohmann::json{
      {"suite", r.suite},   {"name", r.name},
      {"status", status},   {"detail", r.detail},
      {"runtime_ms", r.runtime_ms},
  };
}

std::string check_results_to_lines(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const CheckResult& r : results) out << to_json(r).dump() << '\n';
  return out.str();
}

nlohmann::json catalog_to_json() {
  nlohmann::json entries = nlohmann::json::array();
  for (const CatalogEntry& e : catalog()) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& ed : e.graph.edges())
      edges.push_back({e.graph.label(ed.u), e.graph.label(ed.v)});
    entries.push_back({
        {"name", e.name},
        {"aliases", e.aliases},
        {"vertices", e.graph.vertex_count()},
        {"edges", e.graph.edge_count()},
        {"edge_list", edges},
        {"completion_vertices", e.completion.vertex_count()},
        {"note", e.note},
        {"runnable", true},
    });
  }
  nlohmann::json census = nlohmann::json::array();
  for (const CensusNote& n : documented_census()) {
    census.push_back({
        {"name", n.name},
        {"c2_mod_2", n.c2_mod_2},
        {"c2_mod_8", n.c2_mod_8},
        {"note", n.note},
        {"runnable", false},
    });
  }
  return nlohmann::json{{"entries", entries}, {"census", census}};
}

}  // namespace c2inv
