#include <doctest.h>

#include <c2inv/c2inv.h>
#include <json.hpp>

#include <filesystem>
#include <sstream>
#include <string>

namespace {

// Owns a graph handle for the duration of a test block.
struct GraphHandle {
  c2inv_graph* g = nullptr;
  ~GraphHandle() { c2inv_graph_free(g); }
};

std::string take_string(char* s) {
  std::string out = s ? s : "";
  c2inv_string_free(s);
  return out;
}

const char* kK4 = "a b\na c\nb c\na d\nc d\nb d\n";

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(c2inv_version()) == "1.0.0");
  CHECK(std::string(c2inv_status_name(C2INV_OK)) == "ok");
  CHECK(std::string(c2inv_status_name(C2INV_ERROR_PARSE)) == "parse_error");
  CHECK(std::string(c2inv_status_name(C2INV_ERROR_BUDGET)) == "budget_exceeded");
  CHECK(c2inv_last_error() != nullptr);
}

TEST_CASE("graph parsing and queries") {
  GraphHandle h;
  REQUIRE(c2inv_graph_parse(kK4, &h.g) == C2INV_OK);
  uint32_t vertices = 0, edges = 0;
  CHECK(c2inv_graph_order(h.g, &vertices, &edges) == C2INV_OK);
  CHECK(vertices == 4);
  CHECK(edges == 6);

  uint64_t trees = 0;
  CHECK(c2inv_graph_spanning_tree_count(h.g, &trees) == C2INV_OK);
  CHECK(trees == 16);

  int32_t divergent = 0;
  char* reason = nullptr;
  CHECK(c2inv_graph_primitive_divergent(h.g, &divergent, &reason) == C2INV_OK);
  CHECK(divergent == 1);
  CHECK(take_string(reason).empty());
}

TEST_CASE("parse failures carry the line number") {
  c2inv_graph* g = nullptr;
  CHECK(c2inv_graph_parse("a b\nb a\n", &g) == C2INV_ERROR_PARSE);
  CHECK(std::string(c2inv_last_error()).find("line 2") != std::string::npos);
  CHECK(g == nullptr);
}

TEST_CASE("graph loading by catalog name, alias and path") {
  GraphHandle by_name, by_alias;
  REQUIRE(c2inv_graph_load("c7", &by_name.g) == C2INV_OK);
  REQUIRE(c2inv_graph_load("c7_12_decomp", &by_alias.g) == C2INV_OK);
  uint32_t v1 = 0, e1 = 0, v2 = 0, e2 = 0;
  c2inv_graph_order(by_name.g, &v1, &e1);
  c2inv_graph_order(by_alias.g, &v2, &e2);
  CHECK(v1 == 6);
  CHECK(e1 == 10);
  CHECK(v1 == v2);
  CHECK(e1 == e2);

  c2inv_graph* missing = nullptr;
  CHECK(c2inv_graph_load("/no/such/file", &missing) ==
        C2INV_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("polynomial strings") {
  GraphHandle tri;
  REQUIRE(c2inv_graph_parse("a b\na c\nb c\n", &tri.g) == C2INV_OK);
  char* psi = nullptr;
  REQUIRE(c2inv_kirchhoff_string(tri.g, &psi) == C2INV_OK);
  CHECK(take_string(psi) == "a1 + a2 + a3");

  GraphHandle k4;
  REQUIRE(c2inv_graph_parse(kK4, &k4.g) == C2INV_OK);
  char* phi = nullptr;
  REQUIRE(c2inv_forest_poly_string(k4.g, "a b | c", &phi) == C2INV_OK);
  CHECK(take_string(phi) ==
        "a1*a2*a3*a5 + a2*a3*a4*a5 + a2*a3*a4*a6 + a2*a3*a5*a6");

  char* bad = nullptr;
  CHECK(c2inv_forest_poly_string(k4.g, "a z | c", &bad) ==
        C2INV_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("run config defaults") {
  c2inv_run_config cfg;
  c2inv_run_config_init(&cfg);
  CHECK(cfg.budget_evaluations == 1000000000ull);
  CHECK(cfg.budget_states == 100000000ull);
  CHECK(cfg.seed == 1729);
  CHECK(cfg.workers == 0);
}

TEST_CASE("c2 computation through the interface") {
  GraphHandle k4;
  REQUIRE(c2inv_graph_parse(kK4, &k4.g) == C2INV_OK);

  c2inv_c2_report rep{};
  REQUIRE(c2inv_c2_compute(k4.g, 2, 1, "definition", nullptr, &rep) == C2INV_OK);
  CHECK(rep.p == 2);
  CHECK(rep.s == 1);
  CHECK(rep.q == 2);
  CHECK(std::string(rep.method) == "definition");
  CHECK(rep.modulus == 2);
  CHECK(rep.residue == 1);
  CHECK(rep.has_count == 1);
  CHECK(rep.count == 36);

  c2inv_c2_report auto_rep{};
  REQUIRE(c2inv_c2_compute(k4.g, 2, 2, nullptr, nullptr, &auto_rep) == C2INV_OK);
  CHECK(std::string(auto_rep.method) == "dodgson");
  CHECK(auto_rep.q == 4);
  CHECK(auto_rep.modulus == 4);
  CHECK(auto_rep.residue == 3);

  CHECK(c2inv_c2_compute(k4.g, 2, 1, "quickly", nullptr, &rep) ==
        C2INV_ERROR_INVALID_ARGUMENT);
  CHECK(c2inv_c2_compute(k4.g, 4, 1, nullptr, nullptr, &rep) ==
        C2INV_ERROR_INVALID_ARGUMENT);

  GraphHandle c7;
  REQUIRE(c2inv_graph_load("c7", &c7.g) == C2INV_OK);
  CHECK(c2inv_c2_compute(c7.g, 3, 2, "definition", nullptr, &rep) ==
        C2INV_ERROR_BUDGET);
  CHECK(std::string(c2inv_last_error()).find("evaluations") != std::string::npos);

  // Disconnected input: hypothesis failure, not a crash.
  GraphHandle split;
  REQUIRE(c2inv_graph_parse("a b\nc d\n", &split.g) == C2INV_OK);
  CHECK(c2inv_c2_compute(split.g, 2, 1, nullptr, nullptr, &rep) ==
        C2INV_ERROR_PRECONDITION);
}

TEST_CASE("verification suite") {
  c2inv_run_config cfg;
  c2inv_run_config_init(&cfg);
  cfg.workers = 2;
  char* lines = nullptr;
  uint32_t passed = 0, failed = 0, skipped = 0;
  REQUIRE(c2inv_verify("theorem1", &cfg, &lines, &passed, &failed, &skipped) ==
          C2INV_OK);
  CHECK(failed == 0);
  CHECK(passed > 0);

  std::istringstream in(take_string(lines));
  std::string line;
  std::size_t parsed = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    CHECK(j.contains("suite"));
    CHECK(j.contains("name"));
    CHECK(j.contains("status"));
    ++parsed;
  }
  CHECK(parsed == passed + failed + skipped);

  CHECK(c2inv_verify("everything", nullptr, nullptr, nullptr, nullptr, nullptr) ==
        C2INV_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("catalog through the interface") {
  char* json = nullptr;
  REQUIRE(c2inv_catalog_json(&json) == C2INV_OK);
  auto j = nlohmann::json::parse(take_string(json));
  REQUIRE(j.contains("entries"));
  REQUIRE(j.contains("census"));
  CHECK(j["entries"].size() == 3);
  CHECK(j["entries"][0]["name"] == "k4");
  for (const auto& e : j["entries"]) CHECK(e["runnable"] == true);
  for (const auto& n : j["census"]) CHECK(n["runnable"] == false);

  auto dir = std::filesystem::temp_directory_path() / "c2inv_capi_emit";
  std::filesystem::remove_all(dir);
  char* paths = nullptr;
  REQUIRE(c2inv_catalog_emit(dir.string().c_str(), &paths) == C2INV_OK);
  auto list = nlohmann::json::parse(take_string(paths));
  CHECK(list.size() == 3);
  for (const auto& p : list)
    CHECK(std::filesystem::exists(p.get<std::string>()));
  std::filesystem::remove_all(dir);
}

TEST_CASE("null arguments are rejected, not dereferenced") {
  CHECK(c2inv_graph_parse(nullptr, nullptr) == C2INV_ERROR_INVALID_ARGUMENT);
  CHECK(c2inv_graph_order(nullptr, nullptr, nullptr) ==
        C2INV_ERROR_INVALID_ARGUMENT);
  CHECK(c2inv_graph_spanning_tree_count(nullptr, nullptr) ==
        C2INV_ERROR_INVALID_ARGUMENT);
  CHECK(c2inv_kirchhoff_string(nullptr, nullptr) == C2INV_ERROR_INVALID_ARGUMENT);
  CHECK(c2inv_verify(nullptr, nullptr, nullptr, nullptr, nullptr, nullptr) ==
        C2INV_ERROR_INVALID_ARGUMENT);
  CHECK(c2inv_catalog_json(nullptr) == C2INV_ERROR_INVALID_ARGUMENT);
  c2inv_graph_free(nullptr);     // must be a no-op
  c2inv_string_free(nullptr);    // must be a no-op
  c2inv_run_config_init(nullptr);
}
