#include "c2inv/c2inv.h"

#include <cstdio>
#include <cstring>
#include <new>
#include <string>

#include "catalog.hpp"
#include "coeff.hpp"
#include "config.hpp"
#include "counting.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "poly.hpp"
#include "report.hpp"
#include "verify.hpp"

struct c2inv_graph {
  c2inv::Graph g;
};

namespace {

thread_local std::string g_last_error = "no error";

c2inv_status status_of(c2inv::ErrorCode code) {
  switch (code) {
    case c2inv::ErrorCode::invalid_argument: return C2INV_ERROR_INVALID_ARGUMENT;
    case c2inv::ErrorCode::parse: return C2INV_ERROR_PARSE;
    case c2inv::ErrorCode::precondition: return C2INV_ERROR_PRECONDITION;
    case c2inv::ErrorCode::budget: return C2INV_ERROR_BUDGET;
    case c2inv::ErrorCode::internal: return C2INV_ERROR_INTERNAL;
  }
  return C2INV_ERROR_INTERNAL;
}

// Runs the body, translating exceptions into status codes.
template <typename F>
c2inv_status guarded(F&& body) {
  try {
    body();
    return C2INV_OK;
  } catch (const c2inv::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return C2INV_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return C2INV_ERROR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

c2inv_status require(bool cond, const char* msg) {
  if (cond) return C2INV_OK;
  g_last_error = msg;
  return C2INV_ERROR_INVALID_ARGUMENT;
}

c2inv::RunConfig config_of(const c2inv_run_config* cfg) {
  c2inv::RunConfig out;
  if (!cfg) return out;
  if (cfg->budget_evaluations) out.budget_evaluations = cfg->budget_evaluations;
  if (cfg->budget_states) out.budget_states = cfg->budget_states;
  out.seed = cfg->seed;
  out.workers = cfg->workers;
  return out;
}

// "a b | c" -> {{a,b},{c}}
c2inv::VertexPartition parse_partition(const c2inv::Graph& g, const char* text) {
  std::vector<std::vector<std::string>> parts(1);
  std::string token;
  for (const char* c = text;; ++c) {
    if (*c == '\0' || *c == '|' || *c == ' ' || *c == '\t') {
      if (!token.empty()) {
        parts.back().push_back(token);
        token.clear();
      }
      if (*c == '|') parts.emplace_back();
      if (*c == '\0') break;
    } else {
      token += *c;
    }
  }
  return c2inv::partition_from_labels(g, parts);
}

}  // namespace

extern "C" {

const char* c2inv_version(void) { return "1.0.0"; }

const char* c2inv_status_name(c2inv_status status) {
  switch (status) {
    case C2INV_OK: return "ok";
    case C2INV_ERROR_INVALID_ARGUMENT: return "invalid_argument";
    case C2INV_ERROR_PARSE: return "parse_error";
    case C2INV_ERROR_PRECONDITION: return "precondition_failed";
    case C2INV_ERROR_BUDGET: return "budget_exceeded";
    case C2INV_ERROR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* c2inv_last_error(void) { return g_last_error.c_str(); }

void c2inv_string_free(char* s) { delete[] s; }

c2inv_status c2inv_graph_parse(const char* text, c2inv_graph** out) {
  if (auto st = require(text && out, "text and out must be non-null")) return st;
  return guarded([&] { *out = new c2inv_graph{c2inv::parse_edge_list(text)}; });
}

c2inv_status c2inv_graph_load(const char* name_or_path, c2inv_graph** out) {
  if (auto st = require(name_or_path && out, "name and out must be non-null"))
    return st;
  return guarded([&] { *out = new c2inv_graph{c2inv::load_graph(name_or_path)}; });
}

void c2inv_graph_free(c2inv_graph* g) { delete g; }

c2inv_status c2inv_graph_order(const c2inv_graph* g, uint32_t* vertices,
                               uint32_t* edges) {
  if (auto st = require(g != nullptr, "graph must be non-null")) return st;
  if (vertices) *vertices = g->g.vertex_count();
  if (edges) *edges = g->g.edge_count();
  return C2INV_OK;
}

c2inv_status c2inv_graph_primitive_divergent(const c2inv_graph* g,
                                             int32_t* result, char** reason) {
  if (auto st = require(g && result, "graph and result must be non-null"))
    return st;
  return guarded([&] {
    auto witness = c2inv::is_primitive_divergent(g->g);
    *result = witness.primitive_divergent ? 1 : 0;
    if (reason) *reason = copy_string(witness.reason);
  });
}

c2inv_status c2inv_graph_spanning_tree_count(const c2inv_graph* g,
                                             uint64_t* count) {
  if (auto st = require(g && count, "graph and count must be non-null")) return st;
  return guarded([&] { *count = c2inv::spanning_trees(g->g).size(); });
}

c2inv_status c2inv_kirchhoff_string(const c2inv_graph* g, char** out) {
  if (auto st = require(g && out, "graph and out must be non-null")) return st;
  return guarded([&] { *out = copy_string(c2inv::kirchhoff(g->g).to_string()); });
}

c2inv_status c2inv_forest_poly_string(const c2inv_graph* g, const char* partition,
                                      char** out) {
  if (auto st = require(g && partition && out,
                        "graph, partition and out must be non-null"))
    return st;
  return guarded([&] {
    auto part = parse_partition(g->g, partition);
    *out = copy_string(c2inv::forest_poly(g->g, part).to_string());
  });
}

void c2inv_run_config_init(c2inv_run_config* cfg) {
  if (!cfg) return;
  c2inv::RunConfig defaults;
  cfg->budget_evaluations = defaults.budget_evaluations;
  cfg->budget_states = defaults.budget_states;
  cfg->seed = defaults.seed;
  cfg->workers = defaults.workers;
}

c2inv_status c2inv_c2_compute(const c2inv_graph* g, uint32_t p, uint32_t s,
                              const char* method, const c2inv_run_config* cfg,
                              c2inv_c2_report* out) {
  if (auto st = require(g && out, "graph and out must be non-null")) return st;
  return guarded([&] {
    auto pp = c2inv::PrimePower::make(p, s);
    auto m = c2inv::method_from_name(method ? method : "auto");
    auto report = c2inv::compute_c2(g->g, "graph", pp, m, config_of(cfg));
    out->p = report.p;
    out->s = report.s;
    out->q = report.q;
    std::snprintf(out->method, sizeof(out->method), "%s", report.method.c_str());
    out->modulus = report.modulus;
    out->residue = report.value;
    out->has_count = report.count.has_value() ? 1 : 0;
    out->count = report.count.value_or(0);
    out->runtime_ms = report.runtime_ms;
  });
}

c2inv_status c2inv_verify(const char* suite, const c2inv_run_config* cfg,
                          char** json_lines, uint32_t* passed, uint32_t* failed,
                          uint32_t* skipped) {
  if (auto st = require(suite != nullptr, "suite must be non-null")) return st;
  return guarded([&] {
    auto results = c2inv::run_suite(c2inv::suite_from_name(suite), config_of(cfg));
    auto summary = c2inv::summarize(results);
    if (json_lines) *json_lines = copy_string(c2inv::check_results_to_lines(results));
    if (passed) *passed = static_cast<uint32_t>(summary.passed);
    if (failed) *failed = static_cast<uint32_t>(summary.failed);
    if (skipped) *skipped = static_cast<uint32_t>(summary.skipped);
  });
}

c2inv_status c2inv_catalog_json(char** json) {
  if (auto st = require(json != nullptr, "json must be non-null")) return st;
  return guarded([&] { *json = copy_string(c2inv::catalog_to_json().dump(2)); });
}

c2inv_status c2inv_catalog_emit(const char* dir, char** json_paths) {
  if (auto st = require(dir != nullptr, "dir must be non-null")) return st;
  return guarded([&] {
    auto written = c2inv::emit_catalog(dir);
    if (json_paths) *json_paths = copy_string(nlohmann::json(written).dump());
  });
}

}  // extern "C"
