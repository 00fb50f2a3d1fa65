// Command-line front end; talks to the library through the C interface.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "c2inv/c2inv.h"

namespace {

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { c2inv_string_free(s); }
};

struct GraphGuard {
  c2inv_graph* g = nullptr;
  ~GraphGuard() { c2inv_graph_free(g); }
};

int exit_code_of(c2inv_status st) {
  switch (st) {
    case C2INV_OK: return 0;
    case C2INV_ERROR_INVALID_ARGUMENT:
    case C2INV_ERROR_PARSE: return 2;
    case C2INV_ERROR_PRECONDITION: return 3;
    case C2INV_ERROR_BUDGET: return 4;
    case C2INV_ERROR_INTERNAL: return 5;
  }
  return 5;
}

int report_failure(c2inv_status st) {
  std::cerr << "error (" << c2inv_status_name(st) << "): " << c2inv_last_error()
            << "\n";
  return exit_code_of(st);
}

void write_out(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) {
    std::cerr << "error: cannot write " << output_path << "\n";
    std::exit(2);
  }
  out << text;
}

struct CommonOpts {
  std::string format = "table";
  std::string output;
  c2inv_run_config cfg{};
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  c2inv_run_config_init(&opts.cfg);
  cmd->add_option("--format", opts.format, "Output format: table or json")
      ->check(CLI::IsMember({"table", "json"}))
      ->envname("C2INV_FORMAT");
  cmd->add_option("--output", opts.output, "Write the report to a file")
      ->envname("C2INV_OUTPUT");
  cmd->add_option("--budget-evals", opts.cfg.budget_evaluations,
                  "Maximum point evaluations per exhaustive count")
      ->envname("C2INV_BUDGET_EVALS");
  cmd->add_option("--budget-states", opts.cfg.budget_states,
                  "Maximum cells in a capped coefficient array")
      ->envname("C2INV_BUDGET_STATES");
  cmd->add_option("--seed", opts.cfg.seed, "Seed for the randomized checks")
      ->envname("C2INV_SEED");
  cmd->add_option("--workers", opts.cfg.workers,
                  "Worker threads for point counting (0 = hardware)")
      ->envname("C2INV_WORKERS");
}

nlohmann::json report_json(const std::string& graph, const c2inv_c2_report& r,
                           uint64_t seed) {
  nlohmann::json j{
      {"graph", graph},       {"p", r.p},
      {"s", r.s},             {"q", r.q},
      {"method", r.method},   {"residue", r.residue},
      {"modulus", r.modulus}, {"runtime_ms", r.runtime_ms},
      {"seed", seed},
  };
  if (r.has_count) j["count"] = r.count;
  else j["count"] = nullptr;
  return j;
}

int run_c2(const std::string& graph, uint32_t p, uint32_t s,
           const std::string& method, const CommonOpts& opts) {
  GraphGuard g;
  if (auto st = c2inv_graph_load(graph.c_str(), &g.g)) return report_failure(st);
  c2inv_c2_report rep{};
  if (auto st = c2inv_c2_compute(g.g, p, s, method.c_str(), &opts.cfg, &rep))
    return report_failure(st);

  if (opts.format == "json") {
    write_out(report_json(graph, rep, opts.cfg.seed).dump() + "\n", opts.output);
    return 0;
  }
  std::ostringstream out;
  out << "graph      " << graph << "\n"
      << "field      q = " << rep.q << " (p = " << rep.p << ", s = " << rep.s
      << ")\n"
      << "method     " << rep.method << "\n"
      << "residue    " << rep.residue << " (mod " << rep.modulus << ")";
  if (rep.modulus != rep.q)
    out << "  [this method determines the residue only mod p]";
  out << "\n";
  if (rep.has_count) out << "count      " << rep.count << "\n";
  out << "runtime_ms " << rep.runtime_ms << "\n";
  write_out(out.str(), opts.output);
  return 0;
}

int run_verify(const std::string& suite, const CommonOpts& opts) {
  StringGuard lines;
  uint32_t passed = 0, failed = 0, skipped = 0;
  if (auto st = c2inv_verify(suite.c_str(), &opts.cfg, &lines.s, &passed, &failed,
                             &skipped))
    return report_failure(st);

  if (opts.format == "json") {
    write_out(lines.s, opts.output);
  } else {
    std::ostringstream out;
    std::istringstream in(lines.s);
    std::string line;
    while (std::getline(in, line)) {
      auto j = nlohmann::json::parse(line);
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%-7s %-40s %s\n",
                    j["status"].get<std::string>().c_str(),
                    j["name"].get<std::string>().c_str(),
                    j["detail"].get<std::string>().c_str());
      out << buf;
    }
    out << "suite " << suite << ": " << passed << " passed, " << failed
        << " failed, " << skipped << " skipped (seed " << opts.cfg.seed << ")\n";
    write_out(out.str(), opts.output);
  }
  return failed == 0 ? 0 : 1;
}

int run_catalog(const std::string& emit_dir, const CommonOpts& opts) {
  if (!emit_dir.empty()) {
    StringGuard paths;
    if (auto st = c2inv_catalog_emit(emit_dir.c_str(), &paths.s))
      return report_failure(st);
    for (const auto& p : nlohmann::json::parse(paths.s))
      std::cout << "wrote " << p.get<std::string>() << "\n";
    return 0;
  }
  StringGuard json;
  if (auto st = c2inv_catalog_json(&json.s)) return report_failure(st);
  if (opts.format == "json") {
    write_out(std::string(json.s) + "\n", opts.output);
    return 0;
  }
  auto j = nlohmann::json::parse(json.s);
  std::ostringstream out;
  for (const auto& e : j["entries"]) {
    out << e["name"].get<std::string>();
    for (const auto& a : e["aliases"]) out << " (alias " << a.get<std::string>() << ")";
    out << ": " << e["vertices"] << " vertices, " << e["edges"] << " edges. "
        << e["note"].get<std::string>() << "\n";
  }
  for (const auto& n : j["census"]) {
    out << n["name"].get<std::string>() << " [no-run]: residue " << n["c2_mod_2"]
        << " at q=2, " << n["c2_mod_8"] << " at q=8. "
        << n["note"].get<std::string>() << "\n";
  }
  write_out(out.str(), opts.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact c2 residues of small graphs over prime-power fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(c2inv_version()));

  CommonOpts c2_opts, verify_opts, catalog_opts;
  std::string graph, method = "auto", suite, emit_dir;
  uint32_t p = 0, s = 1;

  CLI::App* c2_cmd = app.add_subcommand("c2", "Compute one c2 residue");
  c2_cmd->add_option("--graph", graph, "Catalog name or edge-list file")
      ->required();
  c2_cmd->add_option("--p", p, "Field characteristic (prime)")->required();
  c2_cmd->add_option("--s", s, "Prime-power exponent, q = p^s");
  c2_cmd->add_option("--method", method,
                     "auto, definition, dodgson, coefficient or partition")
      ->envname("C2INV_METHOD");
  add_common(c2_cmd, c2_opts);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite, "lemmas, prop, theorem1 or all")
      ->required()
      ->check(CLI::IsMember({"lemmas", "prop", "theorem1", "all"}));
  add_common(verify_cmd, verify_opts);

  CLI::App* catalog_cmd =
      app.add_subcommand("catalog", "List or export the bundled graphs");
  catalog_cmd->add_option("--emit-dir", emit_dir,
                          "Write one edge-list file per entry to this directory");
  add_common(catalog_cmd, catalog_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (c2_cmd->parsed()) return run_c2(graph, p, s, method, c2_opts);
  if (verify_cmd->parsed()) return run_verify(suite, verify_opts);
  return run_catalog(emit_dir, catalog_opts);
}
