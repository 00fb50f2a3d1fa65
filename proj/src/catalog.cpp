#include "catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

namespace c2inv {

Graph circulant(std::uint32_t n, std::span<const std::uint32_t> offsets) {
  if (n == 0) fail(ErrorCode::invalid_argument, "circulant needs vertices");
  std::vector<std::string> labels;
  for (std::uint32_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t o : offsets) {
      if (o == 0 || o % n == 0) fail(ErrorCode::invalid_argument, "offset is a loop");
      VertexId w = (v + o) % n;
      pairs.insert({std::min(v, w), std::max(v, w)});
    }
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph::build(std::move(labels), std::move(edges), true);
}

namespace {

// The 6-edge example graph: the complete graph on a, b, c, d with the edge
// order pinned so that ids 1..6 are ab, ac, bc, ad, cd, bd.
constexpr const char* kK4Edges =
    "a b\n"
    "a c\n"
    "b c\n"
    "a d\n"
    "c d\n"
    "b d\n";

CatalogEntry make_entry(std::string name, std::vector<std::string> aliases,
                        Graph decompletion, std::uint64_t expected_completion_code,
                        std::string note) {
  auto witness = is_primitive_divergent(decompletion);
  if (!witness.primitive_divergent)
    fail(ErrorCode::internal,
         "catalog entry " + name + " is not primitive-divergent: " + witness.reason);
  if (decompletion.edge_count() != 2 * (decompletion.vertex_count() - 1))
    fail(ErrorCode::internal, "catalog entry " + name + " has the wrong edge count");
  find_three_valent(decompletion);  // throws when no corner exists
  if (canonical_code(witness.completion) != expected_completion_code)
    fail(ErrorCode::internal,
         "catalog entry " + name + " does not complete to the recorded graph");
  CatalogEntry e;
  e.name = std::move(name);
  e.aliases = std::move(aliases);
  e.graph = std::move(decompletion);
  e.completion = std::move(witness.completion);
  e.note = std::move(note);
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  const std::uint32_t off12[] = {1, 2};

  Graph k5 = circulant(5, off12);
  out.push_back(make_entry(
      "k4", {}, parse_edge_list(kK4Edges), canonical_code(k5),
      "complete graph on four vertices; completes to the complete graph on five"));

  Graph c6 = circulant(6, off12);
  out.push_back(make_entry(
      "oct", {"oct_decomp"}, decompletion(c6, "5").graph, canonical_code(c6),
      "octahedron (the 6-vertex circulant with offsets 1,2) minus one vertex"));

  Graph c7 = circulant(7, off12);
  out.push_back(make_entry(
      "c7", {"c7_12_decomp"}, decompletion(c7, "6").graph, canonical_code(c7),
      "7-vertex circulant with offsets 1,2, minus one vertex"));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* catalog_find(std::string_view name_or_alias) {
  for (const CatalogEntry& e : catalog()) {
    if (e.name == name_or_alias) return &e;
    if (std::find(e.aliases.begin(), e.aliases.end(), name_or_alias) !=
        e.aliases.end())
      return &e;
  }
  return nullptr;
}

const std::vector<CensusNote>& documented_census() {
  static const std::vector<CensusNote> notes = {
      {"p_8_36", 1, 1,
       "recorded reference values; the edge list is not bundled and the point"
       " counts sit outside desk-scale budgets, so this build never runs it"},
      {"p_8_37", 1, 7,
       "recorded reference values; same no-run status as p_8_36 (7 is -1 mod 8,"
       " so the two graphs differ at q = 8 while agreeing at q = 2)"},
  };
  return notes;
}

Graph load_graph(const std::string& name_or_path) {
  if (const CatalogEntry* e = catalog_find(name_or_path)) return e->graph;
  std::ifstream in(name_or_path);
  if (!in)
    fail(ErrorCode::invalid_argument,
         "'" + name_or_path + "' is neither a catalog name nor a readable file");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_edge_list(text);
}

std::vector<std::string> emit_catalog(const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  for (const CatalogEntry& e : catalog()) {
    std::filesystem::path path = std::filesystem::path(dir) / (e.name + ".edges");
    std::ofstream out(path);
    if (!out) fail(ErrorCode::invalid_argument, "cannot write " + path.string());
    out << "# " << e.name << ": " << e.note << "\n" << e.graph.to_edge_list();
    written.push_back(path.string());
  }
  return written;
}

}  // namespace c2inv
