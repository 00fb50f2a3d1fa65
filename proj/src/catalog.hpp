#ifndef C2INV_CATALOG_HPP
#define C2INV_CATALOG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace c2inv {

// A worked example: a primitive-divergent decompletion together with the
// 4-regular completion it came from.
struct CatalogEntry {
  std::string name;
  std::vector<std::string> aliases;
  Graph graph;       // the decompletion computations run on
  Graph completion;  // simple, 4-regular, internally 6-edge-connected
  std::string note;
};

// Entries are validated once on first use: primitive divergence, the
// |E| = 2(|V|-1) edge count, the existence of a 3-valent corner, and that
// completing the decompletion reproduces the recorded completion up to
// isomorphism.  Validation failure is an internal error.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* catalog_find(std::string_view name_or_alias);

// Reference residues recorded for two census graphs whose edge lists are
// not bundled here; listed for documentation, never recomputed (their point
// counts sit far outside the desk-scale budgets).
struct CensusNote {
  std::string name;
  std::uint32_t c2_mod_2;
  std::uint32_t c2_mod_8;  // residue at q = 8, canonical representative
  std::string note;
};
const std::vector<CensusNote>& documented_census();

// Circulant graph on n vertices labeled "0".."n-1": i adjacent to i +- o
// for each offset o; edges listed in sorted pair order.
Graph circulant(std::uint32_t n, std::span<const std::uint32_t> offsets);

// Catalog name, alias, or a path to an edge-list file.
Graph load_graph(const std::string& name_or_path);

// Writes <name>.edges for every entry; returns the file paths.
std::vector<std::string> emit_catalog(const std::string& dir);

}  // namespace c2inv

#endif
