#ifndef C2INV_GRAPH_HPP
#define C2INV_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace c2inv {

using VertexId = std::uint32_t;  // index into the vertex list
using EdgeId = std::uint32_t;    // 1-based, frozen at construction

// Edge subsets as bitmasks: bit (id-1) set means edge id is in the set.
using EdgeSet = std::uint64_t;

// Enumeration routines (spanning trees, forests, monomial masks) require
// this many edges at most.
inline constexpr std::uint32_t kMaxEnumerableEdges = 31;

struct Edge {
  VertexId u, v;
};

// Undirected labeled graph.  Vertices are ordered by first appearance in the
// input, edges keep input order; both orders are part of the graph's
// identity and never change under queries.  "Smallest-labeled" always means
// smallest by lexicographic label comparison, not by vertex index.
class Graph {
public:
  Graph() = default;
  // require_simple rejects self-loops and parallel edges; minors may switch
  // it off.
  static Graph build(std::vector<std::string> labels, std::vector<Edge> edges,
                     bool require_simple);

  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(labels_.size()); }
  std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edges_.size()); }

  const std::string& label(VertexId v) const { return labels_[v]; }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<VertexId> vertex_by_label(std::string_view label) const;

  const Edge& edge(EdgeId id) const { return edges_[id - 1]; }
  std::span<const Edge> edges() const { return edges_; }

  bool is_simple() const { return simple_; }
  bool is_connected() const;
  std::uint32_t degree(VertexId v) const;  // loops count twice
  std::vector<EdgeId> incident_edges(VertexId v) const;  // ascending ids

  // The endpoint of edge id that is not v; the corner routines use it.
  VertexId opposite(EdgeId id, VertexId v) const;

  // Vertex of lexicographically smallest / largest label.
  VertexId min_label_vertex() const;
  VertexId max_label_vertex() const;

  std::string to_edge_list() const;

private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  bool simple_ = true;
};

// Parses "u v" per line; '#' starts a comment, blank lines are skipped.
// Rejects self-loops and repeated pairs with the offending line number.
Graph parse_edge_list(std::string_view text);

// Edge id translation for derived graphs; 0 marks a removed edge.
struct IdMap {
  std::vector<EdgeId> old_to_new;  // index = old id (entry 0 unused)
  std::vector<EdgeId> new_to_old;  // index = new id (entry 0 unused)
};

struct DeletionResult {
  Graph graph;
  IdMap ids;
  VertexId removed;  // vertex id in the source graph
};

// Removes one vertex and its incident edges; surviving edges keep their
// relative order and are renumbered 1..M.
DeletionResult remove_vertex(const Graph& g, VertexId v);
DeletionResult decompletion(const Graph& g, std::string_view vertex_label);

struct CompletionWitness {
  bool primitive_divergent = false;
  std::string reason;  // empty when the check passes
  Graph completion;    // populated when the degree profile admits one
  bool has_completion = false;
};

// A connected simple graph passes when adding one apex vertex adjacent to
// every vertex of degree < 4 (multiplicity 4 - deg) yields a simple
// 4-regular graph whose every bipartition with both sides of size >= 2 is
// crossed by at least 6 edges.
CompletionWitness is_primitive_divergent(const Graph& g);

struct ThreeValentCorner {
  VertexId v;             // the 3-valent vertex
  EdgeId e1, e2, e3;      // its incident edges, ascending ids
  VertexId a, b, c;       // opposite endpoints of e1, e2, e3
};

// Deterministic pick: smallest-labeled 3-valent vertex.  Errors when no
// vertex has degree 3 (the corner reduction hypothesis fails).
ThreeValentCorner find_three_valent(const Graph& g);
std::vector<ThreeValentCorner> all_three_valent_corners(const Graph& g);

// All spanning trees as edge masks, ascending mask order.  Empty when the
// graph is disconnected.
std::vector<EdgeSet> spanning_trees(const Graph& g);

// Disjoint, non-empty vertex classes.  Vertices not mentioned are
// unconstrained.
struct VertexPartition {
  std::vector<std::vector<VertexId>> parts;
};

VertexPartition partition_from_labels(
    const Graph& g, const std::vector<std::vector<std::string>>& label_parts);

// Spanning forests with exactly |parts| trees such that the trees are in
// bijection with the parts: each part's vertices lie in one tree and no tree
// meets two parts.  Masks in ascending order.  A partition into |V| parts
// admits only the empty forest (when each part is a singleton).
std::vector<EdgeSet> compatible_forests(const Graph& g, const VertexPartition& p);

struct MinorResult {
  Graph graph;
  IdMap ids;
  // vertex_map[old vertex] = vertex in the minor that absorbed it
  std::vector<VertexId> vertex_map;
};

// Deletes one edge set and contracts a disjoint one.  Contracting a cycle is
// an error.  The result may have loops or parallel edges; each contracted
// class keeps its lexicographically smallest label.
MinorResult minor(const Graph& g, EdgeSet delete_edges, EdgeSet contract_edges);

// Label-independent code: minimum adjacency bitstring over all vertex
// permutations.  Brute force, |V| <= 9.
std::uint64_t canonical_code(const Graph& g);

// Iterates k-subsets of {0,..,n-1} as masks in ascending order (n <= 63).
template <typename F>
void for_each_subset_mask(std::uint32_t n, std::uint32_t k, F&& body) {
  if (k > n) return;
  if (k == 0) {
    body(EdgeSet{0});
    return;
  }
  EdgeSet mask = (EdgeSet{1} << k) - 1;
  const EdgeSet limit = EdgeSet{1} << n;
  while (mask < limit) {
    body(mask);
    // Gosper's hack: next mask with the same popcount.
    EdgeSet c = mask & (~mask + 1);
    EdgeSet r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

}  // namespace c2inv

#endif
