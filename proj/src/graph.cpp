#include "graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace c2inv {

namespace {

// Union-find over a small fixed vertex range.
struct Dsu {
  explicit Dsu(std::uint32_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false when x and y were already joined.
  bool unite(std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[y] = x;
    return true;
  }
  std::vector<std::uint32_t> parent;
};

void check_enumerable(const Graph& g, const char* what) {
  if (g.edge_count() > kMaxEnumerableEdges)
    fail(ErrorCode::precondition,
         std::string(what) + " needs at most " +
             std::to_string(kMaxEnumerableEdges) + " edges, got " +
             std::to_string(g.edge_count()));
}

}  // namespace

Graph Graph::build(std::vector<std::string> labels, std::vector<Edge> edges,
                   bool require_simple) {
  Graph g;
  g.labels_ = std::move(labels);
  g.edges_ = std::move(edges);
  g.simple_ = true;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : g.edges_) {
    if (e.u >= g.labels_.size() || e.v >= g.labels_.size())
      fail(ErrorCode::invalid_argument, "edge endpoint out of range");
    if (e.u == e.v) g.simple_ = false;
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert({key.first, key.second}).second) g.simple_ = false;
  }
  if (require_simple && !g.simple_)
    fail(ErrorCode::invalid_argument, "graph has a loop or parallel edge");
  std::set<std::string_view> label_set;
  for (const std::string& l : g.labels_) {
    if (l.empty()) fail(ErrorCode::invalid_argument, "empty vertex label");
    if (!label_set.insert(l).second)
      fail(ErrorCode::invalid_argument, "duplicate vertex label: " + l);
  }
  return g;
}

std::optional<VertexId> Graph::vertex_by_label(std::string_view label) const {
  for (VertexId v = 0; v < labels_.size(); ++v)
    if (labels_[v] == label) return v;
  return std::nullopt;
}

bool Graph::is_connected() const {
  if (labels_.empty()) return true;
  std::vector<char> seen(labels_.size(), 0);
  std::vector<VertexId> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const Edge& e : edges_) {
      VertexId w;
      if (e.u == v) w = e.v;
      else if (e.v == v) w = e.u;
      else continue;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::uint32_t Graph::degree(VertexId v) const {
  std::uint32_t d = 0;
  for (const Edge& e : edges_) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;
  }
  return d;
}

std::vector<EdgeId> Graph::incident_edges(VertexId v) const {
  std::vector<EdgeId> out;
  for (EdgeId id = 1; id <= edges_.size(); ++id)
    if (edges_[id - 1].u == v || edges_[id - 1].v == v) out.push_back(id);
  return out;
}

VertexId Graph::opposite(EdgeId id, VertexId v) const {
  const Edge& e = edge(id);
  if (e.u == v) return e.v;
  if (e.v == v) return e.u;
  fail(ErrorCode::invalid_argument, "edge " + std::to_string(id) +
                                        " is not incident to vertex " + label(v));
}

VertexId Graph::min_label_vertex() const {
  if (labels_.empty()) fail(ErrorCode::precondition, "graph has no vertices");
  VertexId best = 0;
  for (VertexId v = 1; v < labels_.size(); ++v)
    if (labels_[v] < labels_[best]) best = v;
  return best;
}

VertexId Graph::max_label_vertex() const {
  if (labels_.empty()) fail(ErrorCode::precondition, "graph has no vertices");
  VertexId best = 0;
  for (VertexId v = 1; v < labels_.size(); ++v)
    if (labels_[v] > labels_[best]) best = v;
  return best;
}

std::string Graph::to_edge_list() const {
  std::ostringstream out;
  for (const Edge& e : edges_) out << labels_[e.u] << ' ' << labels_[e.v] << '\n';
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  std::vector<Edge> edges;
  std::set<std::pair<VertexId, VertexId>> seen;

  auto intern = [&](const std::string& label) {
    auto it = index.find(label);
    if (it != index.end()) return it->second;
    VertexId v = static_cast<VertexId>(labels.size());
    labels.push_back(label);
    index.emplace(label, v);
    return v;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::uint32_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;  // blank or comment-only
    if (!(ls >> b) || (ls >> extra))
      fail(ErrorCode::parse, "line " + std::to_string(lineno) +
                                 ": expected exactly two vertex labels");
    VertexId u = intern(a), v = intern(b);
    if (u == v)
      fail(ErrorCode::parse, "line " + std::to_string(lineno) + ": self-loop at " + a);
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second)
      fail(ErrorCode::parse,
           "line " + std::to_string(lineno) + ": repeated edge " + a + " " + b);
    edges.push_back({u, v});
  }
  return Graph::build(std::move(labels), std::move(edges), true);
}

DeletionResult remove_vertex(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) fail(ErrorCode::invalid_argument, "no such vertex");
  std::vector<std::string> labels;
  std::vector<VertexId> vmap(g.vertex_count());
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    if (w == v) continue;
    vmap[w] = static_cast<VertexId>(labels.size());
    labels.push_back(g.label(w));
  }
  DeletionResult out;
  out.removed = v;
  out.ids.old_to_new.assign(g.edge_count() + 1, 0);
  out.ids.new_to_old.push_back(0);
  std::vector<Edge> edges;
  for (EdgeId id = 1; id <= g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (e.u == v || e.v == v) continue;
    edges.push_back({vmap[e.u], vmap[e.v]});
    out.ids.old_to_new[id] = static_cast<EdgeId>(edges.size());
    out.ids.new_to_old.push_back(id);
  }
  out.graph = Graph::build(std::move(labels), std::move(edges), false);
  return out;
}

DeletionResult decompletion(const Graph& g, std::string_view vertex_label) {
  auto v = g.vertex_by_label(vertex_label);
  if (!v)
    fail(ErrorCode::invalid_argument,
         "no vertex labeled '" + std::string(vertex_label) + "'");
  return remove_vertex(g, *v);
}

CompletionWitness is_primitive_divergent(const Graph& g) {
  if (!g.is_simple())
    fail(ErrorCode::invalid_argument, "divergence check expects a simple graph");
  if (!g.is_connected())
    fail(ErrorCode::precondition, "divergence check expects a connected graph");
  CompletionWitness w;
  const std::uint32_t n = g.vertex_count();
  if (n + 1 > 20)
    fail(ErrorCode::precondition, "cut enumeration is limited to 19 vertices");
  std::uint32_t deficient = 0;
  for (VertexId v = 0; v < n; ++v) {
    std::uint32_t d = g.degree(v);
    if (d > 4) {
      w.reason = "vertex " + g.label(v) + " has degree " + std::to_string(d);
      return w;
    }
    if (d <= 2) {
      // The apex would need multiple edges to v.
      w.reason = "vertex " + g.label(v) + " has degree " + std::to_string(d) +
                 "; the completion would not be simple";
      return w;
    }
    if (d == 3) ++deficient;
  }
  if (deficient != 4) {
    w.reason = "apex degree would be " + std::to_string(deficient) +
               ", not 4";
    return w;
  }

  // Build the completion: one apex adjacent to every 3-valent vertex.
  std::string apex = "apex";
  while (g.vertex_by_label(apex)) apex += "_";
  std::vector<std::string> labels(g.labels().begin(), g.labels().end());
  labels.push_back(apex);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (VertexId v = 0; v < n; ++v)
    if (g.degree(v) == 3) edges.push_back({v, n});
  w.completion = Graph::build(std::move(labels), std::move(edges), true);
  w.has_completion = true;

  // Internal 6-edge-connectivity: every bipartition with both sides of size
  // >= 2 crosses at least 6 edges.  Masks containing vertex 0 enumerate each
  // bipartition once.
  const std::uint32_t m = n + 1;
  for (std::uint32_t mask = 1; mask < (1u << m); mask += 2) {
    std::uint32_t size = std::popcount(mask);
    if (size < 2 || m - size < 2) continue;
    std::uint32_t cut = 0;
    for (const Edge& e : w.completion.edges())
      cut += ((mask >> e.u) ^ (mask >> e.v)) & 1u;
    if (cut < 6) {
      std::string side;
      for (VertexId v = 0; v < m; ++v)
        if (mask & (1u << v)) side += (side.empty() ? "" : ",") + w.completion.label(v);
      w.reason = "completion has a " + std::to_string(cut) +
                 "-edge cut separating {" + side + "}";
      return w;
    }
  }
  w.primitive_divergent = true;
  return w;
}

std::vector<ThreeValentCorner> all_three_valent_corners(const Graph& g) {
  std::vector<VertexId> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return g.label(a) < g.label(b); });
  std::vector<ThreeValentCorner> out;
  for (VertexId v : order) {
    if (g.degree(v) != 3) continue;
    auto inc = g.incident_edges(v);
    assert(inc.size() == 3);
    out.push_back({v, inc[0], inc[1], inc[2], g.opposite(inc[0], v),
                   g.opposite(inc[1], v), g.opposite(inc[2], v)});
  }
  return out;
}

ThreeValentCorner find_three_valent(const Graph& g) {
  auto corners = all_three_valent_corners(g);
  if (corners.empty())
    fail(ErrorCode::precondition,
         "no 3-valent vertex: the corner reduction does not apply");
  return corners.front();
}

std::vector<EdgeSet> spanning_trees(const Graph& g) {
  check_enumerable(g, "spanning tree enumeration");
  const std::uint32_t n = g.vertex_count();
  std::vector<EdgeSet> out;
  if (n == 0) return out;
  if (n == 1) return {EdgeSet{0}};
  for_each_subset_mask(g.edge_count(), n - 1, [&](EdgeSet mask) {
    Dsu dsu(n);
    for (EdgeId id = 1; id <= g.edge_count(); ++id) {
      if (!(mask & (EdgeSet{1} << (id - 1)))) continue;
      const Edge& e = g.edge(id);
      if (e.u == e.v || !dsu.unite(e.u, e.v)) return;  // cycle
    }
    out.push_back(mask);  // n-1 acyclic edges on n vertices span
  });
  return out;
}

VertexPartition partition_from_labels(
    const Graph& g, const std::vector<std::vector<std::string>>& label_parts) {
  VertexPartition p;
  std::set<VertexId> used;
  for (const auto& part : label_parts) {
    if (part.empty()) fail(ErrorCode::invalid_argument, "empty partition part");
    std::vector<VertexId> ids;
    for (const std::string& l : part) {
      auto v = g.vertex_by_label(l);
      if (!v) fail(ErrorCode::invalid_argument, "no vertex labeled '" + l + "'");
      if (!used.insert(*v).second)
        fail(ErrorCode::invalid_argument, "vertex '" + l + "' in two parts");
      ids.push_back(*v);
    }
    p.parts.push_back(std::move(ids));
  }
  if (p.parts.empty()) fail(ErrorCode::invalid_argument, "partition has no parts");
  return p;
}

std::vector<EdgeSet> compatible_forests(const Graph& g, const VertexPartition& p) {
  check_enumerable(g, "forest enumeration");
  const std::uint32_t n = g.vertex_count();
  std::vector<std::int32_t> part_of(n, -1);
  std::set<VertexId> used;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (p.parts[i].empty()) fail(ErrorCode::invalid_argument, "empty partition part");
    for (VertexId v : p.parts[i]) {
      if (v >= n) fail(ErrorCode::invalid_argument, "partition vertex out of range");
      if (!used.insert(v).second)
        fail(ErrorCode::invalid_argument, "vertex in two parts");
      part_of[v] = static_cast<std::int32_t>(i);
    }
  }
  const std::uint32_t k = static_cast<std::uint32_t>(p.parts.size());
  if (k == 0) fail(ErrorCode::invalid_argument, "partition has no parts");
  std::vector<EdgeSet> out;
  if (k > n) return out;
  for_each_subset_mask(g.edge_count(), n - k, [&](EdgeSet mask) {
    Dsu dsu(n);
    for (EdgeId id = 1; id <= g.edge_count(); ++id) {
      if (!(mask & (EdgeSet{1} << (id - 1)))) continue;
      const Edge& e = g.edge(id);
      if (e.u == e.v || !dsu.unite(e.u, e.v)) return;  // cycle
    }
    // n-k acyclic edges give exactly k trees; check the part <-> tree match:
    // vertices of one part share a tree, distinct parts use distinct trees.
    std::map<std::uint32_t, std::int32_t> root_part;
    for (VertexId v = 0; v < n; ++v) {
      if (part_of[v] < 0) continue;
      std::uint32_t root = dsu.find(v);
      auto [it, inserted] = root_part.emplace(root, part_of[v]);
      if (!inserted && it->second != part_of[v]) return;  // two parts, one tree
    }
    if (root_part.size() != k) return;  // one part split over two trees
    out.push_back(mask);
  });
  return out;
}

MinorResult minor(const Graph& g, EdgeSet delete_edges, EdgeSet contract_edges) {
  const std::uint32_t m = g.edge_count();
  const EdgeSet all = m == 0 ? 0 : ((EdgeSet{1} << m) - 1);
  if ((delete_edges | contract_edges) & ~all)
    fail(ErrorCode::invalid_argument, "edge mask references a missing edge");
  if (delete_edges & contract_edges)
    fail(ErrorCode::invalid_argument, "an edge cannot be deleted and contracted");

  Dsu dsu(g.vertex_count());
  for (EdgeId id = 1; id <= m; ++id) {
    if (!(contract_edges & (EdgeSet{1} << (id - 1)))) continue;
    const Edge& e = g.edge(id);
    if (e.u == e.v || !dsu.unite(e.u, e.v))
      fail(ErrorCode::precondition, "contracted edges contain a cycle");
  }

  // One vertex per class, ordered by the class's first member; the class
  // label is its lexicographically smallest member label.
  MinorResult out;
  out.vertex_map.assign(g.vertex_count(), 0);
  std::vector<std::string> labels;
  std::map<std::uint32_t, VertexId> root_to_new;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::uint32_t root = dsu.find(v);
    auto it = root_to_new.find(root);
    if (it == root_to_new.end()) {
      VertexId nv = static_cast<VertexId>(labels.size());
      root_to_new.emplace(root, nv);
      labels.push_back(g.label(v));
      out.vertex_map[v] = nv;
    } else {
      out.vertex_map[v] = it->second;
      if (g.label(v) < labels[it->second]) labels[it->second] = g.label(v);
    }
  }

  out.ids.old_to_new.assign(m + 1, 0);
  out.ids.new_to_old.push_back(0);
  std::vector<Edge> edges;
  for (EdgeId id = 1; id <= m; ++id) {
    if ((delete_edges | contract_edges) & (EdgeSet{1} << (id - 1))) continue;
    const Edge& e = g.edge(id);
    edges.push_back({out.vertex_map[e.u], out.vertex_map[e.v]});
    out.ids.old_to_new[id] = static_cast<EdgeId>(edges.size());
    out.ids.new_to_old.push_back(id);
  }
  out.graph = Graph::build(std::move(labels), std::move(edges), false);
  return out;
}

std::uint64_t canonical_code(const Graph& g) {
  if (!g.is_simple())
    fail(ErrorCode::invalid_argument, "canonical code expects a simple graph");
  const std::uint32_t n = g.vertex_count();
  if (n > 9) fail(ErrorCode::precondition, "canonical code is limited to 9 vertices");
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j)
        code = (code << 1) | static_cast<std::uint64_t>(adj[perm[i]][perm[j]]);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0 ? 0 : best;
}

}  // namespace c2inv
