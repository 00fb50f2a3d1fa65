#include "poly.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <set>
#include <sstream>

namespace c2inv {

std::optional<std::uint32_t> MultilinearPoly::degree() const {
  if (monomials.empty()) return std::nullopt;
  std::uint32_t d = 0;
  for (EdgeSet m : monomials)
    d = std::max<std::uint32_t>(d, std::popcount(m));
  return d;
}

bool MultilinearPoly::contains_var(std::uint32_t var) const {
  assert(var >= 1 && var <= num_vars);
  const EdgeSet bit = EdgeSet{1} << (var - 1);
  return std::any_of(monomials.begin(), monomials.end(),
                     [bit](EdgeSet m) { return (m & bit) != 0; });
}

std::string MultilinearPoly::to_string() const {
  if (monomials.empty()) return "0";
  // Canonical term order: lexicographic by the ascending variable tuple.
  std::vector<std::vector<std::uint32_t>> tuples;
  tuples.reserve(monomials.size());
  for (EdgeSet m : monomials) {
    std::vector<std::uint32_t> t;
    for (std::uint32_t v = 1; v <= num_vars; ++v)
      if (m & (EdgeSet{1} << (v - 1))) t.push_back(v);
    tuples.push_back(std::move(t));
  }
  std::sort(tuples.begin(), tuples.end());
  std::ostringstream out;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (i) out << " + ";
    if (tuples[i].empty()) {
      out << "1";
      continue;
    }
    for (std::size_t j = 0; j < tuples[i].size(); ++j) {
      if (j) out << "*";
      out << "a" << tuples[i][j];
    }
  }
  return out.str();
}

namespace {

MultilinearPoly complements_of(const Graph& g, std::vector<EdgeSet> subsets) {
  const std::uint32_t m = g.edge_count();
  const EdgeSet all = m == 0 ? 0 : ((EdgeSet{1} << m) - 1);
  MultilinearPoly f;
  f.num_vars = m;
  f.monomials.reserve(subsets.size());
  for (EdgeSet s : subsets) f.monomials.push_back(all & ~s);
  std::sort(f.monomials.begin(), f.monomials.end());
  return f;
}

}  // namespace

MultilinearPoly kirchhoff(const Graph& g) {
  return complements_of(g, spanning_trees(g));
}

MultilinearPoly forest_poly(const Graph& g, const VertexPartition& p) {
  return complements_of(g, compatible_forests(g, p));
}

Fe eval_multilinear(const MultilinearPoly& f, std::span<const Fe> point,
                    const Field& field) {
  if (point.size() < f.num_vars)
    fail(ErrorCode::invalid_argument, "point has too few coordinates");
  Fe sum = field.zero();
  for (EdgeSet m : f.monomials) {
    Fe term = field.one();
    for (std::uint32_t v = 0; v < f.num_vars; ++v)
      if (m & (EdgeSet{1} << v)) term = field.mul(term, point[v]);
    sum = field.add(sum, term);
  }
  return sum;
}

IncidenceSystem build_incidence_with(const Graph& g, VertexId removed_row,
                                     EdgeSet flipped_edges) {
  if (removed_row >= g.vertex_count())
    fail(ErrorCode::invalid_argument, "removed row out of range");
  IncidenceSystem inc;
  inc.num_edges = g.edge_count();
  inc.num_rows = g.vertex_count() - 1;
  inc.removed_row = removed_row;
  inc.entries.assign(std::size_t(inc.num_rows) * inc.num_edges, 0);
  std::vector<std::int32_t> row_of(g.vertex_count(), -1);
  std::int32_t r = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (v != removed_row) row_of[v] = r++;
  for (EdgeId id = 1; id <= g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (e.u == e.v) continue;  // loop column stays zero
    VertexId tail = std::min(e.u, e.v), head = std::max(e.u, e.v);
    if (flipped_edges & (EdgeSet{1} << (id - 1))) std::swap(tail, head);
    if (row_of[tail] >= 0)
      inc.entries[std::size_t(row_of[tail]) * inc.num_edges + (id - 1)] = 1;
    if (row_of[head] >= 0)
      inc.entries[std::size_t(row_of[head]) * inc.num_edges + (id - 1)] = -1;
  }
  return inc;
}

IncidenceSystem build_incidence(const Graph& g) {
  if (g.vertex_count() == 0) fail(ErrorCode::precondition, "graph has no vertices");
  return build_incidence_with(g, g.max_label_vertex(), 0);
}

namespace {

// Fills `base` (size x size, row-major) with the alpha-independent entries
// of [[diag(alpha), E^T], [-E, 0]].
void fill_base_matrix(const Field& field, const IncidenceSystem& inc,
                      std::vector<std::uint32_t>& base) {
  const std::uint32_t n_e = inc.num_edges, n_r = inc.num_rows;
  const std::uint32_t size = n_e + n_r;
  const std::uint32_t one = field.one().code;
  const std::uint32_t minus_one = field.neg(field.one()).code;
  base.assign(std::size_t(size) * size, 0);
  for (std::uint32_t r = 0; r < n_r; ++r)
    for (std::uint32_t e = 0; e < n_e; ++e) {
      std::int8_t s = inc.at(r, e);
      if (s == 0) continue;
      // E^T block: row e, column n_e + r.
      base[std::size_t(e) * size + n_e + r] = s > 0 ? one : minus_one;
      // -E block: row n_e + r, column e.
      base[std::size_t(n_e + r) * size + e] = s > 0 ? minus_one : one;
    }
}

std::vector<std::uint32_t> codes_of(std::span<const Fe> point,
                                    std::uint32_t count, const Field& field) {
  if (point.size() < count)
    fail(ErrorCode::invalid_argument, "point has too few coordinates");
  std::vector<std::uint32_t> codes(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    if (point[i].card != field.q())
      fail(ErrorCode::invalid_argument, "point coordinate from a different field");
    codes[i] = point[i].code;
  }
  return codes;
}

}  // namespace

PsiDetEvaluator::PsiDetEvaluator(const Graph& g, const Field& field)
    : PsiDetEvaluator(g, field, build_incidence(g)) {}

PsiDetEvaluator::PsiDetEvaluator(const Graph& g, const Field& field,
                                 const IncidenceSystem& inc)
    : field_(&field), num_edges_(g.edge_count()) {
  if (g.vertex_count() == 0) fail(ErrorCode::precondition, "graph has no vertices");
  size_ = num_edges_ + inc.num_rows;
  fill_base_matrix(field, inc, base_);
  work_.resize(base_.size());
}

std::uint32_t PsiDetEvaluator::eval(const std::uint32_t* point_codes) {
  work_ = base_;
  for (std::uint32_t e = 0; e < num_edges_; ++e)
    work_[std::size_t(e) * size_ + e] = point_codes[e];
  return determinant_raw(*field_, work_.data(), size_, size_);
}

Fe psi_eval(const Graph& g, std::span<const Fe> point, const Field& field) {
  PsiDetEvaluator ev(g, field);
  auto codes = codes_of(point, g.edge_count(), field);
  return {ev.eval(codes.data()), field.q()};
}

DodgsonEvaluator::DodgsonEvaluator(const Graph& g, const Field& field,
                                   std::vector<EdgeId> rows_i,
                                   std::vector<EdgeId> cols_j,
                                   std::vector<EdgeId> zeros_k)
    : DodgsonEvaluator(g, field, build_incidence(g), std::move(rows_i),
                       std::move(cols_j), std::move(zeros_k)) {}

DodgsonEvaluator::DodgsonEvaluator(const Graph& g, const Field& field,
                                   const IncidenceSystem& inc,
                                   std::vector<EdgeId> rows_i,
                                   std::vector<EdgeId> cols_j,
                                   std::vector<EdgeId> zeros_k)
    : field_(&field),
      rows_i_(std::move(rows_i)),
      cols_j_(std::move(cols_j)),
      zeros_k_(std::move(zeros_k)) {
  init(g, inc);
}

void DodgsonEvaluator::init(const Graph& g, const IncidenceSystem& inc) {
  const std::uint32_t n_e = g.edge_count();
  if (rows_i_.size() != cols_j_.size())
    fail(ErrorCode::invalid_argument, "row and column sets differ in size");
  // Rows and columns may overlap (repeated-index minors are routine); the
  // zeroed set must avoid both.
  auto check_ids = [n_e](const std::vector<EdgeId>& ids, const char* what) {
    std::set<EdgeId> seen;
    for (EdgeId id : ids) {
      if (id < 1 || id > n_e)
        fail(ErrorCode::invalid_argument, "edge id out of range");
      if (!seen.insert(id).second)
        fail(ErrorCode::invalid_argument,
             std::string(what) + " set repeats an edge");
    }
    return seen;
  };
  auto ri = check_ids(rows_i_, "row");
  auto cj = check_ids(cols_j_, "column");
  for (EdgeId id : check_ids(zeros_k_, "zero"))
    if (ri.count(id) || cj.count(id))
      fail(ErrorCode::invalid_argument,
           "zeroed edges must avoid the removed rows and columns");

  const std::uint32_t full = n_e + inc.num_rows;
  std::vector<std::uint32_t> full_base;
  fill_base_matrix(*field_, inc, full_base);

  std::vector<char> drop_row(full, 0), drop_col(full, 0);
  for (EdgeId id : rows_i_) drop_row[id - 1] = 1;
  for (EdgeId id : cols_j_) drop_col[id - 1] = 1;
  std::vector<std::uint32_t> kept_rows, kept_cols;
  for (std::uint32_t i = 0; i < full; ++i) {
    if (!drop_row[i]) kept_rows.push_back(i);
    if (!drop_col[i]) kept_cols.push_back(i);
  }
  size_ = static_cast<std::uint32_t>(kept_rows.size());
  base_.assign(std::size_t(size_) * size_, 0);
  std::vector<char> zeroed(n_e + 1, 0);
  for (EdgeId id : zeros_k_) zeroed[id] = 1;
  std::vector<std::int32_t> col_rank(full, -1);
  for (std::uint32_t c = 0; c < size_; ++c) col_rank[kept_cols[c]] = c;
  for (std::uint32_t r = 0; r < size_; ++r)
    for (std::uint32_t c = 0; c < size_; ++c)
      base_[std::size_t(r) * size_ + c] =
          full_base[std::size_t(kept_rows[r]) * full + kept_cols[c]];
  // Diagonal alpha slots that survive both deletions and are not forced zero.
  for (std::uint32_t e = 0; e < n_e; ++e) {
    if (drop_row[e] || drop_col[e] || zeroed[e + 1]) continue;
    // Row rank of e = kept rows before it.
    std::uint32_t r = static_cast<std::uint32_t>(
        std::count_if(drop_row.begin(), drop_row.begin() + e,
                      [](char d) { return d == 0; }));
    std::uint32_t c = static_cast<std::uint32_t>(col_rank[e]);
    diag_slots_.push_back({std::size_t(r) * size_ + c, e + 1});
  }
  work_.resize(base_.size());
}

std::uint32_t DodgsonEvaluator::eval(const std::uint32_t* point_codes) {
  work_ = base_;
  for (const auto& [pos, id] : diag_slots_)
    work_[pos] = point_codes[id - 1];
  return determinant_raw(*field_, work_.data(), size_, size_);
}

Fe dodgson_eval(const Graph& g, std::span<const EdgeId> rows_i,
                std::span<const EdgeId> cols_j, std::span<const EdgeId> zeros_k,
                std::span<const Fe> point, const Field& field) {
  DodgsonEvaluator ev(g, field, {rows_i.begin(), rows_i.end()},
                      {cols_j.begin(), cols_j.end()},
                      {zeros_k.begin(), zeros_k.end()});
  auto codes = codes_of(point, g.edge_count(), field);
  return {ev.eval(codes.data()), field.q()};
}

}  // namespace c2inv
