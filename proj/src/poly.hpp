#ifndef C2INV_POLY_HPP
#define C2INV_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gf.hpp"
#include "graph.hpp"

namespace c2inv {

// Sum of squarefree monomials with coefficient 1, over variables a1..aN
// indexed by edge id.  A monomial is the bitmask of its variables.
struct MultilinearPoly {
  std::uint32_t num_vars = 0;
  std::vector<EdgeSet> monomials;  // ascending, no duplicates

  bool is_zero() const { return monomials.empty(); }
  // Total degree; nullopt for the zero polynomial.
  std::optional<std::uint32_t> degree() const;
  bool linear_in_each_variable() const { return true; }  // by construction
  bool contains_var(std::uint32_t var) const;  // var is 1-based
  // "a1*a3 + a2*a4", monomials sorted by variable tuple; "0" when empty.
  std::string to_string() const;
};

// Product over the edges outside each spanning tree.
MultilinearPoly kirchhoff(const Graph& g);
// Product over the edges outside each compatible forest.
MultilinearPoly forest_poly(const Graph& g, const VertexPartition& p);

Fe eval_multilinear(const MultilinearPoly& f, std::span<const Fe> point,
                    const Field& field);

// Signed incidence with the row of the largest-labeled vertex removed;
// edges point from the smaller-indexed endpoint to the larger.  Hooks for
// other orientations and removed rows exist so tests can confirm that zero
// counts do not depend on the convention.
struct IncidenceSystem {
  std::uint32_t num_edges = 0;
  std::uint32_t num_rows = 0;      // vertex_count - 1
  VertexId removed_row = 0;
  std::vector<std::int8_t> entries;  // row-major, num_rows x num_edges

  std::int8_t at(std::uint32_t row, std::uint32_t col) const {
    return entries[std::size_t(row) * num_edges + col];
  }
};

IncidenceSystem build_incidence(const Graph& g);
IncidenceSystem build_incidence_with(const Graph& g, VertexId removed_row,
                                     EdgeSet flipped_edges);

// Evaluates the Kirchhoff polynomial at a point as the determinant of the
// full graph matrix [[diag(alpha), E^T], [-E, 0]]; equals the monomial sum.
Fe psi_eval(const Graph& g, std::span<const Fe> point, const Field& field);

// Determinant of the graph matrix with rows I and columns J (edge slots)
// removed and the variables in K set to zero, up to sign.  Requires
// |I| = |J| and I, J, K pairwise disjoint.  The point supplies one value
// per edge id; entries for K are ignored.
Fe dodgson_eval(const Graph& g, std::span<const EdgeId> rows_i,
                std::span<const EdgeId> cols_j, std::span<const EdgeId> zeros_k,
                std::span<const Fe> point, const Field& field);

// Reusable per-point evaluators over raw codes for counting loops.  Both
// read a point laid out as one code per edge id (index id-1).
class PsiDetEvaluator {
public:
  PsiDetEvaluator(const Graph& g, const Field& field);
  PsiDetEvaluator(const Graph& g, const Field& field, const IncidenceSystem& inc);

  std::uint32_t eval(const std::uint32_t* point_codes);
  std::uint32_t size() const { return size_; }

private:
  const Field* field_;
  std::uint32_t num_edges_, size_;
  std::vector<std::uint32_t> base_;   // matrix with alpha slots zeroed
  std::vector<std::uint32_t> work_;
};

class DodgsonEvaluator {
public:
  DodgsonEvaluator(const Graph& g, const Field& field,
                   std::vector<EdgeId> rows_i, std::vector<EdgeId> cols_j,
                   std::vector<EdgeId> zeros_k);
  DodgsonEvaluator(const Graph& g, const Field& field,
                   const IncidenceSystem& inc, std::vector<EdgeId> rows_i,
                   std::vector<EdgeId> cols_j, std::vector<EdgeId> zeros_k);

  std::uint32_t eval(const std::uint32_t* point_codes);
  std::uint32_t size() const { return size_; }

private:
  void init(const Graph& g, const IncidenceSystem& inc);

  const Field* field_;
  std::vector<EdgeId> rows_i_, cols_j_, zeros_k_;
  std::uint32_t size_ = 0;
  std::vector<std::uint32_t> base_;
  std::vector<std::uint32_t> work_;
  // Surviving diagonal slots: flat position in the reduced matrix -> edge id.
  std::vector<std::pair<std::size_t, EdgeId>> diag_slots_;
};

}  // namespace c2inv

#endif
