#ifndef C2INV_COEFF_HPP
#define C2INV_COEFF_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "config.hpp"
#include "counting.hpp"
#include "gf.hpp"
#include "graph.hpp"
#include "poly.hpp"

namespace c2inv {

// Base-p digits, little-endian, no trailing zeros (0 -> empty).
using DigitVector = std::vector<std::uint32_t>;
DigitVector base_p_digits(std::uint64_t n, std::uint32_t p);
std::uint64_t digits_to_value(std::span<const std::uint32_t> digits, std::uint32_t p);

// binom(n, k) mod p as the digitwise product of digit binomials; 0 when any
// digit of k exceeds the digit of n.
std::uint32_t lucas_binom(std::uint64_t n, std::uint64_t k, std::uint32_t p);

// Dense polynomial with exponents capped coordinatewise.  Multiplication
// drops every term whose exponent exceeds a cap, which is lossless for the
// coefficient at the cap vector itself.  Cell = uint8_t carrying residues
// mod p (p < 256) or int64_t carrying exact integers.
template <typename Cell>
class CappedDense {
public:
  CappedDense(std::vector<std::uint32_t> caps, std::uint64_t budget_states)
      : caps_(std::move(caps)) {
    strides_.resize(caps_.size());
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < caps_.size(); ++i) {
      strides_[i] = total;
      std::uint64_t dim = std::uint64_t(caps_[i]) + 1;
      if (total > budget_states / dim)
        throw BudgetError("capped array needs more than " +
                              std::to_string(budget_states) + " states",
                          ~std::uint64_t{0}, budget_states);
      total *= dim;
    }
    cells_.assign(total, Cell{0});
    cells_[0] = Cell{1};  // the constant polynomial 1
  }

  std::uint32_t num_vars() const { return static_cast<std::uint32_t>(caps_.size()); }
  std::uint64_t state_count() const { return cells_.size(); }

  Cell coefficient_at(std::span<const std::uint32_t> exps) const {
    if (exps.size() != caps_.size())
      fail(ErrorCode::invalid_argument, "exponent vector has wrong length");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > caps_[i])
        fail(ErrorCode::invalid_argument, "exponent above the cap");
      idx += exps[i] * strides_[i];
    }
    return cells_[idx];
  }

  // Multiplies by one term (coefficient * prod x_i^exps[i]), accumulating
  // into `out`.  Positions whose shifted exponent would pass a cap are
  // dropped.  `reduce` folds the product into the cell type.
  template <typename Reduce>
  void accumulate_term(std::span<const std::uint32_t> exps, Cell coeff,
                       std::vector<Cell>& out, Reduce&& reduce) const {
    std::uint64_t offset = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > caps_[i]) return;  // term can never reach the target
      offset += exps[i] * strides_[i];
    }
    walk(0, 0, exps, [&](std::uint64_t base) {
      if (cells_[base] != Cell{0})
        reduce(out[base + offset], cells_[base], coeff);
    });
  }

  void replace_cells(std::vector<Cell> next) { cells_ = std::move(next); }
  std::vector<Cell> zero_cells() const { return std::vector<Cell>(cells_.size(), Cell{0}); }

private:
  // Visits the base index of every state with digit_i <= caps_i - exps_i.
  template <typename F>
  void walk(std::size_t var, std::uint64_t base, std::span<const std::uint32_t> exps,
            F&& body) const {
    if (var == caps_.size()) {
      body(base);
      return;
    }
    const std::uint32_t room = caps_[var] - exps[var];
    for (std::uint32_t d = 0; d <= room; ++d)
      walk(var + 1, base + d * strides_[var], exps, body);
  }

  std::vector<std::uint32_t> caps_;
  std::vector<std::uint64_t> strides_;
  std::vector<Cell> cells_;
};

// Residues mod p; multiplication by squarefree monomial sums.
class CappedPolynomial {
public:
  CappedPolynomial(std::vector<std::uint32_t> caps, std::uint32_t p,
                   std::uint64_t budget_states);

  void multiply_by(const MultilinearPoly& f);
  std::uint32_t coefficient_at(std::span<const std::uint32_t> exps) const;
  std::uint64_t state_count() const { return dense_.state_count(); }

private:
  std::uint32_t p_;
  CappedDense<std::uint8_t> dense_;
};

// Exact integer terms with arbitrary exponents; used where a mod-p answer
// would hide the arithmetic being demonstrated.
struct IntTerm {
  std::vector<std::uint32_t> exps;
  std::int64_t coeff = 0;
};
struct SparseIntPoly {
  std::uint32_t num_vars = 0;
  std::vector<IntTerm> terms;
};

class CappedIntPolynomial {
public:
  CappedIntPolynomial(std::vector<std::uint32_t> caps, std::uint64_t budget_states);

  void multiply_by(const SparseIntPoly& f);
  std::int64_t coefficient_at(std::span<const std::uint32_t> exps) const;

private:
  CappedDense<std::int64_t> dense_;
};

// One factor of a product, with multiplicity.
struct FactorPower {
  const MultilinearPoly* poly = nullptr;
  std::uint32_t multiplicity = 0;
};

// Coefficient of prod x_i^target[i] in the product of the factors, mod p.
std::uint32_t capped_coeff(std::span<const FactorPower> factors,
                           std::span<const std::uint32_t> target, std::uint32_t p,
                           std::uint64_t budget_states);

// Checks, for F of total degree equal to its variable count n, that
// [ (x_1..x_n)^{q-1} ] F^{q-1}  ==  (-1)^{n+1} * #zeros(F, F_q^n)  mod p.
struct ChevalleyCheck {
  std::uint32_t coeff = 0;      // left side, mod p
  std::uint64_t zeros = 0;      // zero count over F_q^n
  std::uint32_t expected = 0;   // right side, mod p
  bool holds = false;
};
ChevalleyCheck chevalley_coeff_check(const MultilinearPoly& f, const Field& field,
                                     const RunConfig& cfg);

// Coefficient route: c2 mod p from the capped coefficient of the corner
// product (Psi_H * Phi_H)^{q-1} at the all-(q-1) exponent vector.  Requires
// the log-divergent edge count |E| = 2(|V| - 1).
ResidueReport c2_via_coefficient(const Graph& g, const std::string& graph_id,
                                 PrimePower pp, const RunConfig& cfg);

// Exact number of ordered tuples of q-1 spanning trees and q-1 compatible
// forests of H covering every edge of H exactly q-1 times; equals the
// corner-product coefficient as an integer.  Kept to q <= 3, where the
// tuple space is desk-sized.
struct PartitionCount {
  std::uint64_t tuples = 0;
  std::uint32_t residue_mod_p = 0;  // tuples mod p
  std::uint32_t c2_mod_p = 0;       // minus tuples mod p
};
PartitionCount count_edge_partitions(const Graph& g, PrimePower pp,
                                     const RunConfig& cfg);
std::uint64_t count_tree_forest_tuples(const Graph& h, const VertexPartition& p,
                                       std::uint32_t copies);

// Both sides of the power relation for a product of two multilinear
// polynomials:  [x^{q-1}] (PQ)^{q-1}  vs  ([x^{p-1}] (PQ)^{p-1})^s, mod p.
struct PowerIdentitySides {
  std::uint32_t lhs = 0;
  std::uint32_t inner = 0;  // base coefficient at s = 1
  std::uint32_t rhs = 0;    // inner^s mod p
};
PowerIdentitySides prop_both_sides(const MultilinearPoly& ppoly,
                                   const MultilinearPoly& qpoly, PrimePower pp,
                                   std::uint64_t budget_states);

// The two pinned demonstrations that the power relation needs its
// hypotheses: exact integers, no reduction.
struct NonMultilinearWitness {
  std::int64_t lhs_coeff = 0;   // [x^8 y^8] ((1+x^8)(1+y^8))^8
  std::int64_t inner_coeff = 0; // [x^2 y^2] ((1+x^8)(1+y^8))^2
  std::uint32_t lhs_mod_p = 0;  // mod 3
  std::uint32_t rhs_mod_p = 0;  // inner^2 mod 3
};
NonMultilinearWitness prop_counterexample_nonmultilinear();

struct ScaledVariableWitness {
  std::int64_t lhs_coeff = 0;    // [x^8] (2x)^8 = 2^8
  std::uint32_t lhs_mod_p = 0;   // mod 3
  std::uint32_t lhs_mod_q = 0;   // mod 9
  std::uint64_t zeros_mod_q = 0; // #zeros of 2x over F_9
};
ScaledVariableWitness mod_q_sharpness_witness();

// Method dispatch for one c2 computation.
enum class C2Method { automatic, definition, dodgson, coefficient, partition };
const char* method_name(C2Method m);
C2Method method_from_name(std::string_view name);

ResidueReport compute_c2(const Graph& g, const std::string& graph_id,
                         PrimePower pp, C2Method method, const RunConfig& cfg);

// One row of the prime-power consistency table.
struct PowerRelationRow {
  std::uint32_t s = 0;
  std::uint32_t q = 0;
  std::string method;
  bool skipped = false;
  std::string skip_reason;
  std::uint32_t lhs_mod_p = 0;       // c2 at p^s, reduced mod p
  std::uint32_t expected_mod_p = 0;  // (-1)^(s+1) (c2 at p)^s mod p
  bool pass = false;
};

struct PowerRelationTable {
  std::string graph_id;
  std::uint32_t p = 0;
  std::uint32_t c2_at_p = 0;
  std::string base_method;
  std::vector<PowerRelationRow> rows;

  std::size_t checked_rows() const;
  bool all_pass() const;  // every non-skipped row passes
};

PowerRelationTable theorem1_verify(const Graph& g, const std::string& graph_id,
                                   std::uint32_t p,
                                   std::span<const std::uint32_t> s_values,
                                   const RunConfig& cfg);

}  // namespace c2inv

#endif
