#include "coeff.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>

namespace c2inv {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t mod) {
  std::uint64_t out = 1 % mod;
  base %= mod;
  while (e) {
    if (e & 1) out = out * base % mod;
    base = base * base % mod;
    e >>= 1;
  }
  return out;
}

// q^n saturating at uint64 max.
std::uint64_t sat_pow(std::uint64_t q, std::uint32_t n) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (out > ~std::uint64_t{0} / q) return ~std::uint64_t{0};
    out *= q;
  }
  return out;
}

}  // namespace

DigitVector base_p_digits(std::uint64_t n, std::uint32_t p) {
  if (p < 2) fail(ErrorCode::invalid_argument, "base must be at least 2");
  DigitVector d;
  while (n) {
    d.push_back(static_cast<std::uint32_t>(n % p));
    n /= p;
  }
  return d;
}

std::uint64_t digits_to_value(std::span<const std::uint32_t> digits, std::uint32_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
  return v;
}

namespace {

// binom(a, b) mod p with a, b < p, via the factorial product formula.
std::uint32_t small_binom_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t num = 1, den = 1;
  for (std::uint32_t i = 0; i < b; ++i) {
    num = num * ((a - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  return static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p);
}

}  // namespace

std::uint32_t lucas_binom(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (!is_prime(p)) fail(ErrorCode::invalid_argument, "modulus must be prime");
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (n || k) {
    std::uint32_t nd = static_cast<std::uint32_t>(n % p);
    std::uint32_t kd = static_cast<std::uint32_t>(k % p);
    if (kd > nd) return 0;
    result = result * small_binom_mod(nd, kd, p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

CappedPolynomial::CappedPolynomial(std::vector<std::uint32_t> caps, std::uint32_t p,
                                   std::uint64_t budget_states)
    : p_(p), dense_(std::move(caps), budget_states) {
  if (!is_prime(p)) fail(ErrorCode::invalid_argument, "modulus must be prime");
  if (p >= 256)
    fail(ErrorCode::precondition, "capped residues are stored in bytes; p < 256");
}

void CappedPolynomial::multiply_by(const MultilinearPoly& f) {
  if (f.num_vars != dense_.num_vars())
    fail(ErrorCode::invalid_argument, "factor variable count mismatch");
  auto out = dense_.zero_cells();
  std::vector<std::uint32_t> exps(f.num_vars, 0);
  const std::uint32_t p = p_;
  for (EdgeSet m : f.monomials) {
    for (std::uint32_t v = 0; v < f.num_vars; ++v)
      exps[v] = (m >> v) & 1u;
    dense_.accumulate_term(
        exps, std::uint8_t{1}, out,
        [p](std::uint8_t& acc, std::uint8_t a, std::uint8_t b) {
          acc = static_cast<std::uint8_t>((acc + std::uint32_t(a) * b) % p);
        });
  }
  dense_.replace_cells(std::move(out));
}

std::uint32_t CappedPolynomial::coefficient_at(std::span<const std::uint32_t> exps) const {
  return dense_.coefficient_at(exps);
}

CappedIntPolynomial::CappedIntPolynomial(std::vector<std::uint32_t> caps,
                                         std::uint64_t budget_states)
    : dense_(std::move(caps), budget_states) {}

void CappedIntPolynomial::multiply_by(const SparseIntPoly& f) {
  if (f.num_vars != dense_.num_vars())
    fail(ErrorCode::invalid_argument, "factor variable count mismatch");
  auto out = dense_.zero_cells();
  for (const IntTerm& t : f.terms) {
    if (t.exps.size() != f.num_vars)
      fail(ErrorCode::invalid_argument, "term exponent vector has wrong length");
    dense_.accumulate_term(t.exps, t.coeff, out,
                           [](std::int64_t& acc, std::int64_t a, std::int64_t b) {
                             acc += a * b;
                           });
  }
  dense_.replace_cells(std::move(out));
}

std::int64_t CappedIntPolynomial::coefficient_at(std::span<const std::uint32_t> exps) const {
  return dense_.coefficient_at(exps);
}

std::uint32_t capped_coeff(std::span<const FactorPower> factors,
                           std::span<const std::uint32_t> target, std::uint32_t p,
                           std::uint64_t budget_states) {
  for (const FactorPower& f : factors) {
    if (!f.poly) fail(ErrorCode::invalid_argument, "null factor");
    if (f.poly->num_vars != target.size())
      fail(ErrorCode::invalid_argument, "factor variable count mismatch");
  }
  CappedPolynomial acc({target.begin(), target.end()}, p, budget_states);
  for (const FactorPower& f : factors)
    for (std::uint32_t i = 0; i < f.multiplicity; ++i) acc.multiply_by(*f.poly);
  return acc.coefficient_at(target);
}

namespace {

struct SinglePolyTest : ZeroTest {
  SinglePolyTest(const MultilinearPoly& f, const Field& field) : f(&f), fld(&field) {}
  bool is_zero_at(const std::uint32_t* codes) override {
    std::uint32_t sum = 0;
    for (EdgeSet m : f->monomials) {
      std::uint32_t term = fld->one().code;
      for (std::uint32_t v = 0; v < f->num_vars && term != 0; ++v)
        if (m & (EdgeSet{1} << v)) term = fld->raw_mul(term, codes[v]);
      sum = fld->raw_add(sum, term);
    }
    return sum == 0;
  }
  const MultilinearPoly* f;
  const Field* fld;
};

}  // namespace

ChevalleyCheck chevalley_coeff_check(const MultilinearPoly& f, const Field& field,
                                     const RunConfig& cfg) {
  const std::uint32_t n = f.num_vars;
  auto deg = f.degree();
  if (!deg || *deg != n)
    fail(ErrorCode::precondition,
         "total degree must equal the variable count for the coefficient identity");
  const std::uint32_t p = field.p(), q = field.q();

  ChevalleyCheck out;
  std::vector<std::uint32_t> target(n, q - 1);
  FactorPower fp[] = {{&f, q - 1}};
  out.coeff = capped_coeff(fp, target, p, cfg.budget_states);

  auto pc = point_count(
      "chevalley", field, n,
      [&] { return std::make_unique<SinglePolyTest>(f, field); }, cfg);
  out.zeros = pc.zeros;
  out.expected = static_cast<std::uint32_t>(
      n % 2 == 1 ? out.zeros % p : (p - out.zeros % p) % p);
  out.holds = out.coeff == out.expected;
  return out;
}

namespace {

void require_log_divergent(const Graph& g) {
  if (g.vertex_count() < 2 || g.edge_count() != 2 * (g.vertex_count() - 1))
    fail(ErrorCode::precondition,
         "coefficient route needs |E| = 2(|V| - 1), got |E| = " +
             std::to_string(g.edge_count()) + ", |V| = " +
             std::to_string(g.vertex_count()));
}

}  // namespace

ResidueReport c2_via_coefficient(const Graph& g, const std::string& graph_id,
                                 PrimePower pp, const RunConfig& cfg) {
  if (!g.is_connected()) fail(ErrorCode::precondition, "graph is disconnected");
  require_log_divergent(g);
  auto start = Clock::now();
  auto pieces = corner_pieces(g);
  MultilinearPoly psi_h = kirchhoff(pieces.h);
  MultilinearPoly phi_h = forest_poly(pieces.h, pieces.partition);
  const std::uint32_t n = pieces.h.edge_count();
  // Degree bookkeeping behind the sign: deg(Psi_H * Phi_H) == n.
  if (!psi_h.degree() || !phi_h.degree() || *psi_h.degree() + *phi_h.degree() != n)
    fail(ErrorCode::internal, "corner product degree mismatch");

  std::vector<std::uint32_t> target(n, pp.q - 1);
  FactorPower factors[] = {{&psi_h, pp.q - 1}, {&phi_h, pp.q - 1}};
  std::uint32_t coeff = capped_coeff(factors, target, pp.p, cfg.budget_states);

  ResidueReport r;
  r.graph_id = graph_id;
  r.p = pp.p;
  r.s = pp.s;
  r.q = pp.q;
  r.method = "coefficient";
  r.modulus = pp.p;
  r.value = (pp.p - coeff % pp.p) % pp.p;
  r.count = coeff;
  r.runtime_ms = ms_since(start);
  return r;
}

std::uint64_t count_tree_forest_tuples(const Graph& h, const VertexPartition& p,
                                       std::uint32_t copies) {
  auto trees = spanning_trees(h);
  auto forests = compatible_forests(h, p);
  const std::uint32_t m = h.edge_count();
  std::vector<std::uint32_t> remaining(m, copies);

  // Ordered tuples: `copies` tree slots then `copies` forest slots; each
  // chosen subgraph consumes one unit of every edge it contains.
  std::uint64_t total = 0;
  auto covered = [&](EdgeSet sub, bool undo) {
    for (std::uint32_t e = 0; e < m; ++e) {
      if (!(sub & (EdgeSet{1} << e))) continue;
      if (undo) ++remaining[e];
      else if (remaining[e] == 0) {  // roll back this partial application
        for (std::uint32_t r = 0; r < e; ++r)
          if (sub & (EdgeSet{1} << r)) ++remaining[r];
        return false;
      } else {
        --remaining[e];
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::uint32_t slot) -> void {
    if (slot == 2 * copies) {
      if (std::all_of(remaining.begin(), remaining.end(),
                      [](std::uint32_t r) { return r == 0; }))
        ++total;
      return;
    }
    const auto& pool = slot < copies ? trees : forests;
    for (EdgeSet sub : pool) {
      if (!covered(sub, false)) continue;
      self(self, slot + 1);
      covered(sub, true);
    }
  };
  rec(rec, 0);
  return total;
}

PartitionCount count_edge_partitions(const Graph& g, PrimePower pp,
                                     const RunConfig& cfg) {
  (void)cfg;
  if (pp.q > 3)
    fail(ErrorCode::precondition,
         "tuple counting is limited to q <= 3; use the capped coefficient");
  if (!g.is_connected()) fail(ErrorCode::precondition, "graph is disconnected");
  require_log_divergent(g);
  auto pieces = corner_pieces(g);
  PartitionCount out;
  out.tuples = count_tree_forest_tuples(pieces.h, pieces.partition, pp.q - 1);
  out.residue_mod_p = static_cast<std::uint32_t>(out.tuples % pp.p);
  out.c2_mod_p = (pp.p - out.residue_mod_p) % pp.p;
  return out;
}

PowerIdentitySides prop_both_sides(const MultilinearPoly& ppoly,
                                   const MultilinearPoly& qpoly, PrimePower pp,
                                   std::uint64_t budget_states) {
  if (ppoly.num_vars != qpoly.num_vars)
    fail(ErrorCode::invalid_argument, "factors must share a variable list");
  const std::uint32_t n = ppoly.num_vars;
  PowerIdentitySides out;
  {
    std::vector<std::uint32_t> target(n, pp.q - 1);
    FactorPower f[] = {{&ppoly, pp.q - 1}, {&qpoly, pp.q - 1}};
    out.lhs = capped_coeff(f, target, pp.p, budget_states);
  }
  {
    std::vector<std::uint32_t> target(n, pp.p - 1);
    FactorPower f[] = {{&ppoly, pp.p - 1}, {&qpoly, pp.p - 1}};
    out.inner = capped_coeff(f, target, pp.p, budget_states);
  }
  out.rhs = static_cast<std::uint32_t>(pow_mod(out.inner, pp.s, pp.p));
  return out;
}

NonMultilinearWitness prop_counterexample_nonmultilinear() {
  // F = (1 + x^8)(1 + y^8), which is not linear in its variables.
  SparseIntPoly f;
  f.num_vars = 2;
  f.terms = {{{0, 0}, 1}, {{8, 0}, 1}, {{0, 8}, 1}, {{8, 8}, 1}};
  NonMultilinearWitness w;
  {
    CappedIntPolynomial acc({8, 8}, 1 << 20);
    for (int i = 0; i < 8; ++i) acc.multiply_by(f);
    w.lhs_coeff = acc.coefficient_at(std::vector<std::uint32_t>{8, 8});
  }
  {
    CappedIntPolynomial acc({2, 2}, 1 << 20);
    for (int i = 0; i < 2; ++i) acc.multiply_by(f);
    w.inner_coeff = acc.coefficient_at(std::vector<std::uint32_t>{2, 2});
  }
  w.lhs_mod_p = static_cast<std::uint32_t>(((w.lhs_coeff % 3) + 3) % 3);
  std::int64_t r = ((w.inner_coeff % 3) + 3) % 3;
  w.rhs_mod_p = static_cast<std::uint32_t>(r * r % 3);
  return w;
}

ScaledVariableWitness mod_q_sharpness_witness() {
  // F = 2x over F_9: one variable, degree 1.
  SparseIntPoly f;
  f.num_vars = 1;
  f.terms = {{{1}, 2}};
  ScaledVariableWitness w;
  CappedIntPolynomial acc({8}, 1 << 10);
  for (int i = 0; i < 8; ++i) acc.multiply_by(f);
  w.lhs_coeff = acc.coefficient_at(std::vector<std::uint32_t>{8});
  w.lhs_mod_p = static_cast<std::uint32_t>(w.lhs_coeff % 3);
  w.lhs_mod_q = static_cast<std::uint32_t>(w.lhs_coeff % 9);
  Field f9 = Field::make(3, 2);
  std::uint64_t zeros = 0;
  Fe two = f9.from_int(2);
  for (Fe x : f9.all_elements())
    if (f9.is_zero(f9.mul(two, x))) ++zeros;
  w.zeros_mod_q = zeros;
  return w;
}

const char* method_name(C2Method m) {
  switch (m) {
    case C2Method::automatic: return "auto";
    case C2Method::definition: return "definition";
    case C2Method::dodgson: return "dodgson";
    case C2Method::coefficient: return "coefficient";
    case C2Method::partition: return "partition";
  }
  return "?";
}

C2Method method_from_name(std::string_view name) {
  if (name == "auto") return C2Method::automatic;
  if (name == "definition") return C2Method::definition;
  if (name == "dodgson") return C2Method::dodgson;
  if (name == "coefficient") return C2Method::coefficient;
  if (name == "partition") return C2Method::partition;
  fail(ErrorCode::invalid_argument,
       "unknown method '" + std::string(name) +
           "'; expected auto, definition, dodgson, coefficient or partition");
}

ResidueReport compute_c2(const Graph& g, const std::string& graph_id,
                         PrimePower pp, C2Method method, const RunConfig& cfg) {
  if (!g.is_connected()) fail(ErrorCode::precondition, "graph is disconnected");
  const bool has_corner = !all_three_valent_corners(g).empty();
  const std::uint32_t big_n = g.edge_count();

  if (method == C2Method::automatic) {
    const std::uint64_t corner_domain =
        big_n >= 3 ? sat_pow(pp.q, big_n - 3) : ~std::uint64_t{0};
    const std::uint64_t full_domain = sat_pow(pp.q, big_n);
    const bool log_div =
        g.vertex_count() >= 2 && big_n == 2 * (g.vertex_count() - 1);
    // Prefer the routes that give a full mod-q residue; fall back to the
    // mod-p coefficient, then to tuple counting.
    if (has_corner && corner_domain <= cfg.budget_evaluations)
      method = C2Method::dodgson;
    else if (full_domain <= cfg.budget_evaluations)
      method = C2Method::definition;
    else if (has_corner && log_div && corner_domain <= cfg.budget_states)
      method = C2Method::coefficient;
    else if (has_corner && log_div && pp.q <= 3)
      method = C2Method::partition;
    else
      throw BudgetError(
          "every method for " + graph_id + " at q = " + std::to_string(pp.q) +
              " exceeds the configured budgets",
          std::min(corner_domain, full_domain), cfg.budget_evaluations);
  }

  switch (method) {
    case C2Method::definition:
      return c2_via_definition(g, graph_id, Field::make(pp.p, pp.s), cfg);
    case C2Method::dodgson:
      return c2_via_dodgson(g, graph_id, Field::make(pp.p, pp.s), cfg);
    case C2Method::coefficient:
      return c2_via_coefficient(g, graph_id, pp, cfg);
    case C2Method::partition: {
      auto start = Clock::now();
      auto pc = count_edge_partitions(g, pp, cfg);
      ResidueReport r;
      r.graph_id = graph_id;
      r.p = pp.p;
      r.s = pp.s;
      r.q = pp.q;
      r.method = "partition";
      r.modulus = pp.p;
      r.value = pc.c2_mod_p;
      r.count = pc.tuples;
      r.runtime_ms = ms_since(start);
      return r;
    }
    case C2Method::automatic: break;  // unreachable
  }
  fail(ErrorCode::internal, "unhandled method");
}

std::size_t PowerRelationTable::checked_rows() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(),
                    [](const PowerRelationRow& r) { return !r.skipped; }));
}

bool PowerRelationTable::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const PowerRelationRow& r) {
    return r.skipped || r.pass;
  });
}

PowerRelationTable theorem1_verify(const Graph& g, const std::string& graph_id,
                                   std::uint32_t p,
                                   std::span<const std::uint32_t> s_values,
                                   const RunConfig& cfg) {
  PowerRelationTable table;
  table.graph_id = graph_id;
  table.p = p;
  auto base = compute_c2(g, graph_id, PrimePower::make(p, 1), C2Method::automatic, cfg);
  table.c2_at_p = base.value % p;
  table.base_method = base.method;

  for (std::uint32_t s : s_values) {
    PowerRelationRow row;
    row.s = s;
    std::uint64_t expected = pow_mod(table.c2_at_p, s, p);
    if (s % 2 == 0) expected = (p - expected) % p;  // (-1)^(s+1) factor
    row.expected_mod_p = static_cast<std::uint32_t>(expected);
    try {
      PrimePower pp = PrimePower::make(p, s);
      row.q = pp.q;
      auto rep = compute_c2(g, graph_id, pp, C2Method::automatic, cfg);
      row.method = rep.method;
      row.lhs_mod_p = rep.value % p;
      row.pass = row.lhs_mod_p == row.expected_mod_p;
    } catch (const BudgetError& e) {
      row.skipped = true;
      row.skip_reason = e.what();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::invalid_argument) throw;
      row.skipped = true;  // q out of the exact-field range
      row.skip_reason = e.what();
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace c2inv
