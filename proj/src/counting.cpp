#include "counting.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <exception>
#include <thread>

namespace c2inv {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// q^nvars, or nullopt on overflow past `cap`.
std::optional<std::uint64_t> checked_pow(std::uint64_t q, std::uint32_t nvars,
                                         std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < nvars; ++i) {
    if (total > cap / q) return std::nullopt;
    total *= q;
  }
  return total;
}

void require_connected(const Graph& g) {
  if (g.vertex_count() == 0)
    fail(ErrorCode::precondition, "graph has no vertices");
  if (!g.is_connected())
    fail(ErrorCode::precondition, "graph is disconnected");
}

std::uint64_t count_range(const Field& field, std::uint32_t nvars,
                          ZeroTest& test, std::uint64_t begin, std::uint64_t end) {
  const std::uint32_t q = field.q();
  std::vector<std::uint32_t> digits(nvars, 0);
  std::uint64_t rest = begin;
  for (std::uint32_t i = 0; i < nvars; ++i) {
    digits[i] = static_cast<std::uint32_t>(rest % q);
    rest /= q;
  }
  std::uint64_t zeros = 0;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    if (test.is_zero_at(digits.data())) ++zeros;
    for (std::uint32_t i = 0; i < nvars; ++i) {
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
  }
  return zeros;
}

}  // namespace

PointCount point_count(const std::string& polynomial_id, const Field& field,
                       std::uint32_t nvars, const ZeroTestFactory& make_test,
                       const RunConfig& cfg) {
  auto domain = checked_pow(field.q(), nvars, cfg.budget_evaluations);
  if (!domain)
    throw BudgetError("point count needs more than " +
                          std::to_string(cfg.budget_evaluations) +
                          " evaluations (domain " + std::to_string(field.q()) +
                          "^" + std::to_string(nvars) + ")",
                      ~std::uint64_t{0}, cfg.budget_evaluations);

  PointCount out;
  out.polynomial_id = polynomial_id;
  out.field = field.prime_power();
  out.num_vars = nvars;
  out.domain_size = *domain;

  std::uint32_t workers = cfg.effective_workers();
  workers = static_cast<std::uint32_t>(
      std::min<std::uint64_t>(workers, std::max<std::uint64_t>(*domain, 1)));
  if (workers <= 1) {
    auto test = make_test();
    out.zeros = count_range(field, nvars, *test, 0, *domain);
    return out;
  }

  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = *domain / workers;
  const std::uint64_t extra = *domain % workers;
  std::uint64_t begin = 0;
  for (std::uint32_t w = 0; w < workers; ++w) {
    std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
    auto test = make_test();  // per-worker scratch, created serially
    threads.emplace_back(
        [&field, nvars, begin, end, w, &partial, &errors](std::unique_ptr<ZeroTest> t) {
          try {
            partial[w] = count_range(field, nvars, *t, begin, end);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        },
        std::move(test));
    begin = end;
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (std::uint64_t c : partial) out.zeros += c;
  return out;
}

namespace {

struct PsiZeroTest : ZeroTest {
  PsiZeroTest(const Graph& g, const Field& field) : ev(g, field) {}
  bool is_zero_at(const std::uint32_t* codes) override { return ev.eval(codes) == 0; }
  PsiDetEvaluator ev;
};

// Product of the two corner determinants, evaluated over the non-corner
// variables; the corner variables are pinned to zero.
struct CornerProductTest : ZeroTest {
  CornerProductTest(const Graph& g, const Field& field, const ThreeValentCorner& c)
      : minor_both(g, field, {c.e1, c.e2}, {c.e2, c.e3}, {}),
        minor_split(g, field, {c.e1}, {c.e3}, {c.e2}),
        full(g.edge_count(), 0) {
    for (EdgeId id = 1; id <= g.edge_count(); ++id)
      if (id != c.e1 && id != c.e2 && id != c.e3) free_slots.push_back(id - 1);
  }

  bool is_zero_at(const std::uint32_t* codes) override {
    for (std::size_t i = 0; i < free_slots.size(); ++i) full[free_slots[i]] = codes[i];
    if (minor_both.eval(full.data()) == 0) return true;
    return minor_split.eval(full.data()) == 0;
  }

  DodgsonEvaluator minor_both;   // rows {e1,e2}, cols {e2,e3}
  DodgsonEvaluator minor_split;  // rows {e1}, cols {e3}, e2 zeroed
  std::vector<std::uint32_t> full;
  std::vector<std::uint32_t> free_slots;
};

// Zero test for Psi_H * Phi_H from the monomial expansions.
struct SymbolicProductTest : ZeroTest {
  SymbolicProductTest(MultilinearPoly f1, MultilinearPoly f2, const Field& field)
      : a(std::move(f1)), b(std::move(f2)), fld(&field) {}

  std::uint32_t eval_poly(const MultilinearPoly& f, const std::uint32_t* codes) {
    std::uint32_t sum = 0;
    for (EdgeSet m : f.monomials) {
      std::uint32_t term = fld->one().code;
      for (std::uint32_t v = 0; v < f.num_vars && term != 0; ++v)
        if (m & (EdgeSet{1} << v)) term = fld->raw_mul(term, codes[v]);
      sum = fld->raw_add(sum, term);
    }
    return sum;
  }

  bool is_zero_at(const std::uint32_t* codes) override {
    if (eval_poly(a, codes) == 0) return true;
    return eval_poly(b, codes) == 0;
  }

  MultilinearPoly a, b;
  const Field* fld;
};

}  // namespace

CornerPieces corner_pieces_at(const Graph& g, const ThreeValentCorner& corner) {
  auto inc = g.incident_edges(corner.v);
  if (inc.size() != 3 || inc[0] != corner.e1 || inc[1] != corner.e2 ||
      inc[2] != corner.e3)
    fail(ErrorCode::invalid_argument, "corner does not match the graph");
  CornerPieces out;
  out.corner = corner;
  auto del = remove_vertex(g, corner.v);
  out.h = std::move(del.graph);
  auto in_h = [&](VertexId v) {
    auto found = out.h.vertex_by_label(g.label(v));
    assert(found);
    return *found;
  };
  out.partition.parts = {{in_h(corner.b)}, {in_h(corner.a), in_h(corner.c)}};
  return out;
}

CornerPieces corner_pieces(const Graph& g) {
  return corner_pieces_at(g, find_three_valent(g));
}

ResidueReport c2_via_definition(const Graph& g, const std::string& graph_id,
                                const Field& field, const RunConfig& cfg) {
  require_connected(g);
  auto start = Clock::now();
  auto pc = point_count(
      graph_id + ":psi", field, g.edge_count(),
      [&] { return std::make_unique<PsiZeroTest>(g, field); }, cfg);
  const std::uint64_t q = field.q();
  if (pc.zeros % (q * q) != 0)
    fail(ErrorCode::internal, "zero count " + std::to_string(pc.zeros) +
                                  " is not divisible by q^2");
  ResidueReport r;
  r.graph_id = graph_id;
  r.p = field.p();
  r.s = field.s();
  r.q = field.q();
  r.method = "definition";
  r.modulus = field.q();
  r.value = static_cast<std::uint32_t>((pc.zeros / (q * q)) % q);
  r.count = pc.zeros;
  r.runtime_ms = ms_since(start);
  return r;
}

ResidueReport c2_via_dodgson_at(const Graph& g, const std::string& graph_id,
                                const ThreeValentCorner& corner,
                                const Field& field, const RunConfig& cfg) {
  require_connected(g);
  if (g.edge_count() < 3)
    fail(ErrorCode::precondition, "corner route needs at least three edges");
  auto start = Clock::now();
  auto pc = point_count(
      graph_id + ":corner", field, g.edge_count() - 3,
      [&] { return std::make_unique<CornerProductTest>(g, field, corner); }, cfg);
  ResidueReport r;
  r.graph_id = graph_id;
  r.p = field.p();
  r.s = field.s();
  r.q = field.q();
  r.method = "dodgson";
  r.modulus = field.q();
  r.value = static_cast<std::uint32_t>((field.q() - pc.zeros % field.q()) % field.q());
  r.count = pc.zeros;
  r.runtime_ms = ms_since(start);
  return r;
}

ResidueReport c2_via_dodgson(const Graph& g, const std::string& graph_id,
                             const Field& field, const RunConfig& cfg) {
  return c2_via_dodgson_at(g, graph_id, find_three_valent(g), field, cfg);
}

CornerIdentityResult check_3valent_identity(const Graph& g, const Field& field,
                                            const RunConfig& cfg) {
  require_connected(g);
  auto pieces = corner_pieces(g);
  const ThreeValentCorner& c = pieces.corner;

  auto det_side = point_count(
      "corner:det", field, g.edge_count() - 3,
      [&] { return std::make_unique<CornerProductTest>(g, field, c); }, cfg);

  MultilinearPoly psi_h = kirchhoff(pieces.h);
  MultilinearPoly phi_h = forest_poly(pieces.h, pieces.partition);
  auto poly_side = point_count(
      "corner:poly", field, pieces.h.edge_count(),
      [&] { return std::make_unique<SymbolicProductTest>(psi_h, phi_h, field); },
      cfg);

  CornerIdentityResult out;
  out.det_side = det_side.zeros;
  out.poly_side = poly_side.zeros;
  out.equal = det_side.zeros == poly_side.zeros;
  return out;
}

}  // namespace c2inv
