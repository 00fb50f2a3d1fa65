#include <doctest.h>

#include <memory>
#include <string>
#include <vector>

#include "counting.hpp"
#include "gf.hpp"
#include "graph.hpp"
#include "poly.hpp"

using namespace c2inv;

namespace {

const char* kK4 = "a b\na c\nb c\na d\nc d\nb d\n";

std::string circulant_text(int n, std::initializer_list<int> offsets) {
  std::string out;
  for (int i = 0; i < n; ++i)
    for (int d : offsets)
      out += std::to_string(i) + " " + std::to_string((i + d) % n) + "\n";
  return out;
}

Graph oct_decompletion() {
  return decompletion(parse_edge_list(circulant_text(6, {1, 2})), "5").graph;
}

Graph c7_decompletion() {
  return decompletion(parse_edge_list(circulant_text(7, {1, 2})), "6").graph;
}

struct PolyZero : ZeroTest {
  PolyZero(const MultilinearPoly& f, const Field& fld) : f(f), fld(fld) {}
  bool is_zero_at(const std::uint32_t* codes) override {
    std::uint32_t sum = 0;
    for (EdgeSet m : f.monomials) {
      std::uint32_t term = fld.one().code;
      for (std::uint32_t v = 0; v < f.num_vars && term; ++v)
        if (m & (EdgeSet{1} << v)) term = fld.raw_mul(term, codes[v]);
      sum = fld.raw_add(sum, term);
    }
    return sum == 0;
  }
  const MultilinearPoly& f;
  const Field& fld;
};

MultilinearPoly single_var(std::uint32_t num_vars, std::uint32_t var) {
  MultilinearPoly f;
  f.num_vars = num_vars;
  f.monomials = {EdgeSet{1} << (var - 1)};
  return f;
}

RunConfig quiet_cfg(std::uint32_t workers = 1) {
  RunConfig cfg;
  cfg.workers = workers;
  return cfg;
}

}  // namespace

TEST_CASE("point counting over a hyperplane") {
  // x1 = 0 over F_q^3 has exactly q^2 solutions.
  for (auto [p, s] : {std::pair{3u, 1u}, {2u, 2u}}) {
    Field f = Field::make(p, s);
    MultilinearPoly x1 = single_var(3, 1);
    auto pc = point_count(
        "x1", f, 3, [&] { return std::make_unique<PolyZero>(x1, f); },
        quiet_cfg());
    CHECK(pc.zeros == std::uint64_t(f.q()) * f.q());
    CHECK(pc.domain_size == std::uint64_t(f.q()) * f.q() * f.q());
  }
}

TEST_CASE("point counting a scaled variable") {
  // 2x vanishes only at x = 0, also over GF(9).
  struct TwoX : ZeroTest {
    explicit TwoX(const Field& f) : f(f) {}
    bool is_zero_at(const std::uint32_t* codes) override {
      return f.raw_mul(2, codes[0]) == 0;
    }
    const Field& f;
  };
  Field f9 = Field::make(3, 2);
  auto pc = point_count(
      "2x", f9, 1, [&] { return std::make_unique<TwoX>(f9); }, quiet_cfg());
  CHECK(pc.zeros == 1);
}

TEST_CASE("point counting the triangle polynomial over F_2") {
  Graph tri = parse_edge_list("a b\na c\nb c\n");
  Field f2 = Field::make(2, 1);
  MultilinearPoly psi = kirchhoff(tri);
  auto pc = point_count(
      "tri", f2, 3, [&] { return std::make_unique<PolyZero>(psi, f2); },
      quiet_cfg());
  CHECK(pc.zeros == 4);
}

TEST_CASE("worker split does not change the count") {
  Graph g = parse_edge_list(kK4);
  Field f3 = Field::make(3, 1);
  MultilinearPoly psi = kirchhoff(g);
  std::uint64_t reference = 0;
  for (std::uint32_t workers : {1u, 2u, 3u, 5u}) {
    auto pc = point_count(
        "k4", f3, 6, [&] { return std::make_unique<PolyZero>(psi, f3); },
        quiet_cfg(workers));
    if (workers == 1) reference = pc.zeros;
    CHECK(pc.zeros == reference);
  }
}

TEST_CASE("budgets reject oversized domains up front") {
  Field f3 = Field::make(3, 1);
  MultilinearPoly x1 = single_var(3, 1);
  auto factory = [&] { return std::make_unique<PolyZero>(x1, f3); };
  RunConfig tight = quiet_cfg();
  tight.budget_evaluations = 26;  // 3^3 = 27
  CHECK_THROWS_AS(point_count("x1", f3, 3, factory, tight), BudgetError);
  try {
    point_count("x1", f3, 3, factory, tight);
  } catch (const BudgetError& e) {
    CHECK(e.allowed() == 26);
    CHECK(e.code() == ErrorCode::budget);
  }
  tight.budget_evaluations = 27;  // exact fit is allowed
  CHECK_NOTHROW(point_count("x1", f3, 3, factory, tight));
}

namespace {

struct GoldenRow {
  std::uint32_t p, s;
  std::uint64_t zeros;   // of the graph polynomial over F_q^E
  std::uint32_t residue; // zeros / q^2 mod q
};

void check_definition_route(const Graph& g, const char* id,
                            std::span<const GoldenRow> rows) {
  for (const GoldenRow& row : rows) {
    Field f = Field::make(row.p, row.s);
    ResidueReport r = c2_via_definition(g, id, f, quiet_cfg(2));
    CHECK(r.graph_id == id);
    CHECK(r.method == "definition");
    CHECK(r.q == f.q());
    CHECK(r.modulus == f.q());
    REQUIRE(r.count.has_value());
    CHECK(*r.count == row.zeros);
    CHECK(r.value == row.residue);
  }
}

}  // namespace

TEST_CASE("definition route matches the frozen zero counts: K4") {
  const GoldenRow rows[] = {
      {2, 1, 36, 1},    {3, 1, 261, 2},   {2, 2, 1072, 3}, {5, 1, 3225, 4},
      {7, 1, 17101, 6}, {2, 3, 33216, 7}, {3, 2, 59697, 8},
  };
  check_definition_route(parse_edge_list(kK4), "k4", rows);
}

TEST_CASE("definition route matches the frozen zero counts: octahedron") {
  const GoldenRow rows[] = {
      {2, 1, 156, 1}, {3, 1, 2529, 2}, {2, 2, 18160, 3}, {5, 1, 84225, 4},
  };
  check_definition_route(oct_decompletion(), "oct", rows);
}

TEST_CASE("definition route matches the frozen zero counts: 7-cycle double") {
  const GoldenRow rows[] = {{2, 1, 692, 1}, {3, 1, 24777, 2}};
  check_definition_route(c7_decompletion(), "c7", rows);
}

TEST_CASE("corner route: frozen product counts and residues") {
  struct CornerRow {
    std::uint32_t p, s;
    std::uint64_t zeros;  // corner-product zeros over F_q^(E-3)
    std::uint32_t residue;
  };
  Graph k4 = parse_edge_list(kK4);
  const CornerRow k4_rows[] = {{2, 1, 7, 1}, {3, 1, 19, 2}, {2, 2, 37, 3}};
  for (const CornerRow& row : k4_rows) {
    ResidueReport r = c2_via_dodgson(k4, "k4", Field::make(row.p, row.s), quiet_cfg());
    CHECK(r.method == "dodgson");
    CHECK(*r.count == row.zeros);
    CHECK(r.value == row.residue);
  }
  Graph oct = oct_decompletion();
  const CornerRow oct_rows[] = {{2, 1, 29, 1}, {3, 1, 187, 2}};
  for (const CornerRow& row : oct_rows) {
    ResidueReport r = c2_via_dodgson(oct, "oct", Field::make(row.p, row.s), quiet_cfg());
    CHECK(*r.count == row.zeros);
    CHECK(r.value == row.residue);
  }
}

TEST_CASE("corner route agrees with the definition route") {
  Graph k4 = parse_edge_list(kK4);
  for (auto [p, s] : {std::pair{5u, 1u}, {7u, 1u}, {2u, 3u}, {3u, 2u}}) {
    Field f = Field::make(p, s);
    ResidueReport by_def = c2_via_definition(k4, "k4", f, quiet_cfg(2));
    ResidueReport by_corner = c2_via_dodgson(k4, "k4", f, quiet_cfg(2));
    CHECK(by_def.value == by_corner.value);
    // The full zero count is q^2 * (c2 + multiple of q).
    CHECK(*by_def.count % (std::uint64_t(f.q()) * f.q()) == 0);
  }
  Graph c7 = c7_decompletion();
  Field f2 = Field::make(2, 1);
  CHECK(c2_via_definition(c7, "c7", f2, quiet_cfg(2)).value ==
        c2_via_dodgson(c7, "c7", f2, quiet_cfg(2)).value);
}

TEST_CASE("corner identity: determinant side equals polynomial side") {
  Graph k4 = parse_edge_list(kK4);
  for (auto [p, s] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    CornerIdentityResult r =
        check_3valent_identity(k4, Field::make(p, s), quiet_cfg(2));
    CHECK(r.equal);
    CHECK(r.det_side == r.poly_side);
  }
  Graph oct = oct_decompletion();
  for (auto [p, s] : {std::pair{2u, 1u}, {3u, 1u}}) {
    CornerIdentityResult r =
        check_3valent_identity(oct, Field::make(p, s), quiet_cfg(2));
    CHECK(r.equal);
  }
}

TEST_CASE("corner pieces of K4") {
  Graph g = parse_edge_list(kK4);
  CornerPieces pieces = corner_pieces(g);
  CHECK(g.label(pieces.corner.v) == "a");
  CHECK(pieces.h.vertex_count() == 3);
  CHECK(kirchhoff(pieces.h).to_string() == "a1 + a2 + a3");
  REQUIRE(pieces.partition.parts.size() == 2);
  CHECK(pieces.h.label(pieces.partition.parts[0][0]) == "c");
  CHECK(forest_poly(pieces.h, pieces.partition).to_string() == "a1*a2");

  ThreeValentCorner wrong = pieces.corner;
  wrong.e1 = 3;
  CHECK_THROWS_AS(corner_pieces_at(g, wrong), Error);
}

TEST_CASE("route preconditions") {
  Field f2 = Field::make(2, 1);
  Graph split = parse_edge_list("a b\nc d\n");
  CHECK_THROWS_AS(c2_via_definition(split, "split", f2, quiet_cfg()), Error);
  // 4-regular: no corner to reduce at.
  Graph oct_completion = parse_edge_list(circulant_text(6, {1, 2}));
  CHECK_THROWS_AS(c2_via_dodgson(oct_completion, "oct_k", f2, quiet_cfg()), Error);
}
