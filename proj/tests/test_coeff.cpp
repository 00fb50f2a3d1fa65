#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "coeff.hpp"
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

MultilinearPoly poly_of(std::uint32_t num_vars, std::vector<EdgeSet> monomials) {
  MultilinearPoly f;
  f.num_vars = num_vars;
  f.monomials = std::move(monomials);
  return f;
}

RunConfig quiet_cfg() {
  RunConfig cfg;
  cfg.workers = 1;
  return cfg;
}

}  // namespace

TEST_CASE("base-p digits") {
  CHECK(base_p_digits(8, 3) == DigitVector{2, 2});
  CHECK(base_p_digits(0, 5) == DigitVector{});
  CHECK(base_p_digits(12, 2) == DigitVector{0, 0, 1, 1});
  for (std::uint64_t n : {0ull, 1ull, 7ull, 64ull, 12345ull})
    for (std::uint32_t p : {2u, 3u, 5u})
      CHECK(digits_to_value(base_p_digits(n, p), p) == n);
  CHECK_THROWS_AS(base_p_digits(3, 1), Error);
}

TEST_CASE("binomials mod p match the Pascal oracle") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    std::vector<std::vector<std::uint32_t>> row = {{1}};
    for (int n = 0; n <= 60; ++n) {
      for (int k = 0; k <= n; ++k)
        CHECK(lucas_binom(n, k, p) == row.back()[k]);
      std::vector<std::uint32_t> next(n + 2, 1);
      for (int k = 1; k <= n; ++k)
        next[k] = (row.back()[k - 1] + row.back()[k]) % p;
      row.push_back(std::move(next));
    }
  }
  CHECK(lucas_binom(4, 2, 2) == 0);
  CHECK(lucas_binom(7, 3, 2) == 1);
  CHECK(lucas_binom(6, 3, 2) == 0);  // 20
  CHECK(lucas_binom(6, 3, 3) == 2);
  CHECK(lucas_binom(5, 9, 3) == 0);  // k > n
  CHECK_THROWS_AS(lucas_binom(5, 2, 4), Error);
}

TEST_CASE("capped product of (x + y)^6") {
  MultilinearPoly xy = poly_of(2, {1, 2});
  for (auto [p, want] : {std::pair{2u, 0u}, {3u, 2u}, {7u, 6u}}) {
    CappedPolynomial acc({3, 3}, p, 1 << 16);
    for (int i = 0; i < 6; ++i) acc.multiply_by(xy);
    CHECK(acc.coefficient_at(std::vector<std::uint32_t>{3, 3}) == want);  // 20 mod p
  }
}

TEST_CASE("capped engine limits") {
  CHECK_THROWS_AS(CappedPolynomial({100, 100, 100}, 3, 1000), BudgetError);
  CHECK_THROWS_AS(CappedPolynomial({1, 1}, 257, 1 << 10), Error);
  CappedPolynomial ok({1, 1}, 2, 1 << 10);
  CHECK_THROWS_AS(ok.multiply_by(poly_of(3, {1})), Error);
  CHECK_THROWS_AS(ok.coefficient_at(std::vector<std::uint32_t>{2, 0}), Error);
}

TEST_CASE("p-th powers act on exponents digitwise") {
  // f^p == f(x^p) mod p: the coefficient at p*e is the coefficient at e,
  // and mixed exponents vanish.
  std::mt19937_64 rng(31);
  for (std::uint32_t p : {2u, 3u}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<EdgeSet> monomials;
      for (EdgeSet m = 0; m < 8; ++m)
        if (rng() & 1) monomials.push_back(m);
      if (monomials.empty()) monomials.push_back(0);
      MultilinearPoly f = poly_of(3, monomials);
      const EdgeSet e = rng() % 8;
      std::vector<std::uint32_t> target(3);
      for (int v = 0; v < 3; ++v) target[v] = ((e >> v) & 1) ? p : 0;
      FactorPower fp[] = {{&f, p}};
      std::uint32_t direct =
          std::binary_search(monomials.begin(), monomials.end(), e) ? 1u : 0u;
      CHECK(capped_coeff(fp, target, p, 1 << 16) == direct);
    }
    // An exponent not divisible by p has no term in f^p.
    MultilinearPoly f = poly_of(2, {0, 1, 2, 3});  // (1+x)(1+y)
    std::vector<std::uint32_t> off = {1, p};
    FactorPower fp[] = {{&f, p}};
    CHECK(capped_coeff(fp, off, p, 1 << 16) == 0);
  }
}

TEST_CASE("coefficient identity for the zero count") {
  // x1 * x2 over F_3: 5 zeros, n even, so the expected value is -5 mod 3.
  MultilinearPoly f = poly_of(2, {3});
  ChevalleyCheck c = chevalley_coeff_check(f, Field::make(3, 1), quiet_cfg());
  CHECK(c.zeros == 5);
  CHECK(c.expected == 1);
  CHECK(c.coeff == 1);
  CHECK(c.holds);

  // Degree 3 in 3 variables, mixed terms, a few fields.
  MultilinearPoly g = poly_of(3, {1, 2, 7});  // x1 + x2 + x1*x2*x3
  for (auto [p, s] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {3u, 2u}}) {
    ChevalleyCheck r = chevalley_coeff_check(g, Field::make(p, s), quiet_cfg());
    CHECK(r.holds);
  }

  // The triangle polynomial has degree 1 < 3 variables: hypothesis fails.
  Graph tri = parse_edge_list("a b\na c\nb c\n");
  CHECK_THROWS_AS(chevalley_coeff_check(kirchhoff(tri), Field::make(2, 1), quiet_cfg()),
                  Error);
}

TEST_CASE("power relation on hand-checked pairs") {
  MultilinearPoly x1 = poly_of(1, {1});
  MultilinearPoly one = poly_of(1, {0});
  PowerIdentitySides a = prop_both_sides(x1, one, PrimePower::make(2, 2), 1 << 16);
  CHECK(a.lhs == 1);
  CHECK(a.inner == 1);
  CHECK(a.rhs == 1);

  MultilinearPoly sum = poly_of(2, {1, 2});
  PowerIdentitySides b = prop_both_sides(sum, sum, PrimePower::make(2, 2), 1 << 16);
  CHECK(b.lhs == 0);  // binom(6,3) = 20
  CHECK(b.inner == 0);
  CHECK(b.rhs == 0);

  CHECK_THROWS_AS(prop_both_sides(x1, sum, PrimePower::make(2, 2), 1 << 16), Error);
}

TEST_CASE("power relation needs multilinear factors") {
  NonMultilinearWitness w = prop_counterexample_nonmultilinear();
  CHECK(w.lhs_coeff == 64);
  CHECK(w.inner_coeff == 0);
  CHECK(w.lhs_mod_p == 1);
  CHECK(w.rhs_mod_p == 0);
  CHECK(w.lhs_mod_p != w.rhs_mod_p);
}

TEST_CASE("coefficient identity only holds mod p, not mod q") {
  ScaledVariableWitness w = mod_q_sharpness_witness();
  CHECK(w.lhs_coeff == 256);
  CHECK(w.zeros_mod_q == 1);
  CHECK(w.lhs_mod_p == 1);  // matches the zero count mod 3
  CHECK(w.lhs_mod_q == 4);  // does not match it mod 9
  CHECK(w.lhs_mod_q != w.zeros_mod_q % 9);
}

TEST_CASE("coefficient route residues") {
  Graph k4 = parse_edge_list(kK4);
  struct Row {
    std::uint32_t p, s, want;
  };
  for (Row row : {Row{2, 1, 1}, {3, 1, 2}, {2, 2, 1}, {3, 2, 2}}) {
    ResidueReport r =
        c2_via_coefficient(k4, "k4", PrimePower::make(row.p, row.s), quiet_cfg());
    CHECK(r.method == "coefficient");
    CHECK(r.modulus == row.p);
    CHECK(r.value == row.want);
  }
  Graph oct = oct_decompletion();
  CHECK(c2_via_coefficient(oct, "oct", PrimePower::make(2, 1), quiet_cfg()).value == 1);
  CHECK(c2_via_coefficient(oct, "oct", PrimePower::make(3, 1), quiet_cfg()).value == 2);

  // |E| = 2(|V|-1) fails for the triangle.
  Graph tri = parse_edge_list("a b\na c\nb c\n");
  CHECK_THROWS_AS(c2_via_coefficient(tri, "tri", PrimePower::make(2, 1), quiet_cfg()),
                  Error);
}

TEST_CASE("tuple counting matches the capped coefficient") {
  Graph k4 = parse_edge_list(kK4);
  CornerPieces pieces = corner_pieces(k4);
  CHECK(count_tree_forest_tuples(pieces.h, pieces.partition, 1) == 1);

  for (const Graph& g : {k4, oct_decompletion()}) {
    for (std::uint32_t q : {2u, 3u}) {
      PrimePower pp = PrimePower::make(q, 1);
      PartitionCount pc = count_edge_partitions(g, pp, quiet_cfg());
      ResidueReport r = c2_via_coefficient(g, "g", pp, quiet_cfg());
      CHECK(pc.tuples % pp.p == *r.count % pp.p);
      CHECK(pc.c2_mod_p == r.value);
    }
  }

  PartitionCount k4q2 = count_edge_partitions(k4, PrimePower::make(2, 1), quiet_cfg());
  CHECK(k4q2.tuples == 1);
  CHECK(k4q2.c2_mod_p == 1);

  CHECK_THROWS_AS(count_edge_partitions(k4, PrimePower::make(2, 2), quiet_cfg()),
                  Error);
}

TEST_CASE("method table") {
  CHECK(method_from_name("auto") == C2Method::automatic);
  CHECK(method_from_name("definition") == C2Method::definition);
  CHECK(method_from_name("dodgson") == C2Method::dodgson);
  CHECK(method_from_name("coefficient") == C2Method::coefficient);
  CHECK(method_from_name("partition") == C2Method::partition);
  for (C2Method m : {C2Method::definition, C2Method::dodgson, C2Method::coefficient,
                     C2Method::partition})
    CHECK(method_from_name(method_name(m)) == m);
  CHECK_THROWS_AS(method_from_name("bogus"), Error);
}

TEST_CASE("automatic method selection prefers full mod-q routes") {
  Graph k4 = parse_edge_list(kK4);
  PrimePower q4 = PrimePower::make(2, 2);

  RunConfig roomy = quiet_cfg();
  ResidueReport a = compute_c2(k4, "k4", q4, C2Method::automatic, roomy);
  CHECK(a.method == "dodgson");
  CHECK(a.value == 3);
  CHECK(a.modulus == 4);

  RunConfig no_counting = quiet_cfg();
  no_counting.budget_evaluations = 10;
  no_counting.budget_states = 1000;
  ResidueReport b = compute_c2(k4, "k4", q4, C2Method::automatic, no_counting);
  CHECK(b.method == "coefficient");
  CHECK(b.modulus == 2);
  CHECK(b.value == 1);

  RunConfig bare = quiet_cfg();
  bare.budget_evaluations = 1;
  bare.budget_states = 1;
  ResidueReport c = compute_c2(k4, "k4", PrimePower::make(2, 1), C2Method::automatic, bare);
  CHECK(c.method == "partition");
  CHECK(c.value == 1);
  CHECK_THROWS_AS(compute_c2(k4, "k4", q4, C2Method::automatic, bare), BudgetError);
}

TEST_CASE("prime power consistency tables") {
  RunConfig cfg = quiet_cfg();
  cfg.workers = 2;
  Graph k4 = parse_edge_list(kK4);

  const std::uint32_t s123[] = {1, 2, 3};
  PowerRelationTable t2 = theorem1_verify(k4, "k4", 2, s123, cfg);
  CHECK(t2.c2_at_p == 1);
  CHECK(t2.rows.size() == 3);
  CHECK(t2.checked_rows() == 3);
  CHECK(t2.all_pass());
  CHECK(t2.rows[1].q == 4);
  CHECK(t2.rows[1].expected_mod_p == 1);  // -(1^2) mod 2

  const std::uint32_t s12[] = {1, 2};
  PowerRelationTable t3 = theorem1_verify(k4, "k4", 3, s12, cfg);
  CHECK(t3.c2_at_p == 2);
  CHECK(t3.all_pass());
  CHECK(t3.checked_rows() == 2);
  CHECK(t3.rows[1].lhs_mod_p == 2);       // c2 at q=9 reduced mod 3
  CHECK(t3.rows[1].expected_mod_p == 2);  // -(2^2) mod 3

  PowerRelationTable oct2 = theorem1_verify(oct_decompletion(), "oct", 2, s12, cfg);
  CHECK(oct2.all_pass());
  CHECK(oct2.checked_rows() == 2);

  // Out-of-range prime powers are skipped, not failed.
  const std::uint32_t s_huge[] = {1, 40};
  PowerRelationTable skip = theorem1_verify(k4, "k4", 2, s_huge, cfg);
  CHECK(skip.rows[1].skipped);
  CHECK_FALSE(skip.rows[0].skipped);
  CHECK(skip.all_pass());
  CHECK(skip.checked_rows() == 1);
}
