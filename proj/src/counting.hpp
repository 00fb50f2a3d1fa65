#ifndef C2INV_COUNTING_HPP
#define C2INV_COUNTING_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "config.hpp"
#include "gf.hpp"
#include "graph.hpp"
#include "poly.hpp"

namespace c2inv {

// A per-worker predicate instance; eval receives nvars raw codes.
struct ZeroTest {
  virtual ~ZeroTest() = default;
  virtual bool is_zero_at(const std::uint32_t* point_codes) = 0;
};

using ZeroTestFactory = std::function<std::unique_ptr<ZeroTest>()>;

struct PointCount {
  std::string polynomial_id;
  PrimePower field;
  std::uint32_t num_vars = 0;
  std::uint64_t domain_size = 0;
  std::uint64_t zeros = 0;
};

// Exhaustive count of zeros over F_q^nvars.  Rejects up front when q^nvars
// exceeds the evaluation budget.  The domain is split into one contiguous
// code range per worker, so the result does not depend on the worker count.
PointCount point_count(const std::string& polynomial_id, const Field& field,
                       std::uint32_t nvars, const ZeroTestFactory& make_test,
                       const RunConfig& cfg);

// One computed residue.  `count` is the raw integer behind the residue:
// the full zero count for the definition route, the corner-product zero
// count for the corner route.
struct ResidueReport {
  std::string graph_id;
  std::uint32_t p = 0, s = 0, q = 0;
  std::string method;
  std::uint32_t modulus = 0;  // q for point-count routes, p for coefficient
  std::uint32_t value = 0;    // residue in [0, modulus)
  std::optional<std::uint64_t> count;
  double runtime_ms = 0.0;
};

// Definition route: [Psi]_q / q^2 mod q.  Errors if the zero count is not
// divisible by q^2 (that would be an implementation bug, not an input flaw).
ResidueReport c2_via_definition(const Graph& g, const std::string& graph_id,
                                const Field& field, const RunConfig& cfg);

// Corner route: minus the zero count of the product of the two corner
// minors-as-determinants over the non-corner variables, mod q.  The three
// corner variables stay fixed at zero.
ResidueReport c2_via_dodgson(const Graph& g, const std::string& graph_id,
                             const Field& field, const RunConfig& cfg);
ResidueReport c2_via_dodgson_at(const Graph& g, const std::string& graph_id,
                                const ThreeValentCorner& corner,
                                const Field& field, const RunConfig& cfg);

// Checks the corner identity behind the corner route: the product of the
// two corner determinants and the product Psi_H * Phi_H (H = the graph
// minus the corner vertex, Phi for the partition {b},{a,c}) have the same
// zero count over F_q^(N-3).  Returns both counts.
struct CornerIdentityResult {
  std::uint64_t det_side = 0;
  std::uint64_t poly_side = 0;
  bool equal = false;
};
CornerIdentityResult check_3valent_identity(const Graph& g, const Field& field,
                                            const RunConfig& cfg);

// The corner-route ingredients, exposed for reuse by the coefficient route:
// H = g minus the corner vertex, with the induced partition {b},{a,c} given
// in H's vertex ids.
struct CornerPieces {
  ThreeValentCorner corner;
  Graph h;
  VertexPartition partition;  // parts {b}, {a, c} in h ids
};
CornerPieces corner_pieces(const Graph& g);
CornerPieces corner_pieces_at(const Graph& g, const ThreeValentCorner& corner);

}  // namespace c2inv

#endif
