#ifndef C2INV_GF_HPP
#define C2INV_GF_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "error.hpp"

namespace c2inv {

bool is_prime(std::uint32_t n);

// A validated prime power q = p^s with q <= 2^16.
struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t s = 0;
  std::uint32_t q = 0;

  static PrimePower make(std::uint32_t p, std::uint32_t s);
};

// Field element: a code in [0, q) encoding the base-p digit vector of the
// residue polynomial, little-endian (code = sum c_i p^i).  The card tag is
// the field size of the owning Field; ops reject elements from a different
// field instead of silently mixing them.
struct FieldElement {
  std::uint32_t code = 0;
  std::uint32_t card = 0;

  friend bool operator==(FieldElement a, FieldElement b) {
    return a.code == b.code && a.card == b.card;
  }
  friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }
};

using Fe = FieldElement;

// GF(p^s) with a deterministic modulus: the smallest monic irreducible of
// degree s when candidates are ordered by the integer code of their
// non-leading coefficients.  For s = 1 the modulus is x and elements are
// plain residues mod p.
class Field {
public:
  static Field make(std::uint32_t p, std::uint32_t s);
  // Same field, but lookup tables are only built when q <= table_limit.
  // The fallback path computes products digit-by-digit; exposed so tests can
  // cross-check the two paths.
  static Field make_with_table_limit(std::uint32_t p, std::uint32_t s,
                                     std::uint32_t table_limit);

  std::uint32_t p() const { return pp_.p; }
  std::uint32_t s() const { return pp_.s; }
  std::uint32_t q() const { return pp_.q; }
  const PrimePower& prime_power() const { return pp_; }

  // Monic modulus, little-endian, s+1 coefficients in [0, p).
  std::span<const std::uint32_t> modulus() const { return modulus_; }

  Fe zero() const { return {0, pp_.q}; }
  Fe one() const { return {pp_.q > 1 ? 1u : 0u, pp_.q}; }
  Fe element(std::uint32_t code) const;
  // Embeds n via the prime subfield: n mod p as the constant digit.
  Fe from_int(std::int64_t n) const;
  // All q elements in increasing code order.
  std::vector<Fe> all_elements() const;

  bool is_zero(Fe a) const { return check(a) == 0; }
  Fe add(Fe a, Fe b) const { return {raw_add(check(a), check(b)), pp_.q}; }
  Fe sub(Fe a, Fe b) const { return {raw_add(check(a), raw_neg(check(b))), pp_.q}; }
  Fe mul(Fe a, Fe b) const { return {raw_mul(check(a), check(b)), pp_.q}; }
  Fe neg(Fe a) const { return {raw_neg(check(a)), pp_.q}; }
  Fe inv(Fe a) const;
  Fe pow(Fe a, std::uint64_t e) const;

  // i-th base-p digit of the element's code (coefficient of x^i).
  std::uint32_t coeff(Fe a, std::uint32_t i) const;

  // Raw-code ops for hot loops; callers guarantee codes < q.
  std::uint32_t raw_add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t raw_neg(std::uint32_t a) const;
  std::uint32_t raw_inv(std::uint32_t a) const;
  std::uint32_t raw_pow(std::uint32_t a, std::uint64_t e) const;

  bool has_tables() const { return !mul_table_.empty(); }

private:
  Field() = default;

  std::uint32_t check(Fe a) const {
    if (a.card != pp_.q)
      fail(ErrorCode::invalid_argument,
           "field element belongs to a field of different size");
    return a.code;
  }

  std::uint32_t slow_add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t slow_neg(std::uint32_t a) const;

  PrimePower pp_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_table_;  // q*q, empty when q > table limit
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> inv_table_;  // inv_table_[0] unused
};

// Dense matrix over one field; entries are raw codes, row-major.
class FieldMatrix {
public:
  FieldMatrix(std::uint32_t rows, std::uint32_t cols, const Field& field)
      : rows_(rows), cols_(cols), card_(field.q()), data_(std::size_t(rows) * cols, 0) {}

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  std::uint32_t card() const { return card_; }

  Fe at(std::uint32_t r, std::uint32_t c) const { return {data_[idx(r, c)], card_}; }
  void set(std::uint32_t r, std::uint32_t c, Fe v);

  std::uint32_t raw(std::uint32_t r, std::uint32_t c) const { return data_[idx(r, c)]; }
  void set_raw(std::uint32_t r, std::uint32_t c, std::uint32_t code) { data_[idx(r, c)] = code; }

  std::vector<std::uint32_t>& codes() { return data_; }
  const std::vector<std::uint32_t>& codes() const { return data_; }

private:
  std::size_t idx(std::uint32_t r, std::uint32_t c) const {
    return std::size_t(r) * cols_ + c;
  }

  std::uint32_t rows_, cols_, card_;
  std::vector<std::uint32_t> data_;
};

// Determinant by Gaussian elimination with row swaps (sign tracked).
Fe determinant(const Field& field, const FieldMatrix& m);

// In-place determinant over raw codes; `size` rows of `stride` columns.
// Destroys the buffer contents.
std::uint32_t determinant_raw(const Field& field, std::uint32_t* data,
                              std::uint32_t size, std::uint32_t stride);

}  // namespace c2inv

#endif
