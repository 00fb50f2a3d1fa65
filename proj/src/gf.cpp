#include "gf.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace c2inv {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimePower PrimePower::make(std::uint32_t p, std::uint32_t s) {
  if (!is_prime(p))
    fail(ErrorCode::invalid_argument, "p = " + std::to_string(p) + " is not prime");
  if (s == 0) fail(ErrorCode::invalid_argument, "exponent s must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < s; ++i) {
    q *= p;
    if (q > (1u << 16))
      fail(ErrorCode::invalid_argument,
           "q = p^s exceeds 2^16; exact field tables are desk-scale only");
  }
  return {p, s, static_cast<std::uint32_t>(q)};
}

namespace {

// Polynomials over F_p as little-endian coefficient vectors, no trailing
// zeros (the zero polynomial is the empty vector).
using Poly = std::vector<std::uint32_t>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return trim(std::move(c));
}

// Remainder of a by monic b.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  assert(!b.empty() && b.back() == 1);
  while (a.size() >= b.size()) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint32_t sub = (lead * b[i]) % p;
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    a = trim(std::move(a));
    if (a.size() >= b.size() && a.size() + b.size() == 0) break;  // unreachable
  }
  return a;
}

Poly code_to_poly(std::uint64_t code, std::uint32_t p) {
  Poly a;
  while (code) {
    a.push_back(code % p);
    code /= p;
  }
  return a;
}

std::uint32_t poly_to_code(const Poly& a, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return static_cast<std::uint32_t>(code);
}

// Trial division by all monic polynomials of degree <= deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  std::uint32_t deg = static_cast<std::uint32_t>(f.size()) - 1;
  if (deg == 0) return false;
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = code_to_poly(code, p);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree s, candidates ordered by the integer
// code of their non-leading coefficients.
Poly find_modulus(std::uint32_t p, std::uint32_t s) {
  if (s == 1) return {0, 1};  // x
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < s; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f = code_to_poly(code, p);
    f.resize(s + 1, 0);
    f[s] = 1;
    if (is_irreducible(f, p)) return f;
  }
  fail(ErrorCode::internal, "no irreducible polynomial found");
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t s) {
  return make_with_table_limit(p, s, 1024);
}

Field Field::make_with_table_limit(std::uint32_t p, std::uint32_t s,
                                   std::uint32_t table_limit) {
  Field f;
  f.pp_ = PrimePower::make(p, s);
  f.modulus_ = find_modulus(p, s);
  const std::uint32_t q = f.pp_.q;
  if (q <= table_limit) {
    f.add_table_.resize(std::size_t(q) * q);
    f.mul_table_.resize(std::size_t(q) * q);
    f.neg_table_.resize(q);
    f.inv_table_.assign(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      f.neg_table_[a] = f.slow_neg(a);
      for (std::uint32_t b = 0; b < q; ++b) {
        f.add_table_[std::size_t(a) * q + b] = f.slow_add(a, b);
        std::uint32_t m = f.slow_mul(a, b);
        f.mul_table_[std::size_t(a) * q + b] = m;
        if (m == 1) f.inv_table_[a] = b;
      }
    }
  }
  return f;
}

Fe Field::element(std::uint32_t code) const {
  if (code >= pp_.q)
    fail(ErrorCode::invalid_argument,
         "element code " + std::to_string(code) + " out of range for q = " +
             std::to_string(pp_.q));
  return {code, pp_.q};
}

Fe Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(pp_.p);
  if (r < 0) r += pp_.p;
  return {static_cast<std::uint32_t>(r), pp_.q};
}

std::vector<Fe> Field::all_elements() const {
  std::vector<Fe> out;
  out.reserve(pp_.q);
  for (std::uint32_t c = 0; c < pp_.q; ++c) out.push_back({c, pp_.q});
  return out;
}

std::uint32_t Field::slow_add(std::uint32_t a, std::uint32_t b) const {
  // Digit-wise addition mod p; no carries between digits.
  std::uint32_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < pp_.s; ++i) {
    out += ((a % pp_.p + b % pp_.p) % pp_.p) * mult;
    a /= pp_.p;
    b /= pp_.p;
    mult *= pp_.p;
  }
  return out;
}

std::uint32_t Field::slow_neg(std::uint32_t a) const {
  std::uint32_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < pp_.s; ++i) {
    out += ((pp_.p - a % pp_.p) % pp_.p) * mult;
    a /= pp_.p;
    mult *= pp_.p;
  }
  return out;
}

std::uint32_t Field::slow_mul(std::uint32_t a, std::uint32_t b) const {
  Poly pa = code_to_poly(a, pp_.p);
  Poly pb = code_to_poly(b, pp_.p);
  Poly prod = poly_rem(poly_mul(pa, pb, pp_.p), modulus_, pp_.p);
  return poly_to_code(prod, pp_.p);
}

std::uint32_t Field::raw_add(std::uint32_t a, std::uint32_t b) const {
  if (!add_table_.empty()) return add_table_[std::size_t(a) * pp_.q + b];
  return slow_add(a, b);
}

std::uint32_t Field::raw_mul(std::uint32_t a, std::uint32_t b) const {
  if (!mul_table_.empty()) return mul_table_[std::size_t(a) * pp_.q + b];
  return slow_mul(a, b);
}

std::uint32_t Field::raw_neg(std::uint32_t a) const {
  if (!neg_table_.empty()) return neg_table_[a];
  return slow_neg(a);
}

std::uint32_t Field::raw_inv(std::uint32_t a) const {
  if (a == 0) fail(ErrorCode::invalid_argument, "zero has no inverse");
  if (!inv_table_.empty()) return inv_table_[a];
  return raw_pow(a, pp_.q - 2);
}

std::uint32_t Field::raw_pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t out = pp_.q > 1 ? 1u : 0u;
  std::uint32_t base = a;
  while (e) {
    if (e & 1) out = raw_mul(out, base);
    base = raw_mul(base, base);
    e >>= 1;
  }
  return out;
}

Fe Field::inv(Fe a) const { return {raw_inv(check(a)), pp_.q}; }

Fe Field::pow(Fe a, std::uint64_t e) const { return {raw_pow(check(a), e), pp_.q}; }

std::uint32_t Field::coeff(Fe a, std::uint32_t i) const {
  std::uint32_t code = check(a);
  for (std::uint32_t k = 0; k < i; ++k) code /= pp_.p;
  return code % pp_.p;
}

void FieldMatrix::set(std::uint32_t r, std::uint32_t c, Fe v) {
  if (v.card != card_)
    fail(ErrorCode::invalid_argument, "matrix entry from a different field");
  data_[idx(r, c)] = v.code;
}

std::uint32_t determinant_raw(const Field& field, std::uint32_t* a,
                              std::uint32_t size, std::uint32_t stride) {
  bool negate = false;
  for (std::uint32_t col = 0; col < size; ++col) {
    std::uint32_t pivot = col;
    while (pivot < size && a[std::size_t(pivot) * stride + col] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      for (std::uint32_t j = col; j < size; ++j)
        std::swap(a[std::size_t(pivot) * stride + j], a[std::size_t(col) * stride + j]);
      negate = !negate;
    }
    const std::uint32_t inv_p = field.raw_inv(a[std::size_t(col) * stride + col]);
    for (std::uint32_t r = col + 1; r < size; ++r) {
      std::uint32_t head = a[std::size_t(r) * stride + col];
      if (head == 0) continue;
      std::uint32_t factor = field.raw_mul(head, inv_p);
      a[std::size_t(r) * stride + col] = 0;
      for (std::uint32_t j = col + 1; j < size; ++j) {
        std::uint32_t sub = field.raw_mul(factor, a[std::size_t(col) * stride + j]);
        a[std::size_t(r) * stride + j] =
            field.raw_add(a[std::size_t(r) * stride + j], field.raw_neg(sub));
      }
    }
  }
  std::uint32_t det = field.q() > 1 ? 1u : 0u;
  for (std::uint32_t i = 0; i < size; ++i)
    det = field.raw_mul(det, a[std::size_t(i) * stride + i]);
  return negate ? field.raw_neg(det) : det;
}

Fe determinant(const Field& field, const FieldMatrix& m) {
  if (m.rows() != m.cols())
    fail(ErrorCode::invalid_argument, "determinant requires a square matrix");
  if (m.card() != field.q())
    fail(ErrorCode::invalid_argument, "matrix belongs to a different field");
  std::vector<std::uint32_t> work = m.codes();
  return {determinant_raw(field, work.data(), m.rows(), m.cols()), field.q()};
}

}  // namespace c2inv
