#pragma once

// Exact arithmetic in F_q, q = p^r, with elements stored as canonical
// integers 0..q-1: base-p digits, lowest digit = constant coefficient.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rdsys {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Largest field order this library materializes tables for.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

class Field {
 public:
  using Value = std::uint32_t;

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return r_; }
  std::uint32_t order() const { return q_; }
  /// Monic modulus, low degree first; size degree()+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Value zero() const { return 0; }
  Value one() const { return 1; }
  /// Image of an integer in the prime subfield.
  Value from_int(std::int64_t n) const;

  Value add(Value a, Value b) const;
  Value sub(Value a, Value b) const;
  Value neg(Value a) const;
  Value mul(Value a, Value b) const;
  Value inv(Value a) const;  // throws std::domain_error on zero
  Value div(Value a, Value b) const { return mul(a, inv(b)); }
  Value pow(Value a, std::uint64_t e) const;

  bool is_square(Value a) const;
  /// A fixed generator of the multiplicative group.
  Value primitive_element() const { return exp_.size() > 1 ? exp_[1] : exp_[0]; }
  std::uint32_t multiplicative_order(Value a) const;

  std::vector<std::uint32_t> coefficients(Value a) const;
  Value from_coefficients(std::span<const std::uint32_t> c) const;

  std::string name() const;

  friend FieldPtr field_make(std::uint32_t p, std::uint32_t r);

 private:
  Field(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus);

  Value poly_mul(Value a, Value b) const;

  std::uint32_t p_;
  std::uint32_t r_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Value> exp_;          // exp_[k] = g^k, k in [0, q-1)
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
};

/// Builds F_{p^r} with the lexicographically least monic irreducible modulus
/// (coefficients compared constant term first). Throws std::invalid_argument
/// for non-prime p, r == 0 or p^r > kMaxFieldOrder.
FieldPtr field_make(std::uint32_t p, std::uint32_t r);

bool is_prime(std::uint64_t n);
/// (p, r) with q = p^r; throws std::invalid_argument when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q);

/// Monic polynomial irreducibility over F_p by trial division against every
/// monic polynomial of degree 1..deg/2. Coefficients low degree first.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

/// Value type pairing a canonical integer with its (non-owning) field.
class FieldElement {
 public:
  FieldElement(const Field& f, Field::Value v) : field_(&f), value_(v) {}

  Field::Value value() const { return value_; }
  const Field& field() const { return *field_; }
  std::vector<std::uint32_t> coefficients() const { return field_->coefficients(value_); }

  FieldElement operator+(FieldElement o) const { return {*field_, field_->add(value_, o.value_)}; }
  FieldElement operator-(FieldElement o) const { return {*field_, field_->sub(value_, o.value_)}; }
  FieldElement operator*(FieldElement o) const { return {*field_, field_->mul(value_, o.value_)}; }
  FieldElement operator/(FieldElement o) const { return {*field_, field_->div(value_, o.value_)}; }
  FieldElement operator-() const { return {*field_, field_->neg(value_)}; }
  bool operator==(const FieldElement& o) const { return value_ == o.value_; }

 private:
  const Field* field_;
  Field::Value value_;
};

/// First element in canonical order that is not a square. Requires odd q.
Field::Value least_nonsquare(const Field& f);

/// All (u, v) with u^2 - eps*v^2 = c, sorted. eps must be a nonsquare.
std::vector<std::pair<Field::Value, Field::Value>> pell_solutions(const Field& f, Field::Value eps,
                                                                  Field::Value c);

/// Dense matrix over a field, row-major.
struct FieldMatrix {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<Field::Value> data;

  FieldMatrix() = default;
  FieldMatrix(std::uint32_t r, std::uint32_t c) : rows(r), cols(c), data(std::size_t(r) * c, 0) {}

  Field::Value& at(std::uint32_t i, std::uint32_t j) { return data[std::size_t(i) * cols + j]; }
  Field::Value at(std::uint32_t i, std::uint32_t j) const { return data[std::size_t(i) * cols + j]; }
  bool operator==(const FieldMatrix&) const = default;
};

FieldMatrix identity_matrix(std::uint32_t n);
FieldMatrix mat_mul(const Field& f, const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix mat_add(const Field& f, const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix mat_neg(const Field& f, const FieldMatrix& a);
std::vector<Field::Value> mat_apply(const Field& f, const FieldMatrix& a,
                                    std::span<const Field::Value> v);
Field::Value determinant(const Field& f, FieldMatrix a);

}  // namespace rdsys
