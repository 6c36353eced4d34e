#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "msrlab/error.hpp"

namespace msrlab {

/// Canonical element encoding: the integer sum c_i * p^i of the coefficient
/// vector (c_0, ..., c_{m-1}) of the polynomial basis, so every element of
/// GF(p^m) has exactly one value in [0, p^m).
using Elem = std::uint32_t;

/// Finite field GF(p^m), q <= 2^16.
///
/// Multiplication goes through exp/log tables built from a primitive element
/// at construction; addition is digit-wise mod p (XOR when p == 2). Instances
/// are immutable and shared through FieldPtr.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Builds GF(p) when m == 1, otherwise GF(p)[x]/(poly) with poly given
  /// low-to-high, monic and of degree m.
  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t m = 1,
                                           std::vector<std::uint32_t> poly = {});

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Empty for prime fields.
  const std::vector<std::uint32_t>& poly() const noexcept { return poly_; }

  bool contains(Elem a) const noexcept { return a < q_; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Generator of the multiplicative group used for the tables.
  Elem primitive() const noexcept { return exp_.size() > 1 ? exp_[1] : 1; }

  bool operator==(const Field& other) const noexcept {
    return p_ == other.p_ && m_ == other.m_ && poly_ == other.poly_;
  }

  std::string name() const;

  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> poly);

 private:
  Elem slow_mul(Elem a, Elem b) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> poly_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;

bool is_prime(std::uint64_t v) noexcept;

/// Exhaustive factor search over monic polynomials of degree <= m/2.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

/// Smallest monic irreducible polynomial of degree m over GF(p) in the
/// canonical encoding order (coefficients low-to-high, leading 1 included).
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t m);

/// Field element bound to its field; mixing fields throws FieldMismatch.
class FieldElem {
 public:
  FieldElem(FieldPtr field, Elem value);

  const FieldPtr& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;

  bool operator==(const FieldElem& o) const noexcept {
    return value_ == o.value_ && same_field(field_, o.field_);
  }

 private:
  void require_same(const FieldElem& o) const;

  FieldPtr field_;
  Elem value_;
};

enum class ArithOp { Add, Mul, Neg, Inv };

FieldElem arith(ArithOp op, const FieldElem& a, const std::optional<FieldElem>& b = std::nullopt);

}  // namespace msrlab
