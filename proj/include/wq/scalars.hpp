#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "wq/error.hpp"

namespace wq {

enum class FieldKind { RationalExact, RealExact, PrimeField };

/// The coefficient field. RealExact stores rationals but answers sign and
/// square-class questions as the real numbers would.
class FieldSpec {
 public:
  static FieldSpec rational() { return FieldSpec(FieldKind::RationalExact, 0); }
  static FieldSpec real() { return FieldSpec(FieldKind::RealExact, 0); }
  // Throws InvalidArgument unless p is an odd prime.
  static FieldSpec prime(std::uint64_t p);

  FieldKind kind() const noexcept { return kind_; }
  std::uint64_t p() const noexcept { return p_; }
  bool is_prime_field() const noexcept { return kind_ == FieldKind::PrimeField; }
  bool is_ordered() const noexcept { return kind_ != FieldKind::PrimeField; }

  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  FieldKind kind_;
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

class Scalar {
 public:
  Scalar(FieldSpec field, long value);
  Scalar(FieldSpec field, const mpq_class& value);

  static Scalar zero(FieldSpec field) { return Scalar(field, 0L); }
  static Scalar one(FieldSpec field) { return Scalar(field, 1L); }
  // Accepts "a", "-a" or "a/b". Residues are reduced mod p.
  static Scalar parse(FieldSpec field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  // Only valid for ordered fields.
  const mpq_class& rational() const;
  // Only valid for prime fields.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;
  // Negates in place when sign < 0.
  Scalar& apply_sign(int sign);

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& rhs) const;

  FieldSpec field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

enum class ScalarOp { Add, Sub, Mul, Div };

Scalar field_arithmetic(const Scalar& x, const Scalar& y, ScalarOp op);

bool is_square(const Scalar& x);

// -1, 0 or +1. UnsupportedField for prime fields.
int signum(const Scalar& x);

}  // namespace wq
