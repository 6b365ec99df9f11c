#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kdual {

enum class FieldKind { rationals, prime_field };

/// The ground field: the rationals or a prime field F_p.
///
/// Prime fields are restricted to p < 2^31 so residues multiply without
/// overflow in 64 bits.
class FieldSpec {
 public:
  /// Defaults to the rationals.
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws FieldError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q" or "Fp:P".
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const noexcept { return kind_; }
  std::uint64_t characteristic() const noexcept { return characteristic_; }
  bool is_rational() const noexcept { return kind_ == FieldKind::rationals; }

  /// "Q" or "Fp:P"; inverse of parse.
  std::string name() const;

  /// Brings an exact rational into canonical form for this field. For F_p the
  /// result is the residue in [0, p); a denominator divisible by p throws.
  mpq_class normalize(const mpq_class& value) const;

  bool operator==(const FieldSpec&) const = default;

 private:
  FieldSpec(FieldKind kind, std::uint64_t characteristic)
      : kind_(kind), characteristic_(characteristic) {}

  FieldKind kind_ = FieldKind::rationals;
  std::uint64_t characteristic_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact field element tagged with its field.
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() = default;
  Scalar(FieldSpec field, const mpq_class& value);
  Scalar(FieldSpec field, long value) : Scalar(field, mpq_class(value)) {}

  static Scalar zero(FieldSpec field) { return Scalar(field, 0L); }
  static Scalar one(FieldSpec field) { return Scalar(field, 1L); }
  /// Parses a decimal integer or "p/q".
  static Scalar parse(FieldSpec field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }
  /// Canonical representative: lowest terms for Q, residue in [0, p) for F_p.
  const mpq_class& value() const noexcept { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  /// "3", "-1/2", or the residue for F_p.
  std::string to_string() const;

 private:
  FieldSpec field_;
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// (-1)^n as a field element.
inline Scalar sign_scalar(FieldSpec field, long n) { return Scalar(field, (n % 2 == 0) ? 1L : -1L); }

/// Parity of n, correct for negative n.
constexpr bool is_odd(long n) { return (n % 2) != 0; }

}  // namespace kdual
