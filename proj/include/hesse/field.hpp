#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "hesse/errors.hpp"

namespace hesse {

enum class FieldKind { rationals, prime_field };

/// Unvalidated description of a ground field. `modulus` is ignored for rationals.
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::uint64_t modulus = 0;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    if (a.kind != b.kind) return false;
    return a.kind == FieldKind::rationals || a.modulus == b.modulus;
  }
};

/// A validated ground field of characteristic != 2: either Q or GF(p) for an odd prime p.
///
/// Residues are held in 64-bit words, so the modulus is limited to p < 2^32
/// which keeps every product of two residues inside a uint64_t.
class Field {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

  /// Throws CharacteristicTwoError for p = 2 and NotPrimeError for composite p.
  static Field make(const FieldSpec& spec);
  static Field rationals() { return Field(FieldSpec{FieldKind::rationals, 0}); }
  static Field prime(std::uint64_t p) { return make({FieldKind::prime_field, p}); }

  /// Parses "rationals" or "gf:p".
  static Field parse(std::string_view text);

  FieldKind kind() const noexcept { return spec_.kind; }
  bool is_finite() const noexcept { return spec_.kind == FieldKind::prime_field; }
  /// 0 for the rationals.
  std::uint64_t modulus() const noexcept {
    return is_finite() ? spec_.modulus : 0;
  }
  const FieldSpec& spec() const noexcept { return spec_; }

  /// "rationals" or "gf:p"; round-trips through parse().
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.spec_ == b.spec_;
  }

 private:
  explicit Field(FieldSpec spec) : spec_(spec) {}
  FieldSpec spec_;
};

bool is_prime(std::uint64_t n);

/// An exact element of a Field. Always canonical: rationals are in lowest terms
/// with positive denominator, residues lie in [0, p).
class Scalar {
 public:
  static Scalar zero(const Field& field);
  static Scalar one(const Field& field);
  static Scalar from_int(const Field& field, long long value);
  /// num/den reduced to lowest terms over Q, or num * den^-1 over GF(p).
  static Scalar from_fraction(const Field& field, const mpz_class& num,
                              const mpz_class& den);
  static Scalar from_rational(const mpq_class& value);

  /// Accepts "n", "n/d" and, over GF(p), "r mod p".
  static Scalar parse(const Field& field, std::string_view text);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Only valid over Q.
  const mpq_class& rational() const;
  /// Only valid over GF(p).
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar inv() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Throws FieldMismatchError when the fields differ.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "n", "n/d" or the bare residue "r".
  std::string to_string() const;
  /// Like to_string() but residues carry their modulus: "r mod p".
  std::string to_qualified_string() const;

 private:
  Scalar(Field field, std::uint64_t residue) : field_(field), value_(residue) {}
  Scalar(Field field, mpq_class value)
      : field_(field), value_(std::move(value)) {}

  void require_same_field(const Scalar& other) const;

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

}  // namespace hesse
