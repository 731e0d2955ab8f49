#include "hesse/field.hpp"

#include <cctype>
#include <charconv>
#include <string>

namespace hesse {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_ui();
}

// Extended Euclid on residues; `a` is nonzero and p is prime.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

mpz_class parse_integer(std::string_view text) {
  text = trim(text);
  std::string digits(text);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  if (digits.empty() || digits == "-") {
    throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  for (std::size_t i = digits.front() == '-' ? 1 : 0; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  return mpz_class(digits, 10);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::make(const FieldSpec& spec) {
  if (spec.kind == FieldKind::rationals) return rationals();
  if (spec.modulus == 2) {
    throw CharacteristicTwoError("GF(2) has characteristic 2; only odd primes are supported");
  }
  if (spec.modulus >= kMaxModulus) {
    throw UnsupportedFieldError("modulus " + std::to_string(spec.modulus) +
                                " exceeds the supported bound 2^32");
  }
  if (!is_prime(spec.modulus)) {
    throw NotPrimeError("modulus " + std::to_string(spec.modulus) + " is not prime");
  }
  return Field(spec);
}

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "rationals" || text == "Q") return rationals();
  if (text.substr(0, 3) == "gf:" || text.substr(0, 3) == "GF:") {
    const auto digits = text.substr(3);
    std::uint64_t p = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw ParseError("invalid field modulus in '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected \"rationals\" or \"gf:p\")");
}

std::string Field::name() const {
  return is_finite() ? "gf:" + std::to_string(spec_.modulus) : "rationals";
}

Scalar Scalar::zero(const Field& field) { return from_int(field, 0); }
Scalar Scalar::one(const Field& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const Field& field, long long value) {
  if (field.is_finite()) {
    const auto p = static_cast<long long>(field.modulus());
    long long r = value % p;
    if (r < 0) r += p;
    return Scalar(field, static_cast<std::uint64_t>(r));
  }
  return Scalar(field, mpq_class(mpz_class(static_cast<long>(value))));
}

Scalar Scalar::from_fraction(const Field& field, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZeroError("zero denominator");
  if (field.is_finite()) {
    const auto p = field.modulus();
    const auto d = reduce(den, p);
    if (d == 0) throw DivisionByZeroError("denominator vanishes mod " + std::to_string(p));
    return Scalar(field, reduce(num, p) * inverse_mod(d, p) % p);
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(field, std::move(q));
}

Scalar Scalar::from_rational(const mpq_class& value) {
  mpq_class q(value);
  q.canonicalize();
  return Scalar(Field::rationals(), std::move(q));
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
  auto body = trim(text);
  if (const auto pos = body.find("mod"); pos != std::string_view::npos) {
    const auto modulus = parse_integer(body.substr(pos + 3));
    if (!field.is_finite() || modulus != mpz_class(std::to_string(field.modulus()))) {
      throw FieldMismatchError("scalar '" + std::string(text) + "' does not belong to " +
                               field.name());
    }
    body = trim(body.substr(0, pos));
  }
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    return from_fraction(field, parse_integer(body.substr(0, slash)),
                         parse_integer(body.substr(slash + 1)));
  }
  return from_fraction(field, parse_integer(body), 1);
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!std::holds_alternative<mpq_class>(value_)) {
    throw FieldMismatchError("rational() called on an element of " + field_.name());
  }
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (!std::holds_alternative<std::uint64_t>(value_)) {
    throw FieldMismatchError("residue() called on a rational");
  }
  return std::get<std::uint64_t>(value_);
}

void Scalar::require_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw FieldMismatchError("cannot combine elements of " + field_.name() + " and " +
                             other.field_.name());
  }
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) {
    return Scalar(field_, *r == 0 ? 0 : field_.modulus() - *r);
  }
  return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero");
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) {
    return Scalar(field_, inverse_mod(*r, field_.modulus()));
  }
  return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    *r = (*r + std::get<std::uint64_t>(rhs.value_)) % field_.modulus();
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    const auto p = field_.modulus();
    *r = (*r + p - std::get<std::uint64_t>(rhs.value_)) % p;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    *r = *r * std::get<std::uint64_t>(rhs.value_) % field_.modulus();
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  if (rhs.is_zero()) throw DivisionByZeroError("division by zero");
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    const auto p = field_.modulus();
    *r = *r * inverse_mod(std::get<std::uint64_t>(rhs.value_), p) % p;
  } else {
    std::get<mpq_class>(value_) /= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (const auto* r = std::get_if<std::uint64_t>(&a.value_)) {
    return *r == std::get<std::uint64_t>(b.value_);
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

std::string Scalar::to_qualified_string() const {
  if (field_.is_finite()) return to_string() + " mod " + std::to_string(field_.modulus());
  return to_string();
}

}  // namespace hesse
