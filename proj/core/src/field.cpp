#include "kdual/field.hpp"

#include <charconv>
#include <ostream>

#include "kdual/errors.hpp"

namespace kdual {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw FieldError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return FieldSpec(FieldKind::prime_field, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() > 3 && text.substr(0, 3) == "Fp:") {
    std::uint64_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw FieldError("unknown field '" + std::string(text) + "' (expected Q or Fp:P)");
}

std::string FieldSpec::name() const {
  if (is_rational()) return "Q";
  return "Fp:" + std::to_string(characteristic_);
}

mpq_class FieldSpec::normalize(const mpq_class& value) const {
  if (is_rational()) {
    mpq_class v(value);
    v.canonicalize();
    return v;
  }
  mpz_class p(static_cast<unsigned long>(characteristic_));
  mpz_class den = value.get_den() % p;
  if (den == 0)
    throw FieldError("denominator of " + value.get_str() + " vanishes in " + name());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (value.get_num() * inv) % p;
  if (r < 0) r += p;
  return mpq_class(r);
}

Scalar::Scalar(FieldSpec field, const mpq_class& value)
    : field_(field), value_(field.normalize(value)) {}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw FieldError("empty coefficient");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw FieldError("malformed coefficient '" + std::string(text) + "'");
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw FieldError("malformed coefficient '" + std::string(text) + "'");
    std::string s(part[0] == '+' ? part.substr(1) : part);
    return mpz_class(s, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(field, mpq_class(parse_int(text)));
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0) throw FieldError("zero denominator in '" + std::string(text) + "'");
  return Scalar(field, mpq_class(num, den));
}

namespace {

void require_same(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field()))
    throw FieldError("mixed fields: " + a.field().name() + " and " + b.field().name());
}

}  // namespace

Scalar Scalar::operator-() const { return Scalar(field_, -value_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  return Scalar(field_, 1 / value_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return Scalar(a.field_, a.value_ + b.value_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return Scalar(a.field_, a.value_ - b.value_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return Scalar(a.field_, a.value_ * b.value_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return a * b.inverse();
}

std::string Scalar::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace kdual
