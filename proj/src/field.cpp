#include "rankone/field.hpp"

#include <cctype>
#include <tuple>
#include <utility>

namespace rankone {

namespace {

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

// Parses `-?[0-9]+` into an mpz; throws ParseError otherwise.
mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw ParseError("malformed scalar '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("malformed scalar '" + std::string(whole) + "'");
    }
  }
  return mpz_class(std::string(text), 10);
}

struct Fraction {
  mpz_class num;
  mpz_class den;
};

Fraction parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_integer(text, text), 1};
  return {parse_integer(text.substr(0, slash), text), parse_integer(text.substr(slash + 1), text)};
}

std::int64_t reduce(std::int64_t v, std::uint32_t p) {
  const auto m = static_cast<std::int64_t>(p);
  v %= m;
  return v < 0 ? v + m : v;
}

std::uint32_t common_modulus(const Zp& a, const Zp& b) {
  if (a.modulus() != 0 && b.modulus() != 0 && a.modulus() != b.modulus()) {
    throw DimensionMismatch("mixing residues of different moduli");
  }
  return a.modulus() != 0 ? a.modulus() : b.modulus();
}

}  // namespace

// -- Rational ---------------------------------------------------------------

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational invert(const Rational& x) {
  if (x.is_zero()) throw DivisionByZero("inverse of zero");
  return Rational(1) / x;
}

Rational RationalField::parse(std::string_view text) const {
  const Fraction f = parse_fraction(text);
  if (f.den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(f.num, f.den);
}

// -- Zp ---------------------------------------------------------------------

Zp::Zp(std::int64_t v, std::uint32_t p) : v_(reduce(v, p)), p_(p) {}

Zp Zp::in_modulus(std::uint32_t p) const {
  if (p_ != 0) return *this;
  return Zp(v_, p);
}

Zp& Zp::operator+=(const Zp& o) {
  const std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    v_ += o.v_;
    return *this;
  }
  *this = Zp(in_modulus(p).v_ + o.in_modulus(p).v_, p);
  return *this;
}

Zp& Zp::operator-=(const Zp& o) {
  const std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    v_ -= o.v_;
    return *this;
  }
  *this = Zp(in_modulus(p).v_ - o.in_modulus(p).v_, p);
  return *this;
}

Zp& Zp::operator*=(const Zp& o) {
  const std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    v_ *= o.v_;
    return *this;
  }
  // Both residues are below 2^31, so the product fits in 62 bits.
  *this = Zp(in_modulus(p).v_ * o.in_modulus(p).v_, p);
  return *this;
}

Zp& Zp::operator/=(const Zp& o) { return *this *= invert(o); }

Zp operator-(const Zp& a) {
  if (a.p_ == 0) return Zp(-a.v_);
  return Zp(-a.v_, a.p_);
}

bool operator==(const Zp& a, const Zp& b) {
  const std::uint32_t p = common_modulus(a, b);
  if (p == 0) return a.v_ == b.v_;
  return a.in_modulus(p).v_ == b.in_modulus(p).v_;
}

std::strong_ordering operator<=>(const Zp& a, const Zp& b) {
  const std::uint32_t p = common_modulus(a, b);
  if (p == 0) return a.v_ <=> b.v_;
  return a.in_modulus(p).v_ <=> b.in_modulus(p).v_;
}

Zp invert(const Zp& x) {
  if (x.is_zero()) throw DivisionByZero("inverse of zero residue");
  if (x.is_literal()) {
    if (x.value() == 1 || x.value() == -1) return x;
    throw PreconditionError("cannot invert an integer literal without a modulus");
  }
  // Extended Euclid on (value, p).
  std::int64_t r0 = x.modulus(), r1 = x.value();
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  return Zp(s0, x.modulus());
}

// -- Field descriptors ------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 2 || p > kMaxPrime || !is_prime(p)) {
    throw PreconditionError("field characteristic " + std::to_string(p) +
                            " is not a prime in [2, 2^31]");
  }
  return FieldSpec{Kind::PrimeField, static_cast<std::uint32_t>(p)};
}

std::string FieldSpec::name() const {
  return kind == Kind::Rationals ? "Q" : "F_" + std::to_string(p);
}

PrimeField::PrimeField(std::uint32_t prime) : p(FieldSpec::prime(prime).p) {}

PrimeField::PrimeField(const FieldSpec& spec) : p(spec.p) {
  if (!spec.is_prime_field()) throw PreconditionError("field spec is not a prime field");
  FieldSpec::prime(spec.p);
}

Zp PrimeField::parse(std::string_view text) const {
  const Fraction f = parse_fraction(text);
  const mpz_class m(static_cast<unsigned long>(p));
  mpz_class num = f.num % m;
  mpz_class den = f.den % m;
  if (num < 0) num += m;
  if (den < 0) den += m;
  if (den == 0) {
    throw ParseError("denominator of '" + std::string(text) + "' vanishes mod " +
                     std::to_string(p));
  }
  return Zp(static_cast<std::int64_t>(num.get_si()), p) /
         Zp(static_cast<std::int64_t>(den.get_si()), p);
}

}  // namespace rankone
