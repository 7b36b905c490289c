#ifndef RANKONE_FIELD_HPP
#define RANKONE_FIELD_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <Eigen/Core>

#include "rankone/errors.hpp"

namespace rankone {

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

/// Arbitrary-precision rational number, always in lowest terms with a positive
/// denominator. Thin value wrapper around mpq_class that evaluates eagerly, so
/// it can be used as an Eigen scalar without fighting gmpxx expression
/// templates.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT: implicit, Eigen builds Scalar(0), Scalar(1)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& get_mpq() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  std::string to_string() const { return q_.get_str(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.to_string();
  }

 private:
  mpq_class q_;
};

/// Throws DivisionByZero on zero.
Rational invert(const Rational& x);

// ---------------------------------------------------------------------------
// Zp
// ---------------------------------------------------------------------------

/// Residue modulo a prime p < 2^31. Each value carries its modulus.
///
/// A value built from a bare integer (`Zp(0)`, `Zp(1)`) has no modulus yet; it
/// is an integer literal that adopts the modulus of the first residue it meets.
/// Eigen creates such literals internally (setZero, product accumulators).
/// Library code always builds residues through PrimeField.
class Zp {
 public:
  Zp() = default;
  Zp(long v) : v_(v) {}  // NOLINT: implicit integer literal
  Zp(std::int64_t v, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  bool is_literal() const { return p_ == 0; }
  /// Residue in [0, p); for a literal, the raw integer.
  std::int64_t value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  /// Re-reduces a literal into Z/p; residues are returned unchanged.
  Zp in_modulus(std::uint32_t p) const;

  std::string to_string() const { return std::to_string(v_); }

  Zp& operator+=(const Zp& o);
  Zp& operator-=(const Zp& o);
  Zp& operator*=(const Zp& o);
  Zp& operator/=(const Zp& o);

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  friend Zp operator-(const Zp& a);

  friend bool operator==(const Zp& a, const Zp& b);
  /// Canonical order: by residue.
  friend std::strong_ordering operator<=>(const Zp& a, const Zp& b);

  friend std::ostream& operator<<(std::ostream& os, const Zp& x) { return os << x.v_; }

 private:
  std::int64_t v_ = 0;
  std::uint32_t p_ = 0;
};

Zp invert(const Zp& x);

// ---------------------------------------------------------------------------
// Field descriptors
// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n);

/// Which field a problem lives in.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws PreconditionError unless p is a prime with 2 <= p <= 2^31.
  static FieldSpec prime(std::uint64_t p);

  bool is_prime_field() const { return kind == Kind::PrimeField; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// The rationals. Stateless.
struct RationalField {
  using Scalar = Rational;

  Scalar zero() const { return Rational(0); }
  Scalar one() const { return Rational(1); }
  Scalar from_int(long v) const { return Rational(v); }
  Scalar canon(const Scalar& x) const { return x; }

  /// Accepts `int` or `int/int`, each with an optional leading minus.
  Scalar parse(std::string_view text) const;
  std::string render(const Scalar& x) const { return x.to_string(); }

  FieldSpec spec() const { return FieldSpec::rationals(); }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// Z/pZ for a prime p.
struct PrimeField {
  using Scalar = Zp;

  explicit PrimeField(std::uint32_t prime);
  explicit PrimeField(const FieldSpec& spec);

  std::uint32_t characteristic() const { return p; }

  Scalar zero() const { return Zp(0, p); }
  Scalar one() const { return Zp(1, p); }
  Scalar from_int(long v) const { return Zp(v, p); }
  Scalar canon(const Scalar& x) const { return x.in_modulus(p); }
  /// The i-th element in canonical order, i in [0, p).
  Scalar element(std::uint64_t i) const { return Zp(static_cast<std::int64_t>(i), p); }

  /// Accepts `int` or `int/int`; fractions resolve through the modular
  /// inverse of the denominator.
  Scalar parse(std::string_view text) const;
  std::string render(const Scalar& x) const { return canon(x).to_string(); }

  FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::PrimeField, p}; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

  std::uint32_t p;
};

template <class K>
concept ExactField = requires(const K& k, const typename K::Scalar& x, std::string_view s) {
  { k.zero() } -> std::same_as<typename K::Scalar>;
  { k.one() } -> std::same_as<typename K::Scalar>;
  { k.from_int(1L) } -> std::same_as<typename K::Scalar>;
  { k.parse(s) } -> std::same_as<typename K::Scalar>;
  { k.render(x) } -> std::same_as<std::string>;
  { invert(x) } -> std::same_as<typename K::Scalar>;
};

template <ExactField K>
typename K::Scalar parse_scalar(std::string_view text, const K& field) {
  return field.parse(text);
}

}  // namespace rankone

namespace Eigen {

template <>
struct NumTraits<rankone::Rational> : GenericNumTraits<rankone::Rational> {
  using Real = rankone::Rational;
  using NonInteger = rankone::Rational;
  using Nested = rankone::Rational;
  using Literal = rankone::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 10,
    MulCost = 20
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<rankone::Zp> : GenericNumTraits<rankone::Zp> {
  using Real = rankone::Zp;
  using NonInteger = rankone::Zp;
  using Nested = rankone::Zp;
  using Literal = rankone::Zp;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // RANKONE_FIELD_HPP
