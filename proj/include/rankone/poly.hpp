#ifndef RANKONE_POLY_HPP
#define RANKONE_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "rankone/errors.hpp"
#include "rankone/field.hpp"

namespace rankone {

/// Dense univariate polynomial over an exact field, coefficients in ascending
/// degree order. Stored without leading zeros; the zero polynomial has no
/// coefficients and no degree.
template <ExactField K>
class Poly {
 public:
  using Field = K;
  using Scalar = typename K::Scalar;

  explicit Poly(K field) : field_(std::move(field)) {}
  Poly(K field, std::vector<Scalar> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = field_.canon(c);
    trim();
  }

  static Poly constant(const K& field, const Scalar& c) { return Poly(field, {c}); }
  static Poly one(const K& field) { return constant(field, field.one()); }
  /// c * t^degree
  static Poly monomial(const K& field, const Scalar& c, std::size_t degree) {
    std::vector<Scalar> coeffs(degree + 1, field.zero());
    coeffs[degree] = c;
    return Poly(field, std::move(coeffs));
  }
  /// t - root
  static Poly linear(const K& field, const Scalar& root) { return Poly(field, {-root, field.one()}); }

  const K& field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// std::nullopt stands for the degree of the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (is_zero()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  const Scalar& leading() const {
    if (is_zero()) throw PreconditionError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }
  bool is_monic() const { return !is_zero() && leading() == field_.one(); }

  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

  Scalar operator()(const Scalar& x) const {
    Scalar acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Scalar& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(a.field_, std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Strict weak order for use as a set key: by degree, then by coefficients
  /// from the top down in canonical scalar order.
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(),
                                        b.coeffs_.rend());
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& f) {
    os << '[';
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
      if (i) os << ", ";
      os << f.field_.render(f.coeffs_[i]);
    }
    return os << ']';
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  K field_;
  std::vector<Scalar> coeffs_;
};

/// One distinct root and its multiplicity.
template <ExactField K>
struct RootEntry {
  typename K::Scalar root;
  std::size_t multiplicity;

  friend bool operator==(const RootEntry&, const RootEntry&) = default;
};

template <ExactField K>
using RootMultiset = std::vector<RootEntry<K>>;

template <ExactField K>
struct DivRem {
  Poly<K> quotient;
  Poly<K> remainder;
};

/// s*f + u*g = gcd, gcd monic.
template <ExactField K>
struct Bezout {
  Poly<K> gcd;
  Poly<K> s;
  Poly<K> u;
};

template <ExactField K>
Poly<K> poly_mul(const Poly<K>& f, const Poly<K>& g) {
  return f * g;
}

template <ExactField K>
DivRem<K> poly_divrem(const Poly<K>& f, const Poly<K>& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  const K& k = f.field();
  std::vector<typename K::Scalar> rem = f.coeffs();
  const std::size_t dg = *g.degree();
  if (rem.size() <= dg) return {Poly<K>(k), f};

  std::vector<typename K::Scalar> quot(rem.size() - dg, k.zero());
  const auto lc_inv = invert(g.leading());
  for (std::size_t i = rem.size(); i-- > dg;) {
    const auto c = rem[i] * lc_inv;
    quot[i - dg] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] -= c * g.coeffs()[j];
  }
  rem.resize(dg);
  return {Poly<K>(k, std::move(quot)), Poly<K>(k, std::move(rem))};
}

template <ExactField K>
Poly<K> operator%(const Poly<K>& f, const Poly<K>& g) {
  return poly_divrem(f, g).remainder;
}

/// Divides the leading coefficient out. Zero stays zero.
template <ExactField K>
Poly<K> make_monic(const Poly<K>& f) {
  if (f.is_zero()) return f;
  return f * invert(f.leading());
}

template <ExactField K>
Poly<K> pow(const Poly<K>& f, std::size_t e) {
  Poly<K> acc = Poly<K>::one(f.field());
  Poly<K> base = f;
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

/// Extended Euclid. Throws PreconditionError when both inputs are zero.
template <ExactField K>
Bezout<K> ext_gcd(const Poly<K>& f, const Poly<K>& g) {
  const K& k = f.field();
  if (f.is_zero() && g.is_zero()) throw PreconditionError("ext_gcd of two zero polynomials");
  Poly<K> r0 = f, r1 = g;
  Poly<K> s0 = Poly<K>::one(k), s1(k);
  Poly<K> u0(k), u1 = Poly<K>::one(k);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divrem(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    u0 = std::exchange(u1, u0 - q * u1);
  }
  const auto scale = invert(r0.leading());
  return {r0 * scale, s0 * scale, u0 * scale};
}

/// Largest k with (t - root)^k dividing f.
template <ExactField K>
std::size_t multiplicity_at(const Poly<K>& f, const typename K::Scalar& root) {
  if (f.is_zero()) throw PreconditionError("multiplicity in the zero polynomial is unbounded");
  const Poly<K> lin = Poly<K>::linear(f.field(), root);
  std::size_t k = 0;
  Poly<K> cur = f;
  while (true) {
    auto [q, r] = poly_divrem(cur, lin);
    if (!r.is_zero()) return k;
    ++k;
    cur = std::move(q);
  }
}

/// prod (t - root)^multiplicity
template <ExactField K>
Poly<K> from_roots(const K& field, const RootMultiset<K>& roots) {
  Poly<K> acc = Poly<K>::one(field);
  for (const auto& [root, mult] : roots) acc *= pow(Poly<K>::linear(field, root), mult);
  return acc;
}

namespace detail {

std::optional<Rational> find_rational_root(const Poly<RationalField>& f);

// Removes (t - root)^m from `rest` and records the entry.
template <ExactField K>
void deflate(Poly<K>& rest, const typename K::Scalar& root, RootMultiset<K>& out) {
  const std::size_t m = multiplicity_at(rest, root);
  rest = poly_divrem(rest, pow(Poly<K>::linear(rest.field(), root), m)).quotient;
  out.push_back({root, m});
}

inline void check_split_input(const auto& f) {
  if (f.is_zero()) throw PreconditionError("split_roots of the zero polynomial");
  if (!f.is_monic()) throw PreconditionError("split_roots expects a monic polynomial");
}

}  // namespace detail

/// Complete factorization into linear factors, roots in canonical order.
/// Throws NotSplit(remaining degree) if some factor has no root in the field.
inline RootMultiset<RationalField> split_roots(const Poly<RationalField>& f) {
  detail::check_split_input(f);
  RootMultiset<RationalField> out;
  Poly<RationalField> rest = f;
  while (*rest.degree() > 0) {
    const auto root = detail::find_rational_root(rest);
    if (!root) throw NotSplit(*rest.degree());
    detail::deflate(rest, *root, out);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
  return out;
}

/// Over F_p every element is tried in order, deflating as roots are found.
inline RootMultiset<PrimeField> split_roots(const Poly<PrimeField>& f) {
  detail::check_split_input(f);
  const PrimeField& k = f.field();
  RootMultiset<PrimeField> out;
  Poly<PrimeField> rest = f;
  for (std::uint64_t i = 0; i < k.p && *rest.degree() > 0; ++i) {
    const Zp x = k.element(i);
    if (rest(x).is_zero()) detail::deflate(rest, x, out);
  }
  if (*rest.degree() > 0) throw NotSplit(*rest.degree());
  return out;
}

/// Coefficients (a_0, ..., a_{n-1}) of h in powers of (t - root), indexed
/// from the top: h(t) = sum_i a_i (t - root)^(n-1-i).
template <ExactField K>
std::vector<typename K::Scalar> taylor_coeffs(const Poly<K>& h, const typename K::Scalar& root,
                                              std::size_t n) {
  const K& k = h.field();
  if (n == 0) throw PreconditionError("taylor_coeffs needs n >= 1");
  if (h.degree() && *h.degree() > n - 1) {
    throw PreconditionError("taylor_coeffs: degree exceeds n - 1");
  }
  // Repeated synthetic division by (t - root); the i-th remainder is the
  // coefficient of (t - root)^i.
  std::vector<typename K::Scalar> ascending(n, k.zero());
  std::vector<typename K::Scalar> cur = h.coeffs();
  for (std::size_t i = 0; i < n && !cur.empty(); ++i) {
    typename K::Scalar carry = k.zero();
    for (std::size_t j = cur.size(); j-- > 0;) {
      const auto next = cur[j] + carry * root;
      cur[j] = carry;
      carry = next;
    }
    ascending[i] = carry;
    cur.pop_back();
  }
  return {ascending.rbegin(), ascending.rend()};
}

/// h / prod (t - l_i)^{n_i} = sum h_i / (t - l_i)^{n_i} with deg h_i < n_i.
/// Each h_i = h * s_i mod (t - l_i)^{n_i}, s_i the inverse of the cofactor.
template <ExactField K>
std::vector<Poly<K>> partial_fractions(const Poly<K>& h, const RootMultiset<K>& denoms) {
  const K& k = h.field();
  std::size_t total = 0;
  for (std::size_t i = 0; i < denoms.size(); ++i) {
    if (denoms[i].multiplicity == 0) throw PreconditionError("partial_fractions: zero multiplicity");
    total += denoms[i].multiplicity;
    for (std::size_t j = 0; j < i; ++j) {
      if (denoms[i].root == denoms[j].root) throw PreconditionError("partial_fractions: duplicate root");
    }
  }
  if (h.degree() && *h.degree() >= total) {
    throw PreconditionError("partial_fractions: numerator degree must be below the denominator's");
  }

  std::vector<Poly<K>> powers;
  powers.reserve(denoms.size());
  for (const auto& [root, mult] : denoms) powers.push_back(pow(Poly<K>::linear(k, root), mult));

  std::vector<Poly<K>> parts;
  std::vector<Poly<K>> cofactors;
  for (std::size_t i = 0; i < denoms.size(); ++i) {
    Poly<K> cofactor = Poly<K>::one(k);
    for (std::size_t j = 0; j < denoms.size(); ++j) {
      if (j != i) cofactor *= powers[j];
    }
    const Bezout<K> bz = ext_gcd(cofactor, powers[i]);
    if (bz.gcd != Poly<K>::one(k)) throw AssertionFailure("partial_fractions: factors not coprime");
    parts.push_back((h * bz.s) % powers[i]);
    cofactors.push_back(std::move(cofactor));
  }

  // The polynomial part of the decomposition must vanish.
  Poly<K> rebuilt(k);
  for (std::size_t i = 0; i < parts.size(); ++i) rebuilt += parts[i] * cofactors[i];
  if (rebuilt != h) throw AssertionFailure("partial_fractions: nonzero polynomial remainder");
  return parts;
}

}  // namespace rankone

#endif  // RANKONE_POLY_HPP
