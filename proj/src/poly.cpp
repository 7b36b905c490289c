#include "rankone/poly.hpp"

#include <gmp.h>

namespace rankone::detail {

namespace {

// Prime factorization by trial division; the cofactor check keeps this fast
// whenever the largest prime factor is big.
std::vector<std::pair<mpz_class, unsigned>> factorize(mpz_class n) {
  std::vector<std::pair<mpz_class, unsigned>> out;
  for (mpz_class d = 2; d * d <= n; ++d) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 25) > 0) break;
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> out{1};
  for (const auto& [prime, e] : factorize(abs(n))) {
    const std::size_t base = out.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<Rational> find_rational_root(const Poly<RationalField>& f) {
  if (f.coeff(0).is_zero()) return Rational(0);

  // Clear denominators: the integer polynomial has the same roots, and any
  // root d/e in lowest terms has d | a_0 and e | a_n.
  mpz_class lcm = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  const mpz_class a0 = f.coeffs().front().numerator() * (lcm / f.coeffs().front().denominator());
  const mpz_class an = f.leading().numerator() * (lcm / f.leading().denominator());

  const auto num_divs = divisors(a0);
  const auto den_divs = divisors(an);
  for (const auto& d : num_divs) {
    for (const auto& e : den_divs) {
      for (const int sign : {1, -1}) {
        const Rational candidate(sign * d, e);
        if (f(candidate).is_zero()) return candidate;
      }
    }
  }
  return std::nullopt;
}

}  // namespace rankone::detail
