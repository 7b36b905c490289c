// Test-only helpers: random instance generators and brute-force oracles that
// do not share code paths with the library routines they check.
#ifndef RANKONE_TESTS_SUPPORT_HPP
#define RANKONE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "rankone/field.hpp"
#include "rankone/jordan.hpp"
#include "rankone/linalg.hpp"
#include "rankone/poly.hpp"

namespace rankone::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

template <ExactField K>
Poly<K> poly(const K& k, std::initializer_list<long> ascending) {
  std::vector<typename K::Scalar> c;
  for (long x : ascending) c.push_back(k.from_int(x));
  return Poly<K>(k, std::move(c));
}

template <ExactField K>
Mat<K> mat(const K& k, std::initializer_list<std::initializer_list<long>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto m = static_cast<Eigen::Index>(rows.begin()->size());
  Mat<K> out = zeros(k, n, m);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long x : row) out(i, j++) = k.from_int(x);
    ++i;
  }
  return out;
}

template <ExactField K>
Vec<K> vec(const K& k, std::initializer_list<long> xs) {
  Vec<K> out = zero_vector(k, static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) out(i++) = k.from_int(x);
  return out;
}

template <ExactField K>
typename K::Scalar random_scalar(const K& k, Rng& rng, long lo, long hi) {
  return k.from_int(uniform(rng, lo, hi));
}

/// Rational with numerator in [-9, 9] and denominator in [1, 4].
inline Rational random_fraction(Rng& rng) {
  return Rational(mpz_class(uniform(rng, -9, 9)), mpz_class(uniform(rng, 1, 4)));
}

template <ExactField K>
Mat<K> random_matrix(const K& k, Rng& rng, Eigen::Index rows, Eigen::Index cols, long lo, long hi) {
  Mat<K> out = zeros(k, rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = random_scalar(k, rng, lo, hi);
  }
  return out;
}

template <ExactField K>
Vec<K> random_vector(const K& k, Rng& rng, Eigen::Index n, long lo, long hi) {
  Vec<K> out = zero_vector(k, n);
  for (Eigen::Index i = 0; i < n; ++i) out(i) = random_scalar(k, rng, lo, hi);
  return out;
}

template <ExactField K>
Mat<K> mat_from(const K& k, const std::vector<std::vector<long>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Mat<K> out = zeros(k, n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = k.from_int(rows[i][j]);
  }
  return out;
}

/// Integer matrix with determinant +-1 and entries in [-bound, bound], made by
/// random row swaps and row additions that keep every entry in range. Its
/// inverse is tracked through the inverse column operations.
template <ExactField K>
std::pair<Mat<K>, Mat<K>> random_unimodular(const K& k, Rng& rng, Eigen::Index n, long bound = 2) {
  std::vector<std::vector<long>> p(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
  std::vector<std::vector<long>> inv = p;
  for (Eigen::Index i = 0; i < n; ++i) p[i][i] = inv[i][i] = 1;
  if (n < 2) return {mat_from(k, p), mat_from(k, inv)};

  const int steps = static_cast<int>(4 * n);
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, n - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, n - 2));
    if (j >= i) ++j;
    if (uniform(rng, 0, 3) == 0) {
      // row swap: P <- S P, P^{-1} <- P^{-1} S
      std::swap(p[i], p[j]);
      for (auto& row : inv) std::swap(row[i], row[j]);
      continue;
    }
    const long c = uniform(rng, 0, 1) ? 1 : -1;
    // row i += c * row j, if it stays in range
    bool ok = true;
    for (std::size_t col = 0; col < p.size(); ++col) {
      const long x = p[i][col] + c * p[j][col];
      if (x < -bound || x > bound) ok = false;
    }
    if (!ok) continue;
    for (std::size_t col = 0; col < p.size(); ++col) p[i][col] += c * p[j][col];
    // P^{-1} <- P^{-1} E^{-1}: column j -= c * column i
    for (auto& row : inv) row[j] -= c * row[i];
  }
  return {mat_from(k, p), mat_from(k, inv)};
}

/// Random composition of n into block sizes.
inline std::vector<std::size_t> random_block_sizes(Rng& rng, std::size_t n) {
  std::vector<std::size_t> sizes;
  std::size_t left = n;
  while (left > 0) {
    const auto s = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(left)));
    sizes.push_back(s);
    left -= s;
  }
  return sizes;
}

/// A = P J P^{-1} with known Jordan blocks.
template <ExactField K>
struct PlantedInstance {
  std::vector<std::pair<typename K::Scalar, std::size_t>> blocks;
  Mat<K> J;
  Mat<K> P;
  Mat<K> A;
};

/// Blocks of random sizes with eigenvalues drawn from [lo, hi]; a small pool
/// of eigenvalues makes repeated eigenvalues (several blocks per eigenvalue)
/// common.
template <ExactField K>
PlantedInstance<K> random_planted(const K& k, Rng& rng, std::size_t n, long lo, long hi) {
  PlantedInstance<K> out;
  std::vector<Mat<K>> blocks;
  for (auto size : random_block_sizes(rng, n)) {
    const auto value = random_scalar(k, rng, lo, hi);
    out.blocks.emplace_back(value, size);
    blocks.push_back(jordan_block(k, value, static_cast<Eigen::Index>(size)));
  }
  out.J = block_diagonal(k, blocks);
  auto [p, pinv] = random_unimodular(k, rng, static_cast<Eigen::Index>(n));
  out.P = p;
  out.A = p * out.J * pinv;
  return out;
}

/// det by Laplace expansion along the first row.
template <ExactField K>
typename K::Scalar det_cofactor(const K& k, const Mat<K>& x) {
  const Eigen::Index n = x.rows();
  if (n == 0) return k.one();
  if (n == 1) return x(0, 0);
  typename K::Scalar acc = k.zero();
  for (Eigen::Index j = 0; j < n; ++j) {
    Mat<K> minor = zeros(k, n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
        if (c != j) minor(r - 1, cc++) = x(r, c);
      }
    }
    const auto term = x(0, j) * det_cofactor(k, minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/// det(tI - x) by Laplace expansion with polynomial entries.
template <ExactField K>
Poly<K> charpoly_cofactor(const K& k, const Mat<K>& x) {
  const auto n = static_cast<std::size_t>(x.rows());
  std::vector<std::vector<Poly<K>>> m(n, std::vector<Poly<K>>(n, Poly<K>(k)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = Poly<K>::constant(k, -x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      if (i == j) m[i][j] += Poly<K>::monomial(k, k.one(), 1);
    }
  }
  auto rec = [&](auto&& self, const std::vector<std::vector<Poly<K>>>& g) -> Poly<K> {
    const std::size_t size = g.size();
    if (size == 0) return Poly<K>::one(k);
    Poly<K> acc(k);
    for (std::size_t j = 0; j < size; ++j) {
      std::vector<std::vector<Poly<K>>> minor;
      for (std::size_t r = 1; r < size; ++r) {
        std::vector<Poly<K>> row;
        for (std::size_t c = 0; c < size; ++c) {
          if (c != j) row.push_back(g[r][c]);
        }
        minor.push_back(std::move(row));
      }
      const Poly<K> term = g[0][j] * self(self, minor);
      if (j % 2 == 0) acc += term;
      else acc -= term;
    }
    return acc;
  };
  return rec(rec, m);
}

/// Multiset of (eigenvalue, size) pairs, sorted, for comparing block lists.
template <ExactField K>
std::vector<std::pair<typename K::Scalar, std::size_t>> sorted_blocks(
    std::vector<std::pair<typename K::Scalar, std::size_t>> blocks) {
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  });
  return blocks;
}

template <ExactField K>
std::vector<std::pair<typename K::Scalar, std::size_t>> blocks_of(const EigenStructure<K>& s) {
  std::vector<std::pair<typename K::Scalar, std::size_t>> out;
  for (const auto& rec : s) {
    for (auto b : rec.blocks) out.emplace_back(rec.eigenvalue, b);
  }
  return out;
}

/// Product of forced factors prod (t - l)^{alg - j} from a planted block list.
template <ExactField K>
Poly<K> forced_factor(const K& k, const EigenStructure<K>& s) {
  Poly<K> out = Poly<K>::one(k);
  for (const auto& rec : s) out *= pow(Poly<K>::linear(k, rec.eigenvalue), rec.deficit());
  return out;
}

template <ExactField K>
Poly<K> random_monic(const K& k, Rng& rng, std::size_t degree, long lo, long hi) {
  std::vector<typename K::Scalar> c;
  for (std::size_t i = 0; i < degree; ++i) c.push_back(random_scalar(k, rng, lo, hi));
  c.push_back(k.one());
  return Poly<K>(k, std::move(c));
}

}  // namespace rankone::testing

#endif  // RANKONE_TESTS_SUPPORT_HPP
