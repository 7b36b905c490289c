#ifndef RANKONE_JORDAN_HPP
#define RANKONE_JORDAN_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "rankone/errors.hpp"
#include "rankone/field.hpp"
#include "rankone/linalg.hpp"
#include "rankone/poly.hpp"

namespace rankone {

/// Jordan data of one eigenvalue.
template <ExactField K>
struct EigenRecord {
  typename K::Scalar eigenvalue;
  std::size_t algebraic = 0;        ///< multiplicity as a root of the characteristic polynomial
  std::vector<std::size_t> blocks;  ///< block sizes, descending
  std::size_t largest = 0;          ///< size of the largest block

  std::size_t deficit() const { return algebraic - largest; }

  friend bool operator==(const EigenRecord&, const EigenRecord&) = default;
};

/// Records sorted by eigenvalue in canonical order.
template <ExactField K>
using EigenStructure = std::vector<EigenRecord<K>>;

/// Position of one Jordan block inside J.
template <ExactField K>
struct BlockPlacement {
  typename K::Scalar eigenvalue;
  std::size_t size = 0;
  std::size_t start = 0;
  /// The first (largest) block of its eigenvalue.
  bool lead = false;
};

/// A = P J P^{-1}, J block diagonal in the order given by `layout`: grouped by
/// eigenvalue in canonical order, block sizes descending within a group.
template <ExactField K>
struct JordanDecomposition {
  Mat<K> J;
  Mat<K> P;
  Mat<K> Pinv;
  std::vector<BlockPlacement<K>> layout;
};

/// Build an EigenStructure from an explicit list of (eigenvalue, block size)
/// pairs. Used for matrices whose Jordan form is known by construction.
template <ExactField K>
EigenStructure<K> structure_from_blocks(
    const std::vector<std::pair<typename K::Scalar, std::size_t>>& blocks) {
  EigenStructure<K> out;
  for (const auto& [value, size] : blocks) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& r) { return r.eigenvalue == value; });
    if (it == out.end()) {
      out.push_back({value, 0, {}, 0});
      it = std::prev(out.end());
    }
    it->algebraic += size;
    it->blocks.push_back(size);
  }
  for (auto& r : out) {
    std::sort(r.blocks.begin(), r.blocks.end(), std::greater<>());
    r.largest = r.blocks.front();
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.eigenvalue < b.eigenvalue; });
  return out;
}

/// Eigenvalues, algebraic multiplicities and Jordan block sizes of a.
/// The number of blocks of size >= s at an eigenvalue l equals
/// rank((a - l)^{s-1}) - rank((a - l)^s).
/// Throws NotSplit when the characteristic polynomial does not split.
template <ExactField K>
EigenStructure<K> eigen_structure(const K& k, const Mat<K>& a) {
  const auto roots = split_roots(charpoly(k, a));
  EigenStructure<K> out;
  for (const auto& [value, alg] : roots) {
    const auto ranks = rank_sequence(k, a, value, alg);
    EigenRecord<K> rec{value, alg, {}, 0};
    // at_least[s] = number of blocks of size >= s, s = 1..alg
    std::vector<std::size_t> at_least(alg + 2, 0);
    for (std::size_t s = 1; s <= alg; ++s) at_least[s] = ranks[s - 1] - ranks[s];
    for (std::size_t s = alg; s > 0; --s) {
      for (std::size_t c = at_least[s] - at_least[s + 1]; c > 0; --c) rec.blocks.push_back(s);
    }
    std::size_t total = 0;
    for (auto b : rec.blocks) total += b;
    if (total != alg || rec.blocks.empty()) {
      throw AssertionFailure("eigen_structure: block sizes do not add up to the multiplicity");
    }
    rec.largest = rec.blocks.front();
    out.push_back(std::move(rec));
  }
  return out;
}

namespace detail {

template <ExactField K>
Mat<K> hstack(const K& k, const Mat<K>& x, const Mat<K>& y, Eigen::Index rows) {
  Mat<K> out = zeros(k, rows, x.cols() + y.cols());
  out.leftCols(x.cols()) = x;
  out.rightCols(y.cols()) = y;
  return out;
}

}  // namespace detail

/// Similarity to Jordan form via generalized-eigenvector chains.
///
/// For each eigenvalue l with N = a - l and kernels K_s = ker N^s, chain tops
/// of length s are taken from the basis of K_s (in order) as long as they
/// enlarge K_{s-1} + N K_{s+1} plus the tops already chosen. Each top x
/// contributes the columns N^{s-1} x, ..., N x, x, so that N maps the
/// (i+1)-th column of the block to the i-th.
template <ExactField K>
JordanDecomposition<K> jordan_basis(const K& k, const Mat<K>& a) {
  const Eigen::Index n = a.rows();
  const EigenStructure<K> structure = eigen_structure(k, a);

  std::vector<Vec<K>> columns;
  std::vector<BlockPlacement<K>> layout;
  std::vector<Mat<K>> blocks;

  for (const auto& rec : structure) {
    const Mat<K> shift = a - rec.eigenvalue * identity(k, n);
    // kernels[s] = basis of ker N^s, s = 0..largest+1
    std::vector<Mat<K>> kernels;
    Mat<K> power = identity(k, n);
    for (std::size_t s = 0; s <= rec.largest + 1; ++s) {
      kernels.push_back(kernel_basis(k, power));
      power = power * shift;
    }

    std::vector<std::vector<Vec<K>>> chains;
    for (std::size_t s = rec.largest; s > 0; --s) {
      const Mat<K> image = shift * kernels[s + 1];
      Mat<K> span = detail::hstack(k, kernels[s - 1], image, n);
      std::size_t span_rank = mat_rank(span);
      std::size_t wanted = static_cast<std::size_t>(std::count(rec.blocks.begin(), rec.blocks.end(), s));
      for (Eigen::Index c = 0; c < kernels[s].cols() && wanted > 0; ++c) {
        const Mat<K> candidate = kernels[s].col(c);
        Mat<K> grown = detail::hstack(k, span, candidate, n);
        const std::size_t grown_rank = mat_rank(grown);
        if (grown_rank == span_rank) continue;
        span = std::move(grown);
        span_rank = grown_rank;
        --wanted;

        std::vector<Vec<K>> chain(s);
        chain[s - 1] = kernels[s].col(c);
        for (std::size_t i = s - 1; i-- > 0;) chain[i] = shift * chain[i + 1];
        chains.push_back(std::move(chain));
      }
      if (wanted != 0) throw AssertionFailure("jordan_basis: too few chain tops of length " + std::to_string(s));
    }

    bool first = true;
    for (auto& chain : chains) {
      layout.push_back({rec.eigenvalue, chain.size(), columns.size(), first});
      blocks.push_back(jordan_block(k, rec.eigenvalue, static_cast<Eigen::Index>(chain.size())));
      first = false;
      for (auto& v : chain) columns.push_back(std::move(v));
    }
  }

  if (static_cast<Eigen::Index>(columns.size()) != n) {
    throw AssertionFailure("jordan_basis: chain vectors do not form a basis");
  }
  Mat<K> p = zeros(k, n, n);
  for (Eigen::Index j = 0; j < n; ++j) p.col(j) = columns[static_cast<std::size_t>(j)];

  JordanDecomposition<K> out{block_diagonal(k, blocks), p, mat_inverse(k, p), std::move(layout)};
  if (!mat_equal(Mat<K>(out.Pinv * a * out.P), out.J)) {
    throw AssertionFailure("jordan_basis: P^{-1} A P differs from J");
  }
  return out;
}

}  // namespace rankone

#endif  // RANKONE_JORDAN_HPP
