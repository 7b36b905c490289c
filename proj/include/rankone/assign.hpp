#ifndef RANKONE_ASSIGN_HPP
#define RANKONE_ASSIGN_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "rankone/errors.hpp"
#include "rankone/field.hpp"
#include "rankone/jordan.hpp"
#include "rankone/linalg.hpp"
#include "rankone/poly.hpp"

namespace rankone {

/// One eigenvalue of A checked against the target q.
template <ExactField K>
struct FeasibilityRow {
  typename K::Scalar eigenvalue;
  std::size_t target_multiplicity = 0;  ///< multiplicity of the eigenvalue as a root of q
  std::size_t algebraic = 0;
  std::size_t largest = 0;
  std::size_t deficit = 0;  ///< algebraic - largest
  bool satisfied = false;   ///< target_multiplicity >= deficit
};

template <ExactField K>
struct FeasibilityReport {
  bool verdict = true;
  std::vector<FeasibilityRow<K>> rows;
};

/// Raised by construct_general when no rank-one witness exists.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

template <ExactField K>
class Infeasible : public InfeasibleError {
 public:
  explicit Infeasible(FeasibilityReport<K> report)
      : InfeasibleError("target polynomial violates the multiplicity bound at some eigenvalue"),
        report_(std::move(report)) {}

  const FeasibilityReport<K>& report() const { return report_; }

 private:
  FeasibilityReport<K> report_;
};

/// Witness B = v w^T.
template <ExactField K>
struct Perturbation {
  Vec<K> v;
  Vec<K> w;
  Mat<K> B;

  std::size_t rank() const { return mat_rank(B); }
};

/// Segment of (v, w) living on one Jordan block or one group of blocks.
template <ExactField K>
struct BlockWitness {
  Vec<K> v;
  Vec<K> w;
};

namespace detail {

template <ExactField K>
void check_target(const Poly<K>& q, std::size_t n) {
  if (!q.is_monic()) throw PreconditionError("target polynomial must be monic");
  if (*q.degree() != n) {
    throw PreconditionError("target polynomial has degree " + std::to_string(*q.degree()) +
                            ", expected " + std::to_string(n));
  }
}

}  // namespace detail

/// A rank-one B with charpoly(A + B) = q exists iff for every eigenvalue l of
/// A the multiplicity of l in q is at least alg_l(A) - j_l(A). Values that are
/// not eigenvalues of A impose nothing and get no row.
template <ExactField K>
FeasibilityReport<K> feasibility(const EigenStructure<K>& structure, const Poly<K>& q) {
  std::size_t n = 0;
  for (const auto& rec : structure) n += rec.algebraic;
  detail::check_target(q, n);

  FeasibilityReport<K> report;
  for (const auto& rec : structure) {
    FeasibilityRow<K> row{rec.eigenvalue, multiplicity_at(q, rec.eigenvalue), rec.algebraic, rec.largest,
                          rec.deficit(), false};
    row.satisfied = row.target_multiplicity >= row.deficit;
    report.verdict = report.verdict && row.satisfied;
    report.rows.push_back(std::move(row));
  }
  return report;
}

/// Witness for a single Jordan block J_{l,r}: v = e_r and
/// w = sum_i a_i e_{r-i}, where h = sum_i a_i (t - l)^{r-1-i}. Then
/// w^T (tI - J)^{-1} v = h(t) / (t - l)^r, since N^i e_r = e_{r-i}.
template <ExactField K>
BlockWitness<K> construct_block_from_h(const K& k, const typename K::Scalar& eigenvalue, std::size_t r,
                                       const Poly<K>& h) {
  const auto a = taylor_coeffs(h, eigenvalue, r);
  const auto size = static_cast<Eigen::Index>(r);
  BlockWitness<K> out{unit_vector(k, size, size - 1), zero_vector(k, size)};
  for (std::size_t i = 0; i < r; ++i) out.w(static_cast<Eigen::Index>(r - 1 - i)) = a[i];
  return out;
}

/// Witness for a direct sum of single Jordan blocks J_{l_i, n_i} with
/// pairwise distinct l_i and monic target q1 of degree sum n_i. Segments are
/// concatenated in block order.
template <ExactField K>
BlockWitness<K> construct_distinct(const K& k, const RootMultiset<K>& blocks, const Poly<K>& q1) {
  std::size_t d = 0;
  for (const auto& b : blocks) d += b.multiplicity;
  detail::check_target(q1, d);

  const Poly<K> h = from_roots(k, blocks) - q1;
  const std::vector<Poly<K>> parts = partial_fractions(h, blocks);

  BlockWitness<K> out{zero_vector(k, static_cast<Eigen::Index>(d)), zero_vector(k, static_cast<Eigen::Index>(d))};
  Eigen::Index at = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto seg = construct_block_from_h(k, blocks[i].root, blocks[i].multiplicity, parts[i]);
    out.v.segment(at, seg.v.size()) = seg.v;
    out.w.segment(at, seg.w.size()) = seg.w;
    at += seg.v.size();
  }
  return out;
}

/// Rank-at-most-one B = v w^T with charpoly(A + B) = q.
///
/// In the Jordan basis, the forced factor prod (t - l)^{alg_l - j_l} is peeled
/// off q; the rest q1 is assigned to the direct sum of the lead blocks (one
/// largest block per eigenvalue) and every other block is left untouched. The
/// witness is carried back by v = P v_J, w = P^{-T} w_J.
///
/// Throws Infeasible<K> when the multiplicity bound fails, NotSplit when the
/// characteristic polynomial of A does not split, and AssertionFailure if the
/// result does not check out.
template <ExactField K>
Perturbation<K> construct_general(const K& k, const Mat<K>& a, const Poly<K>& q,
                                  const JordanDecomposition<K>& jd) {
  const Eigen::Index n = a.rows();
  detail::check_target(q, static_cast<std::size_t>(n));

  EigenStructure<K> structure;
  {
    std::vector<std::pair<typename K::Scalar, std::size_t>> planted;
    for (const auto& b : jd.layout) planted.emplace_back(b.eigenvalue, b.size);
    structure = structure_from_blocks<K>(planted);
  }
  FeasibilityReport<K> report = feasibility(structure, q);
  if (!report.verdict) throw Infeasible<K>(std::move(report));

  Poly<K> q1 = q;
  for (const auto& rec : structure) {
    const auto forced = pow(Poly<K>::linear(k, rec.eigenvalue), rec.deficit());
    auto [quot, rem] = poly_divrem(q1, forced);
    if (!rem.is_zero()) throw AssertionFailure("construct_general: forced factor does not divide q");
    q1 = std::move(quot);
  }

  RootMultiset<K> leads;
  std::vector<std::size_t> lead_starts;
  for (const auto& b : jd.layout) {
    if (!b.lead) continue;
    leads.push_back({b.eigenvalue, b.size});
    lead_starts.push_back(b.start);
  }
  const BlockWitness<K> seg = construct_distinct(k, leads, q1);

  Vec<K> vj = zero_vector(k, n);
  Vec<K> wj = zero_vector(k, n);
  Eigen::Index at = 0;
  for (std::size_t i = 0; i < leads.size(); ++i) {
    const auto len = static_cast<Eigen::Index>(leads[i].multiplicity);
    const auto start = static_cast<Eigen::Index>(lead_starts[i]);
    vj.segment(start, len) = seg.v.segment(at, len);
    wj.segment(start, len) = seg.w.segment(at, len);
    at += len;
  }

  Perturbation<K> out;
  out.v = jd.P * vj;
  out.w = jd.Pinv.transpose() * wj;
  out.B = outer(out.v, out.w);

  if (charpoly(k, Mat<K>(a + out.B)) != q) {
    throw AssertionFailure("construct_general: charpoly(A + B) differs from the target");
  }
  return out;
}

template <ExactField K>
Perturbation<K> construct_general(const K& k, const Mat<K>& a, const Poly<K>& q) {
  if (a.rows() != a.cols()) throw DimensionMismatch("construct_general: matrix is not square");
  detail::check_target(q, static_cast<std::size_t>(a.rows()));
  return construct_general(k, a, q, jordan_basis(k, a));
}

}  // namespace rankone

#endif  // RANKONE_ASSIGN_HPP
