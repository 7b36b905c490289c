#ifndef RANKONE_ORACLE_HPP
#define RANKONE_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rankone/assign.hpp"
#include "rankone/field.hpp"
#include "rankone/jordan.hpp"
#include "rankone/linalg.hpp"
#include "rankone/poly.hpp"

namespace rankone {

/// Outcome of checking a witness from scratch.
struct Verification {
  bool pass = false;
  std::size_t rank = 0;
  /// First discrepancy found; empty on success.
  std::string failure;
};

/// Recomputes charpoly(A + B) with Berkowitz and checks it against q, checks
/// B = v w^T entrywise and rank(B) <= 1. Never throws on a bad witness.
template <ExactField K>
Verification verify_assignment(const K& k, const Mat<K>& a, const Perturbation<K>& pert, const Poly<K>& q) {
  Verification out;
  const Eigen::Index n = a.rows();
  if (a.cols() != n || pert.v.size() != n || pert.w.size() != n || pert.B.rows() != n || pert.B.cols() != n) {
    out.failure = "dimension mismatch";
    return out;
  }
  if (!mat_equal(pert.B, outer(pert.v, pert.w))) {
    out.failure = "B differs from v w^T";
    return out;
  }
  out.rank = mat_rank(pert.B);
  if (out.rank > 1) {
    out.failure = "rank(B) = " + std::to_string(out.rank);
    return out;
  }
  const Poly<K> got = charpoly(k, Mat<K>(a + pert.B));
  if (got != q) {
    std::ostringstream msg;
    msg << "charpoly mismatch: got " << got << ", expected " << q;
    out.failure = msg.str();
    return out;
  }
  out.pass = true;
  return out;
}

using ZpPolySet = std::set<Poly<PrimeField>>;

constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Characteristic polynomials of A + v w^T for every (v, w) in F_p^n x F_p^n.
/// Every rank-<=1 matrix is such an outer product, so this is the full set of
/// reachable targets. Throws BudgetExceeded if p^(2n) > budget.
ZpPolySet enumerate_achievable(const PrimeField& k, const Mat<PrimeField>& a,
                               std::uint64_t budget = kDefaultBudget);

/// Every monic polynomial of degree n over F_p, in canonical order.
std::vector<Poly<PrimeField>> monic_polynomials(const PrimeField& k, std::size_t n);

/// A Jordan-form matrix together with its blocks.
struct JordanRepresentative {
  std::vector<std::pair<Zp, std::size_t>> blocks;  ///< grouped by eigenvalue, sizes descending
  Mat<PrimeField> matrix;
};

/// All n x n matrices in Jordan canonical form over F_p, one per similarity
/// class with split characteristic polynomial.
std::vector<JordanRepresentative> jordan_representatives(const PrimeField& k, std::size_t n);

struct OracleReport {
  FieldSpec field;
  JordanRepresentative representative;
  ZpPolySet achievable;
  ZpPolySet predicted;
  bool agree = false;
};

/// For every Jordan representative A of size n over F_p, compares the targets
/// reachable by brute force with those accepted by the feasibility predicate.
std::vector<OracleReport> certify_theorem(std::size_t n, const PrimeField& k,
                                          std::uint64_t budget = kDefaultBudget);

OracleReport certify_representative(const PrimeField& k, const JordanRepresentative& rep,
                                    std::uint64_t budget = kDefaultBudget);

}  // namespace rankone

#endif  // RANKONE_ORACLE_HPP
