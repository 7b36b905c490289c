#include <gtest/gtest.h>

#include <map>
#include <set>

#include "rankone/assign.hpp"
#include "rankone/oracle.hpp"
#include "support.hpp"

using namespace rankone;
using rankone::testing::mat;
using rankone::testing::poly;
using rankone::testing::Rng;
using rankone::testing::uniform;

namespace {

// All p^(rows*cols) matrices over F_p.
std::vector<Mat<PrimeField>> all_matrices(const PrimeField& k, Eigen::Index rows, Eigen::Index cols) {
  std::size_t total = 1;
  for (Eigen::Index i = 0; i < rows * cols; ++i) total *= k.p;
  std::vector<Mat<PrimeField>> out;
  for (std::size_t idx = 0; idx < total; ++idx) {
    Mat<PrimeField> x = zeros(k, rows, cols);
    std::size_t rest = idx;
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j = 0; j < cols; ++j) {
        x(i, j) = k.from_int(static_cast<long>(rest % k.p));
        rest /= k.p;
      }
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::string key(const PrimeField& k, const Mat<PrimeField>& x) {
  std::string s;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += k.render(x(i)) + ",";
  return s;
}

bool splits_by_search(const PrimeField& k, Poly<PrimeField> f) {
  for (std::uint64_t x = 0; x < k.p; ++x) {
    const auto r = k.from_int(static_cast<long>(x));
    while (*f.degree() > 0 && f(r).is_zero()) f = poly_divrem(f, Poly<PrimeField>::linear(k, r)).quotient;
  }
  return *f.degree() == 0;
}

// Number of GL_n(F_p) conjugacy classes whose characteristic polynomial
// splits, by orbit enumeration.
std::size_t split_class_count(const PrimeField& k, Eigen::Index n) {
  std::vector<std::pair<Mat<PrimeField>, Mat<PrimeField>>> group;
  for (const auto& g : all_matrices(k, n, n)) {
    if (!rankone::testing::det_cofactor(k, g).is_zero()) group.emplace_back(g, mat_inverse(k, g));
  }
  std::set<std::string> seen;
  std::size_t classes = 0;
  for (const auto& a : all_matrices(k, n, n)) {
    if (seen.count(key(k, a))) continue;
    for (const auto& [g, ginv] : group) seen.insert(key(k, Mat<PrimeField>(g * a * ginv)));
    if (splits_by_search(k, rankone::testing::charpoly_cofactor(k, a))) ++classes;
  }
  return classes;
}

// charpoly(A + v w^T) over all (v, w), by cofactor expansion.
ZpPolySet achievable_by_cofactor(const PrimeField& k, const Mat<PrimeField>& a) {
  ZpPolySet out;
  const auto vs = all_matrices(k, a.rows(), 1);
  for (const auto& v : vs) {
    for (const auto& w : vs) out.insert(rankone::testing::charpoly_cofactor(k, Mat<PrimeField>(a + v * w.transpose())));
  }
  return out;
}

}  // namespace

TEST(OracleTest, VerifyAssignmentExamples) {
  const RationalField q;
  const auto a = mat(q, {{0, 1}, {0, 0}});
  Perturbation<RationalField> pert{rankone::testing::vec(q, {0, 1}), rankone::testing::vec(q, {-1, 0}),
                                   mat(q, {{0, 0}, {-1, 0}})};
  const auto ok = verify_assignment(q, a, pert, poly(q, {1, 0, 1}));
  EXPECT_TRUE(ok.pass);
  EXPECT_EQ(ok.rank, 1u);
  EXPECT_TRUE(ok.failure.empty());

  Perturbation<RationalField> zero{zero_vector(q, 2), zero_vector(q, 2), zeros(q, 2, 2)};
  const auto z = verify_assignment(q, a, zero, charpoly(q, a));
  EXPECT_TRUE(z.pass);
  EXPECT_EQ(z.rank, 0u);

  const auto bad = verify_assignment(q, a, pert, poly(q, {0, 0, 1}));
  EXPECT_FALSE(bad.pass);
  EXPECT_NE(bad.failure.find("charpoly mismatch"), std::string::npos);
}

TEST(OracleTest, VerifyAssignmentNegativeControls) {
  const RationalField q;
  const auto a = zeros(q, 2, 2);
  Perturbation<RationalField> wrong_outer{rankone::testing::vec(q, {1, 0}), rankone::testing::vec(q, {1, 0}),
                                          mat(q, {{1, 0}, {0, 0}})};
  wrong_outer.B(1, 1) = q.one();
  const auto r1 = verify_assignment(q, a, wrong_outer, poly(q, {1, -2, 1}));
  EXPECT_FALSE(r1.pass);
  EXPECT_NE(r1.failure.find("v w^T"), std::string::npos);

  Perturbation<RationalField> short_v{zero_vector(q, 1), zero_vector(q, 2), zeros(q, 2, 2)};
  EXPECT_FALSE(verify_assignment(q, a, short_v, poly(q, {0, 0, 1})).pass);
}

TEST(OracleTest, EnumerationExamples) {
  const PrimeField f2(2);
  EXPECT_EQ(enumerate_achievable(f2, zeros(f2, 2, 2)), (ZpPolySet{poly(f2, {0, 0, 1}), poly(f2, {0, 1, 1})}));

  ZpPolySet all;
  for (const auto& q : monic_polynomials(f2, 2)) all.insert(q);
  EXPECT_EQ(all.size(), 4u);
  EXPECT_EQ(enumerate_achievable(f2, jordan_block(f2, f2.zero(), 2)), all);

  EXPECT_EQ(enumerate_achievable(f2, zeros(f2, 1, 1)), (ZpPolySet{poly(f2, {0, 1}), poly(f2, {1, 1})}));
}

TEST(OracleTest, EnumerationMatchesCofactorBruteForce) {
  Rng rng(71);
  for (std::uint32_t p : {2u, 3u}) {
    const PrimeField k(p);
    for (int trial = 0; trial < 10; ++trial) {
      const auto n = uniform(rng, 1, 3);
      const auto a = rankone::testing::random_matrix(k, rng, n, n, 0, static_cast<long>(p) - 1);
      ASSERT_EQ(enumerate_achievable(k, a), achievable_by_cofactor(k, a));
    }
  }
}

TEST(OracleTest, BudgetIsEnforced) {
  const PrimeField f3(3);
  EXPECT_THROW(enumerate_achievable(f3, zeros(f3, 3, 3), 100), BudgetExceeded);
  EXPECT_THROW(certify_theorem(3, f3, 100), BudgetExceeded);
  EXPECT_NO_THROW(enumerate_achievable(f3, zeros(f3, 3, 3), 729));
}

TEST(OracleTest, MonicPolynomialsAreCompleteAndCanonical) {
  const PrimeField f3(3);
  const auto list = monic_polynomials(f3, 3);
  ASSERT_EQ(list.size(), 27u);
  for (std::size_t i = 0; i < list.size(); ++i) {
    EXPECT_TRUE(list[i].is_monic());
    EXPECT_EQ(*list[i].degree(), 3u);
    if (i) {
      EXPECT_LT(list[i - 1], list[i]);
    }
  }
}

TEST(OracleTest, RepresentativesCoverEverySplitClass) {
  for (auto [n, p] : {std::pair{1, 2u}, {2, 2u}, {2, 3u}, {3, 2u}}) {
    const PrimeField k(p);
    const auto reps = jordan_representatives(k, static_cast<std::size_t>(n));
    EXPECT_EQ(reps.size(), split_class_count(k, n)) << "n = " << n << ", p = " << p;
    // pairwise non-similar: distinct block multisets
    std::set<std::vector<std::pair<Zp, std::size_t>>> distinct;
    for (const auto& r : reps) {
      distinct.insert(rankone::testing::sorted_blocks<PrimeField>(r.blocks));
      EXPECT_EQ(rankone::testing::blocks_of(eigen_structure(k, r.matrix)),
                rankone::testing::sorted_blocks<PrimeField>(r.blocks));
    }
    EXPECT_EQ(distinct.size(), reps.size());
  }
}

TEST(OracleTest, CertifySmallCases) {
  for (auto [n, p] : {std::pair{1, 2u}, {2, 2u}, {2, 3u}, {3, 2u}}) {
    const PrimeField k(p);
    const auto reports = certify_theorem(static_cast<std::size_t>(n), k);
    ASSERT_FALSE(reports.empty());
    for (const auto& r : reports) {
      EXPECT_TRUE(r.agree) << "n = " << n << ", p = " << p;
      EXPECT_EQ(r.achievable, r.predicted);
    }
  }
}

TEST(OracleTest, AchievableTargetsRespectTheMultiplicityBound) {
  for (auto [n, p] : {std::pair{2, 3u}, {3, 2u}, {3, 3u}}) {
    const PrimeField k(p);
    for (const auto& rep : jordan_representatives(k, static_cast<std::size_t>(n))) {
      const auto structure = eigen_structure(k, rep.matrix);
      for (const auto& q : enumerate_achievable(k, rep.matrix)) {
        for (std::uint64_t x = 0; x < p; ++x) {
          const auto l = k.element(x);
          std::size_t deficit = 0;
          for (const auto& rec : structure) {
            if (rec.eigenvalue == l) deficit = rec.deficit();
          }
          ASSERT_GE(multiplicity_at(q, l), deficit);
        }
      }
    }
  }
}

TEST(OracleTest, ConstructionReachesEveryAchievableTarget) {
  for (auto [n, p] : {std::pair{2, 2u}, {2, 3u}, {3, 2u}, {3, 3u}}) {
    const PrimeField k(p);
    for (const auto& rep : jordan_representatives(k, static_cast<std::size_t>(n))) {
      // conjugate away from Jordan form so the basis change is exercised
      Mat<PrimeField> g = identity(k, rep.matrix.rows());
      for (Eigen::Index i = 0; i + 1 < g.rows(); ++i) g(i, i + 1) = k.one();
      const Mat<PrimeField> a = g * rep.matrix * mat_inverse(k, g);
      for (const auto& q : enumerate_achievable(k, rep.matrix)) {
        const auto pert = construct_general(k, a, q);
        const auto check = verify_assignment(k, a, pert, q);
        ASSERT_TRUE(check.pass) << check.failure;
      }
    }
  }
}
