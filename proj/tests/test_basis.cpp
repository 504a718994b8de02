#include <cmath>

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "umeb/basis.hpp"

namespace umeb {
namespace {

using testing::max_abs_diff;

// (d, dprime) pairs with dprime/2 < d < dprime and dprime <= 7.
std::vector<std::pair<int, int>> umeb_regime() {
  std::vector<std::pair<int, int>> out;
  for (int dp = 3; dp <= 7; ++dp)
    for (int d = 2; d < dp; ++d)
      if (2 * d > dp) out.emplace_back(d, dp);
  return out;
}

ComplexMatrix ket_bra(const ComplexVector& v) { return v * v.adjoint(); }

TEST(WeylUmeb, TwoByThreeMatchesPauliSetUpToPhase) {
  const BasisSet weyl = build_weyl_umeb(2, 3);
  ASSERT_EQ(weyl.size(), 4u);
  const BasisSet pauli_set = build_23_first();
  std::vector<int> matched(4, 0);
  for (const auto& s : weyl.states()) {
    int hits = 0;
    for (int k = 0; k < 4; ++k) {
      if (equal_up_to_phase(s, pauli_set.state(static_cast<std::size_t>(k)), 1e-12)) {
        ++hits;
        ++matched[static_cast<std::size_t>(k)];
      }
    }
    EXPECT_EQ(hits, 1);
  }
  for (int c : matched) EXPECT_EQ(c, 1);
  // Weyl order (n, m): I, sigma_1, sigma_3, i sigma_2
  EXPECT_TRUE(equal_up_to_phase(weyl.state(1), pauli_set.state(1)));
  EXPECT_TRUE(equal_up_to_phase(weyl.state(2), pauli_set.state(3)));
  EXPECT_TRUE(equal_up_to_phase(weyl.state(3), pauli_set.state(2)));
}

TEST(WeylUmeb, SizesAndOrthonormality) {
  for (auto [d, dp] : std::vector<std::pair<int, int>>{{3, 4}, {2, 4}}) {
    const BasisSet b = build_weyl_umeb(d, dp);
    EXPECT_EQ(b.size(), static_cast<std::size_t>(d * d));
    EXPECT_EQ(b.me_count(), b.size());
    EXPECT_LE(gram_deviation(b), 1e-12);
    for (const auto& s : b.states()) EXPECT_LE(is_maximally_entangled(s).deviation, 1e-12);
  }
  EXPECT_EQ(build_weyl_umeb(3, 4).labels()[5], "Phi_1_2");
}

TEST(WeylUmeb, RejectsSquareAndInvertedDims) {
  EXPECT_THROW(build_weyl_umeb(3, 3), ContractViolation);
  EXPECT_THROW(build_weyl_umeb(4, 3), ContractViolation);
  EXPECT_THROW(build_weyl_umeb(1, 3), ContractViolation);
}

TEST(First23, Examples) {
  const BasisSet b = build_23_first();
  ASSERT_EQ(b.size(), 6u);
  EXPECT_TRUE(equal_up_to_phase(b.state(0), standard_mes(2, 3), 1e-15));
  EXPECT_EQ(schmidt_rank(b.state(4)), 1);
  EXPECT_EQ(schmidt_rank(b.state(5)), 1);
  EXPECT_LE(max_abs_diff(gram_matrix(b), ComplexMatrix::Identity(6, 6)), 1e-12);
  EXPECT_EQ(b.me_flags(), (std::vector<bool>{true, true, true, true, false, false}));
  // phi_4 = (1/2 |0> + sqrt3/2 |1>) |2'>
  EXPECT_NEAR(b.state(4)[2].real(), 0.5, 1e-15);
  EXPECT_NEAR(b.state(4)[5].real(), std::sqrt(3.0) / 2.0, 1e-15);
}

TEST(Second23, Examples) {
  const ComplexMatrix xyz = qutrit_xyz_basis();
  EXPECT_LE(std::abs(xyz.col(0).dot(xyz.col(1))), 1e-12);
  EXPECT_LE(max_abs_diff(xyz.adjoint() * xyz, ComplexMatrix::Identity(3, 3)), 1e-12);

  const BasisSet b = build_23_second();
  ASSERT_EQ(b.size(), 6u);
  EXPECT_LE(max_abs_diff(gram_matrix(b), ComplexMatrix::Identity(6, 6)), 1e-12);
  EXPECT_TRUE(is_maximally_entangled(b.state(0)).flag);
  EXPECT_EQ(b.me_count(), 4u);
  EXPECT_EQ(schmidt_rank(b.state(4)), 1);

  // hand computation: |(1 + i)| / (2 sqrt 3)
  const double overlap = std::abs(inner(build_23_first().state(0), b.state(0)));
  EXPECT_NEAR(overlap, 1.0 / std::sqrt(6.0), 1e-12);
  EXPECT_NEAR(overlap, std::abs(Complex(1.0, 1.0)) / (2.0 * std::sqrt(3.0)), 1e-12);
}

TEST(Gram, Examples) {
  EXPECT_LE(max_abs_diff(gram_matrix(build_23_first()), ComplexMatrix::Identity(6, 6)), 1e-12);
  EXPECT_LE(max_abs_diff(gram_matrix(build_weyl_umeb(3, 4)), ComplexMatrix::Identity(9, 9)), 1e-12);

  const BipartiteState s = standard_mes(2, 3);
  const BasisSet twice(2, 3, {s, s});
  EXPECT_LE(max_abs_diff(gram_matrix(twice), ComplexMatrix::Ones(2, 2)), 1e-15);
  EXPECT_NEAR(gram_deviation(twice), 1.0, 1e-15);
  EXPECT_THROW(gram_matrix(BasisSet(2, 3, {})), ContractViolation);
}

TEST(ComplementProjector, Examples) {
  const ComplexVector ket2 = testing::basis_vector(3, 2);
  const ComplexMatrix expected23 = numerics::kron(ComplexMatrix::Identity(2, 2), ket_bra(ket2));
  const ComplexMatrix p = complement_projector(build_23_first(), Members::MeFlagged);
  EXPECT_LE(max_abs_diff(p, expected23), 1e-12);
  EXPECT_LE(max_abs_diff(p * p, p), 1e-12);
  EXPECT_NEAR(p.trace().real(), 2.0, 1e-12);

  EXPECT_LE(numerics::max_abs(complement_projector(build_23_first(), Members::All)), 1e-12);

  const ComplexMatrix p34 = complement_projector(build_weyl_umeb(3, 4));
  const ComplexMatrix expected34 = numerics::kron(ComplexMatrix::Identity(3, 3), ket_bra(testing::basis_vector(4, 3)));
  EXPECT_LE(max_abs_diff(p34, expected34), 1e-12);
}

TEST(SupportRank, Examples) {
  auto r = support_rank_certificate(build_weyl_umeb(2, 3));
  EXPECT_EQ(r.b_support_rank, 1);
  EXPECT_EQ(r.a_support_rank, 2);
  EXPECT_EQ(r.schmidt_rank_bound, 1);
  EXPECT_EQ(r.complement_dimension, 2);
  EXPECT_EQ(r.verdict, Verdict::Unextendible);
  EXPECT_FALSE(r.witness.has_value());

  r = support_rank_certificate(build_weyl_umeb(4, 7));
  EXPECT_EQ(r.b_support_rank, 3);
  EXPECT_EQ(r.schmidt_rank_bound, 3);
  EXPECT_EQ(r.verdict, Verdict::Unextendible);

  r = support_rank_certificate(build_weyl_umeb(2, 4));
  EXPECT_EQ(r.b_support_rank, 2);
  EXPECT_EQ(r.schmidt_rank_bound, 2);
  EXPECT_EQ(r.verdict, Verdict::Inconclusive);
}

TEST(SupportRank, RejectsBadInput) {
  const BipartiteState s = standard_mes(2, 3);
  EXPECT_THROW(support_rank_certificate(BasisSet(2, 3, {s, s})), ContractViolation);
  // product state flagged as ME
  EXPECT_THROW(support_rank_certificate(BasisSet(2, 3, {build_23_first().state(4)}, {}, std::vector<bool>{true})),
               ContractViolation);
}

TEST(SupportRank, WeylRegimeIsUnextendible) {
  for (auto [d, dp] : umeb_regime()) {
    const BasisSet b = build_weyl_umeb(d, dp);
    EXPECT_LE(gram_deviation(b), 1e-10);
    for (const auto& s : b.states()) EXPECT_LE(is_maximally_entangled(s).deviation, 1e-10);
    const auto r = support_rank_certificate(b);
    EXPECT_EQ(r.verdict, Verdict::Unextendible) << d << "x" << dp;
    EXPECT_EQ(r.b_support_rank, dp - d);
    EXPECT_LT(r.schmidt_rank_bound, d);
  }
}

TEST(SupportRank, ComplementStatesRespectTheBound) {
  std::mt19937_64 rng(41);
  for (auto [d, dp] : umeb_regime()) {
    const ComplexMatrix p = complement_projector(build_weyl_umeb(d, dp));
    for (int k = 0; k < 100; ++k) {
      const ComplexVector v = p * testing::random_gaussian(d * dp, 1, rng).col(0);
      const BipartiteState psi = BipartiteState::normalized(d, dp, v);
      EXPECT_LE(schmidt_rank(psi, 1e-8), dp - d);
      EXPECT_LE(dp - d, d - 1);
    }
  }
}

TEST(AssembleM, Examples) {
  auto m = assemble_M(ComplexMatrix::Identity(2, 2), {0.5, 0.5}, 2);
  EXPECT_NEAR(m.abs_det_factored, 1.0, 1e-12);
  EXPECT_NEAR(std::abs(m.m.determinant()), 1.0, 1e-10);

  m = assemble_M(pauli(1), {0.9, 0.1}, 2);
  EXPECT_NEAR(m.abs_det_factored, 0.36, 1e-12);
  EXPECT_NEAR(std::abs(m.m.determinant()), 0.36, 1e-10);
}

TEST(AssembleM, Errors) {
  EXPECT_THROW(assemble_M(ComplexMatrix::Identity(2, 2), {0.5, 0.6}, 2), ContractViolation);
  EXPECT_THROW(assemble_M(ComplexMatrix::Identity(2, 2), {1.0, 0.0}, 2), ContractViolation);
  EXPECT_THROW(assemble_M(ComplexMatrix::Identity(2, 2), {1.0}, 2), ContractViolation);
  EXPECT_THROW(assemble_M(2.0 * ComplexMatrix::Identity(2, 2), {0.5, 0.5}, 2), ContractViolation);
}

TEST(AssembleM, DeterminantMatchesFactorProduct) {
  std::mt19937_64 rng(43);
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto m = assemble_M(testing::random_unitary(d, rng), testing::random_simplex(d, rng), d);
      const double direct = std::abs(m.m.determinant());
      EXPECT_NEAR(direct, m.abs_det_factored, 1e-8 * m.abs_det_factored);
      EXPECT_GT(direct, 0.0);
    }
  }
}

// M encodes the orthogonality equations: sqrt(d) <Phi_nm|Psi> = (M vec(V[0:d,0:d]))_{n d + m}
// for Psi = (U (x) V) sum_p sqrt(lambda_p) |p>|p'>.
TEST(AssembleM, EncodesOverlapsWithWeylStates) {
  std::mt19937_64 rng(47);
  for (auto [d, dp] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {3, 5}}) {
    const ComplexMatrix u = testing::random_unitary(d, rng);
    const ComplexMatrix v = testing::random_unitary(dp, rng);
    const auto lambdas = testing::random_simplex(d, rng);

    ComplexVector core = ComplexVector::Zero(d * dp);
    for (int p = 0; p < d; ++p) core(p * dp + p) = std::sqrt(lambdas[static_cast<std::size_t>(p)]);
    const BipartiteState psi = apply_local(BipartiteState(d, dp, core), u, v);

    ComplexVector vec(d * d);
    for (int k = 0; k < d; ++k)
      for (int p = 0; p < d; ++p) vec(k * d + p) = v(k, p);
    const ComplexVector lhs = assemble_M(u, lambdas, d).m * vec;

    const BasisSet weyl = build_weyl_umeb(d, dp);
    for (int row = 0; row < d * d; ++row) {
      const Complex overlap = inner(weyl.state(static_cast<std::size_t>(row)), psi);
      EXPECT_LE(std::abs(std::sqrt(static_cast<double>(d)) * overlap - lhs(row)), 1e-12);
    }
  }
}

TEST(BasisSet, ConstructionChecks) {
  EXPECT_THROW(BasisSet(2, 3, {standard_mes(2, 4)}), ContractViolation);
  EXPECT_THROW(BasisSet(2, 3, {standard_mes(2, 3)}, {"a", "b"}), ContractViolation);
  EXPECT_THROW(BasisSet(2, 3, {standard_mes(2, 3)}, {}, std::vector<bool>{}), ContractViolation);
  const BasisSet recomputed(2, 3, build_23_first().states());
  EXPECT_EQ(recomputed.me_flags(), build_23_first().me_flags());
  EXPECT_TRUE(recomputed.complete());
}

TEST(Complete23Bases, FourMeMembersEach) {
  for (const auto& b : {build_23_first(), build_23_second()}) {
    EXPECT_TRUE(b.complete());
    EXPECT_LE(gram_deviation(b), 1e-12);
    int me = 0;
    for (const auto& s : b.states()) me += is_maximally_entangled(s).flag ? 1 : 0;
    EXPECT_EQ(me, 4);
  }
}

}  // namespace
}  // namespace umeb
