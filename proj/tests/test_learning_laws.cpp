#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ilc/convergence.hpp"
#include "ilc/errors.hpp"
#include "ilc/learning_laws.hpp"
#include "ilc/linalg.hpp"
#include "oracles.hpp"

namespace ilc {
namespace {

using testing::kN;
using testing::sampled;

struct Lifted {
  LiftedModel lm;
  Eigen::MatrixXd inv;
  DeletedModel deleted(int q) const { return delete_leading_steps(lm, inv, q); }
};

Lifted lifted(const ContinuousPlant& p) {
  Lifted out{build_lifted(sampled(p), kN), {}};
  out.inv = circulant_inverse(out.lm);
  return out;
}

DeletedModel identity_model(int N) {
  return {0, Eigen::MatrixXd::Identity(N, N), Eigen::MatrixXd::Identity(N, N)};
}

TEST(LawInverseCirculant, IdentityPlant) {
  const LearningLaw law = law_inverse_circulant(identity_model(4));
  EXPECT_EQ(law.L, Eigen::MatrixXd::Identity(4, 4));
  EXPECT_EQ(law.kind, LawKind::InverseCirculant);
}

TEST(LawInverseCirculant, ThirdOrderTopSingularValues) {
  const Lifted t = lifted(third_order_plant());
  for (auto [q, expected] : {std::pair{0, 18.2151}, std::pair{1, 13.8093}}) {
    const DeletedModel dm = t.deleted(q);
    const LearningLaw law = law_inverse_circulant(dm);
    EXPECT_EQ(law.q, q);
    EXPECT_EQ(law.L.rows(), kN);
    EXPECT_EQ(law.L.cols(), kN - q);
    EXPECT_NEAR(singular_values(error_propagation(dm.P_q, law))(0), expected, 5e-5 * expected);
  }
}

TEST(LawScaled, ZeroGainGivesIdentityPropagation) {
  const DeletedModel dm = lifted(third_order_plant()).deleted(1);
  const Eigen::MatrixXd E = error_propagation(dm.P_q, law_scaled(dm, 0.0));
  EXPECT_EQ(E, Eigen::MatrixXd::Identity(kN - 1, kN - 1));
  const Eigen::VectorXd s = singular_values(E);
  EXPECT_DOUBLE_EQ(s.maxCoeff(), 1.0);
  EXPECT_DOUBLE_EQ(s.minCoeff(), 1.0);
}

TEST(LawScaled, UnitGainIsInverseCirculant) {
  const DeletedModel dm = lifted(third_order_plant()).deleted(1);
  const LearningLaw scaled = law_scaled(dm, 1.0);
  EXPECT_EQ(scaled.L, law_inverse_circulant(dm).L);
  EXPECT_EQ(scaled.kind, LawKind::ScaledInverseCirculant);
  EXPECT_EQ(scaled.params.at("phi"), 1.0);
}

TEST(LawAccelerated, PowerOneIsInverseCirculant) {
  const DeletedModel dm = lifted(third_order_plant()).deleted(0);
  EXPECT_EQ(law_accelerated(dm, 1).L, dm.Pc_inv_q);
  EXPECT_THROW(law_accelerated(dm, 0), ConfigError);
}

TEST(LawAccelerated, PropagationIsPowerOfInverseCirculantPropagation) {
  const DeletedModel dm = lifted(third_order_plant()).deleted(0);
  const Eigen::MatrixXd E = Eigen::MatrixXd::Identity(kN, kN) - dm.P_q * dm.Pc_inv_q;
  for (int p : {3, 6}) {
    Eigen::MatrixXd Ep = Eigen::MatrixXd::Identity(kN, kN);
    for (int k = 0; k < p; ++k) Ep = Ep * E;
    const Eigen::MatrixXd H = error_propagation(dm.P_q, law_accelerated(dm, p));
    EXPECT_LT((H - Ep).cwiseAbs().maxCoeff(), 1e-8) << p;
  }
}

TEST(LawAccelerated, ThirdOrderSingularValues) {
  const DeletedModel dm = lifted(third_order_plant()).deleted(0);
  const Eigen::VectorXd s3 = singular_values(error_propagation(dm.P_q, law_accelerated(dm, 3)));
  const Eigen::VectorXd s6 = singular_values(error_propagation(dm.P_q, law_accelerated(dm, 6)));
  EXPECT_NEAR(s3(0), 12.7055, 1e-2 * 12.7055);
  EXPECT_NEAR(s6(0), 12.7055, 1e-2 * 12.7055);
  // sigma_2 sits near the floating point floor; within one order of magnitude
  EXPECT_LT(std::abs(std::log10(s3(1) / 1.1210e-5)), 1.0);
  EXPECT_LT(std::abs(std::log10(s6(1) / 2.6757e-13)), 1.0);
}

TEST(LawAccelerated, WorksOnDeletedModels) {
  const DeletedModel dm = lifted(fifth_order_plant()).deleted(2);
  const Eigen::MatrixXd E = error_propagation(dm.P_q, dm.Pc_inv_q);
  const LearningLaw law = law_accelerated(dm, 2);
  EXPECT_EQ(law.L.cols(), kN - 2);
  EXPECT_LT((error_propagation(dm.P_q, law) - E * E).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(LawAccelerated, StallingFixedPointCondition) {
  const DeletedModel dm = lifted(third_order_plant()).deleted(0);
  const Svd s = svd(error_propagation(dm.P_q, law_accelerated(dm, 6)));
  const double v1_s1_u1 = s.V.col(0).dot(s.sigma(0) * s.U.col(0));
  EXPECT_LT(std::abs(v1_s1_u1 - 1.0), 0.05);
}

TEST(LawAccelerated, RepeatedPropagationApproachesIdempotent) {
  // One inverse-circulant propagation E is far from idempotent at its top
  // singular direction; from the second power on, E^p squared is E^p.
  const DeletedModel dm = lifted(third_order_plant()).deleted(0);
  auto defect = [&](int p) {
    const Eigen::MatrixXd H = error_propagation(dm.P_q, law_accelerated(dm, p));
    return singular_values(H * H - H)(0) / singular_values(H)(0);
  };
  const double d1 = defect(1);
  const double d2 = defect(2);
  const double d3 = defect(3);
  EXPECT_GT(d1, 0.5);
  EXPECT_LT(d2, 0.05);
  EXPECT_LT(d3, d2);
}

TEST(LawPartialIsometry, IdentityPlant) {
  EXPECT_LT((law_partial_isometry(Eigen::MatrixXd::Identity(5, 5)).L - Eigen::MatrixXd::Identity(5, 5)).cwiseAbs().maxCoeff(),
            1e-15);
}

TEST(LawPartialIsometry, WideDiagonalGivesRectangularIdentity) {
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(3, 5);
  P(0, 0) = 0.5;
  P(1, 1) = 2.0;
  P(2, 2) = 1.5;
  const LearningLaw law = law_partial_isometry(P);
  EXPECT_LT((law.L - Eigen::MatrixXd::Identity(5, 3)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(law.q, 2);
}

TEST(LawPartialIsometry, ThirdOrderDeletedIsMonotonic) {
  const DeletedModel dm = lifted(third_order_plant()).deleted(1);
  const Eigen::VectorXd sp = singular_values(dm.P_q);
  ASSERT_GT(sp.minCoeff(), 0.0);
  ASSERT_LT(sp.maxCoeff(), 2.0);
  const Eigen::VectorXd s = singular_values(error_propagation(dm.P_q, law_partial_isometry(dm.P_q)));
  EXPECT_LT(s.maxCoeff(), 1.0);
  EXPECT_GT(s.minCoeff(), 0.0);
  // |1 - sigma_i(P_q)|, sorted descending
  Eigen::VectorXd expected = (1.0 - sp.array()).abs();
  std::sort(expected.data(), expected.data() + expected.size(), std::greater<>());
  EXPECT_LT((s - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(LawPartialIsometry, RankDeficientLiftedMatrixRejected) {
  const DeletedModel dm = lifted(third_order_plant()).deleted(0);
  EXPECT_THROW(law_partial_isometry(dm.P_q), DegenerateError);
  EXPECT_NO_THROW(law_partial_isometry(dm.P_q, 0.0));
}

TEST(LawContractionMapping, IdentityPlant) {
  EXPECT_EQ(law_contraction_mapping(Eigen::MatrixXd::Identity(4, 4)).L, Eigen::MatrixXd::Identity(4, 4));
}

TEST(LawContractionMapping, SingularValuesFollowSvdAlgebra) {
  std::mt19937_64 rng(11);
  const Eigen::MatrixXd P = 0.4 * oracle::random_matrix(rng, 6, 8);
  const Eigen::VectorXd sp = singular_values(P);
  Eigen::VectorXd expected = (1.0 - sp.array().square()).abs();
  std::sort(expected.data(), expected.data() + expected.size(), std::greater<>());
  const Eigen::VectorXd s = singular_values(error_propagation(P, law_contraction_mapping(P)));
  EXPECT_LT((s - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(LawContractionMapping, ThirdOrderMonotonicVerdictMatchesSvd) {
  const DeletedModel dm = lifted(third_order_plant()).deleted(1);
  const double smax = singular_values(dm.P_q)(0);
  const ConvergenceReport rep = analyze(error_propagation(dm.P_q, law_contraction_mapping(dm.P_q)));
  EXPECT_EQ(rep.monotonic, smax * smax < 2.0);
  EXPECT_TRUE(rep.monotonic);
}

TEST(LawQuadraticCost, IdentityPlantHalvesGain) {
  EXPECT_LT((law_quadratic_cost(Eigen::MatrixXd::Identity(4, 4)).L - 0.5 * Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff(),
            1e-15);
  EXPECT_THROW(law_quadratic_cost(Eigen::MatrixXd::Identity(2, 2), 0.0), ConfigError);
}

TEST(LawQuadraticCost, SingularValuesOnBothSides) {
  const DeletedModel dm = lifted(fourth_order_plant()).deleted(2);
  for (double w : {0.3, 1.0, 4.0}) {
    const LearningLaw law = law_quadratic_cost(dm.P_q, w);
    const Eigen::VectorXd sp = singular_values(dm.P_q);
    // output side: N - q values w / (w + sigma^2)
    Eigen::VectorXd expected = (w / (w + sp.array().square())).matrix();
    std::sort(expected.data(), expected.data() + expected.size(), std::greater<>());
    const Eigen::VectorXd s = singular_values(error_propagation(dm.P_q, law));
    EXPECT_LT((s - expected).cwiseAbs().maxCoeff(), 1e-10) << w;
    // input side I - L P_q: the same values plus exactly q unit ones from
    // the null space of the wide P_q
    const Eigen::VectorXd si = singular_values(Eigen::MatrixXd::Identity(kN, kN) - law.L * dm.P_q);
    int unit = 0;
    for (Eigen::Index i = 0; i < si.size(); ++i) unit += std::abs(si(i) - 1.0) < 1e-10 ? 1 : 0;
    EXPECT_EQ(unit, 2) << w;
  }
}

TEST(LawQuadraticCost, LargeWeightVanishes) {
  const DeletedModel dm = lifted(third_order_plant()).deleted(1);
  const LearningLaw law = law_quadratic_cost(dm.P_q, 1e12);
  EXPECT_LT(law.L.cwiseAbs().maxCoeff(), 1e-11);
  EXPECT_LT((error_propagation(dm.P_q, law) - Eigen::MatrixXd::Identity(kN - 1, kN - 1)).cwiseAbs().maxCoeff(), 1e-11);
}

TEST(ErrorPropagation, ExactInverseGivesZero) {
  Eigen::MatrixXd P(2, 2);
  P << 2.0, 0.0, 1.0, 4.0;
  EXPECT_LT(error_propagation(P, Eigen::MatrixXd(P.inverse())).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ErrorPropagation, ShapeMismatch) {
  EXPECT_THROW(error_propagation(Eigen::MatrixXd::Identity(3, 4), Eigen::MatrixXd::Identity(3, 3)), ConfigError);
}

TEST(ErrorPropagation, DeletedThirdOrderLeadingEigenvalue) {
  const DeletedModel dm = lifted(third_order_plant()).deleted(1);
  const ConvergenceReport rep = analyze(error_propagation(dm.P_q, law_inverse_circulant(dm)));
  EXPECT_NEAR(rep.eigenvalue_magnitudes(0), 0.9987, 1e-3);
}

TEST(LawKindNames, RoundTrip) {
  for (LawKind k : {LawKind::InverseCirculant, LawKind::OptimizedInverseCirculant, LawKind::Accelerated,
                    LawKind::ScaledInverseCirculant, LawKind::PartialIsometry, LawKind::ContractionMapping,
                    LawKind::QuadraticCost}) {
    EXPECT_EQ(parse_law_kind(to_string(k)), k);
  }
  EXPECT_FALSE(parse_law_kind("newton"));
}

}  // namespace
}  // namespace ilc
