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

DeletedModel third_order(int q) {
  const LiftedModel lm = build_lifted(sampled(third_order_plant()), kN);
  return delete_leading_steps(lm, circulant_inverse(lm), q);
}

TEST(Analyze, ZeroMatrix) {
  const ConvergenceReport rep = analyze(Eigen::MatrixXd::Zero(4, 4));
  EXPECT_EQ(rep.spectral_radius, 0.0);
  EXPECT_EQ(rep.sigma_max(), 0.0);
  EXPECT_TRUE(rep.converges);
  EXPECT_TRUE(rep.monotonic);
}

TEST(Analyze, RejectsNonSquare) { EXPECT_THROW(analyze(Eigen::MatrixXd::Zero(2, 3)), ConfigError); }

TEST(Analyze, InverseCirculantPropagationSpectrum) {
  const DeletedModel dm = third_order(0);
  const ConvergenceReport rep = analyze(error_propagation(dm.P_q, dm.Pc_inv_q));
  const double expected[] = {18.2151, 1.3772, 0.2477, 0.0034, 0.0034, 0.0033};
  for (int i = 0; i < 6; ++i) {
    const double tol = expected[i] < 0.01 ? 5e-4 : 1e-2 * expected[i];
    EXPECT_NEAR(rep.singular_values(i), expected[i], tol) << i;
  }
  EXPECT_NEAR(rep.eigenvalue_magnitudes(0), 1.0, 1e-3);
  EXPECT_TRUE(rep.converges == (rep.spectral_radius < 1.0));
  EXPECT_FALSE(rep.monotonic);
}

TEST(Analyze, DeletedPropagationSpectrum) {
  const DeletedModel dm = third_order(1);
  const ConvergenceReport rep = analyze(error_propagation(dm.P_q, dm.Pc_inv_q));
  EXPECT_NEAR(rep.singular_values(0), 13.8093, 1e-2 * 13.8093);
  EXPECT_NEAR(rep.singular_values(1), 0.5417, 1e-2 * 0.5417);
  EXPECT_NEAR(rep.singular_values(2), 0.1135, 1e-2 * 0.1135);
  EXPECT_NEAR(rep.spectral_radius, 0.9987, 1e-3);
  EXPECT_TRUE(rep.converges);
  EXPECT_FALSE(rep.monotonic);
}

TEST(Analyze, SpectraSortedAndRadiusBoundedBySigma) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 9;
    const Eigen::MatrixXd E = oracle::random_matrix(rng, n, n) * (0.1 + 0.05 * trial);
    const ConvergenceReport rep = analyze(E);
    EXPECT_LE(rep.spectral_radius, rep.sigma_max() + 1e-10);
    EXPECT_EQ(rep.converges, rep.spectral_radius < 1.0);
    EXPECT_EQ(rep.monotonic, rep.sigma_max() < 1.0);
    for (Eigen::Index i = 1; i < rep.singular_values.size(); ++i) {
      EXPECT_LE(rep.singular_values(i), rep.singular_values(i - 1));
      EXPECT_LE(rep.eigenvalue_magnitudes(i), rep.eigenvalue_magnitudes(i - 1));
    }
  }
}

TEST(Analyze, PowersShrinkSecondSingularValue) {
  const DeletedModel dm = third_order(0);
  const Eigen::MatrixXd E = error_propagation(dm.P_q, dm.Pc_inv_q);
  const double s1 = analyze(E).singular_values(1);
  const double s3 = analyze(matrix_power(E, 3)).singular_values(1);
  const double s6 = analyze(matrix_power(E, 6)).singular_values(1);
  EXPECT_LT(s6, s3);
  EXPECT_LT(s3, s1);
}

TEST(MakeGrid, InclusiveAndHitsZero) {
  const std::vector<double> g = make_grid(-1.0, 2.0, 0.05);
  ASSERT_EQ(g.size(), 61u);
  EXPECT_EQ(g.front(), -1.0);
  EXPECT_NEAR(g.back(), 2.0, 1e-12);
  EXPECT_EQ(g[20], 0.0);
  EXPECT_THROW(make_grid(0.0, 1.0, 0.0), ConfigError);
  EXPECT_THROW(make_grid(1.0, 0.0, 0.1), ConfigError);
}

TEST(GainSweep, ZeroGainIsIdentity) {
  const GainSweep sweep = gain_sweep(third_order(1), {0.0});
  EXPECT_EQ(sweep.points[0].sigma_max, 1.0);
  EXPECT_EQ(sweep.points[0].spectral_radius, 1.0);
  EXPECT_THROW(gain_sweep(third_order(1), {}), ConfigError);
}

TEST(GainSweep, MinimumAtZeroGain) {
  const GainSweep sweep = gain_sweep(third_order(1), make_grid(-1.0, 2.0, 0.05));
  EXPECT_EQ(sweep.points[sweep.argmin].phi, 0.0);
  EXPECT_NEAR(sweep.points[sweep.argmin].sigma_max, 1.0, 1e-10);
  for (const auto& p : sweep.points) {
    if (p.phi != 0.0) EXPECT_GT(p.sigma_max, 1.0) << p.phi;
    EXPECT_LE(p.spectral_radius, p.sigma_max + 1e-10);
  }
  const auto& unit = sweep.points[40];
  ASSERT_NEAR(unit.phi, 1.0, 1e-12);
  EXPECT_NEAR(unit.sigma_max, 13.8093, 1e-2 * 13.8093);
}

}  // namespace
}  // namespace ilc
