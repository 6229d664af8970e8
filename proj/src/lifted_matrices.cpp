#include "ilc/lifted_matrices.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ilc/errors.hpp"
#include "ilc/linalg.hpp"

namespace ilc {

namespace {

constexpr double kImagResidueTol = 1e-10;
constexpr double kSingularEigenRatio = 1e-12;

std::complex<double> unit_root(int N, long long k) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % N) / N;
  return {std::cos(angle), std::sin(angle)};
}

Eigen::MatrixXcd dft_matrix(int N) {
  Eigen::MatrixXcd H(N, N);
  for (int k = 0; k < N; ++k)
    for (int n = 0; n < N; ++n) H(k, n) = std::conj(unit_root(N, static_cast<long long>(k) * n));
  return H;
}

}  // namespace

LiftedModel build_lifted(const DiscretePlant& dp, int N) {
  if (N < 1) throw ConfigError("horizon N must be >= 1");
  LiftedModel lm;
  lm.N = N;
  lm.T = dp.T;
  lm.markov = markov_parameters(dp, N);
  lm.P = Eigen::MatrixXd::Zero(N, N);
  for (int j = 0; j < N; ++j) lm.P.col(j).tail(N - j) = lm.markov.head(N - j);
  lm.O.resize(N, dp.order());
  Eigen::RowVectorXd row = dp.C * dp.A;
  for (int k = 0; k < N; ++k) {
    lm.O.row(k) = row;
    row = row * dp.A;
  }
  lm.Pc = circulant(lm.markov);
  return lm;
}

Eigen::MatrixXd circulant(const Eigen::VectorXd& first_column) {
  const Eigen::Index N = first_column.size();
  Eigen::MatrixXd C(N, N);
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index j = 0; j < N; ++j) C(i, j) = first_column(((i - j) % N + N) % N);
  return C;
}

Eigen::VectorXcd circulant_eigenvalues(const Eigen::VectorXd& first_column) {
  const int N = static_cast<int>(first_column.size());
  Eigen::VectorXcd lambda = Eigen::VectorXcd::Zero(N);
  for (int k = 0; k < N; ++k)
    for (int r = 0; r < N; ++r) lambda(k) += first_column(r) * std::conj(unit_root(N, static_cast<long long>(k) * r));
  return lambda;
}

DftReport dft_verify(const LiftedModel& lm, const DiscretePlant& dp) {
  const int N = lm.N;
  const Eigen::MatrixXcd H = dft_matrix(N);
  const Eigen::MatrixXcd H_inv = H.adjoint() / static_cast<double>(N);
  const Eigen::MatrixXcd PE = H * lm.Pc.cast<std::complex<double>>() * H_inv;

  DftReport rep;
  rep.diagonal = PE.diagonal();
  rep.transfer_function.resize(N);
  rep.delayed_response.resize(N);
  Eigen::MatrixXcd off = PE;
  off.diagonal().setZero();
  rep.max_off_diagonal = off.cwiseAbs().maxCoeff();
  const double total = PE.squaredNorm();
  rep.off_diagonal_energy_ratio = total > 0.0 ? off.squaredNorm() / total : 0.0;

  const int n = dp.order();
  const Eigen::MatrixXcd A = dp.A.cast<std::complex<double>>();
  const Eigen::RowVectorXcd C = dp.C.cast<std::complex<double>>();
  rep.power_norm = singular_values(matrix_power(dp.A, N - 1))(0);
  for (int k = 0; k < N; ++k) {
    const std::complex<double> z = unit_root(N, k);
    rep.transfer_function(k) = frequency_response(dp, z);
    rep.delayed_response(k) = z * rep.transfer_function(k);
    rep.max_diagonal_error = std::max(rep.max_diagonal_error, std::abs(rep.diagonal(k) - rep.delayed_response(k)));
    const Eigen::MatrixXcd M = z * Eigen::MatrixXcd::Identity(n, n) - A;
    const Eigen::RowVectorXcd row = M.transpose().partialPivLu().solve(C.transpose()).transpose() * A;
    rep.residual_constant = std::max(rep.residual_constant, row.norm() * dp.B.norm());
  }
  return rep;
}

Eigen::MatrixXd circulant_inverse(const LiftedModel& lm) {
  const int N = lm.N;
  const Eigen::VectorXcd lambda = circulant_eigenvalues(lm.markov);
  const double largest = lambda.cwiseAbs().maxCoeff();
  for (int k = 0; k < N; ++k) {
    if (!(std::abs(lambda(k)) >= kSingularEigenRatio * largest) || largest == 0.0) {
      throw DegenerateError("ill-conditioned circulant: DFT eigenvalue at frequency index " + std::to_string(k) +
                            " is numerically zero");
    }
  }
  // first column of the inverse = inverse DFT of 1/lambda
  Eigen::VectorXcd col = Eigen::VectorXcd::Zero(N);
  for (int n = 0; n < N; ++n) {
    for (int k = 0; k < N; ++k) col(n) += unit_root(N, static_cast<long long>(k) * n) / lambda(k);
    col(n) /= static_cast<double>(N);
  }
  const double scale = col.cwiseAbs().maxCoeff();
  if (col.imag().cwiseAbs().maxCoeff() > kImagResidueTol * std::max(1.0, scale)) {
    throw DegenerateError("circulant inverse has a non-negligible imaginary residue");
  }
  return circulant(col.real());
}

DeletedModel delete_leading_steps(const LiftedModel& lm, const Eigen::MatrixXd& pc_inv, int q) {
  if (q < 0 || q >= lm.N) {
    throw ConfigError("deletion count q must satisfy 0 <= q < N (q = " + std::to_string(q) +
                      ", N = " + std::to_string(lm.N) + ")");
  }
  if (pc_inv.rows() != lm.N || pc_inv.cols() != lm.N) throw ConfigError("circulant inverse must be N x N");
  DeletedModel dm;
  dm.q = q;
  dm.P_q = lm.P.bottomRows(lm.N - q);
  dm.Pc_inv_q = pc_inv.rightCols(lm.N - q);
  return dm;
}

int default_deletion_count(const DiscretePlant& dp) { return unstable_zero_count(dp); }

}  // namespace ilc
