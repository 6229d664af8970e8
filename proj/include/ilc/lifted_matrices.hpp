#pragma once

#include <complex>

#include <Eigen/Dense>

#include "ilc/lti_model.hpp"

namespace ilc {

/// Finite-horizon input/output model of a sampled plant.
///   y = P u + O x(0),  y = [y(1)..y(N)],  u = [u(0)..u(N-1)]
struct LiftedModel {
  Eigen::MatrixXd P;    // N x N lower-triangular Toeplitz, P(i,j) = C A^(i-j) B
  Eigen::MatrixXd O;    // N x n, row k-1 is C A^k
  Eigen::MatrixXd Pc;   // N x N circulant, Pc(i,j) = C A^((i-j) mod N) B
  Eigen::VectorXd markov;
  int N = 0;
  double T = 0.0;
};

/// Lifted model with the first q time steps removed from the learning
/// objective: P_q drops the first q rows of P, Pc_inv_q drops the first q
/// columns of the circulant inverse.
struct DeletedModel {
  int q = 0;
  Eigen::MatrixXd P_q;       // (N-q) x N
  Eigen::MatrixXd Pc_inv_q;  // N x (N-q)
};

/// Result of conjugating the circulant by the DFT matrix H (rows indexed by
/// frequency k, H(k,n) = z0^(-k n), z0 = exp(2 pi i / N)).
///
/// The output history starts one step after the input history, so the
/// diagonal approximates z G(z) = C (I - A/z)^-1 B rather than G(z) itself;
/// both have the same magnitude. The exact residual is
/// z C (zI - A)^-1 A^N B, bounded by residual_constant * ||A^(N-1)||.
struct DftReport {
  Eigen::VectorXcd diagonal;           // diag(H Pc H^-1)
  Eigen::VectorXcd transfer_function;  // G(z_k) = C (z_k I - A)^-1 B
  Eigen::VectorXcd delayed_response;   // z_k G(z_k)
  double max_off_diagonal = 0.0;
  double off_diagonal_energy_ratio = 0.0;  // ||offdiag||_F^2 / ||H Pc H^-1||_F^2
  double max_diagonal_error = 0.0;         // max_k |diagonal_k - delayed_response_k|
  double power_norm = 0.0;                 // ||A^(N-1)||_2
  double residual_constant = 0.0;          // max_k ||C (z_k I - A)^-1 A||_2 ||B||_2
};

LiftedModel build_lifted(const DiscretePlant& dp, int N);

/// Circulant matrix with the given first column.
Eigen::MatrixXd circulant(const Eigen::VectorXd& first_column);

/// DFT eigenvalues of a circulant: lambda_k = sum_r c_r z0^(-k r).
Eigen::VectorXcd circulant_eigenvalues(const Eigen::VectorXd& first_column);

DftReport dft_verify(const LiftedModel& lm, const DiscretePlant& dp);

/// Inverse of lm.Pc through its DFT eigenvalues. Throws DegenerateError
/// naming the frequency index when some |lambda_k| < 1e-12 max |lambda|.
Eigen::MatrixXd circulant_inverse(const LiftedModel& lm);

/// Throws ConfigError unless 0 <= q < N.
DeletedModel delete_leading_steps(const LiftedModel& lm, const Eigen::MatrixXd& pc_inv, int q);

/// Deletion count implied by the plant: its number of sampling zeros
/// outside the unit circle.
int default_deletion_count(const DiscretePlant& dp);

}  // namespace ilc
