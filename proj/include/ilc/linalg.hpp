#pragma once

#include <Eigen/Dense>

namespace ilc {

/// Thin SVD with deterministic signs: the largest-magnitude entry of every
/// left singular vector is made positive and the sign is carried to the
/// matching right singular vector.
struct Svd {
  Eigen::MatrixXd U;
  Eigen::VectorXd sigma;  // descending
  Eigen::MatrixXd V;
};

enum class SvdMethod {
  Jacobi,           // one-sided Jacobi, high relative accuracy for tiny singular values
  DivideConquer,    // faster; used where only the leading triplets matter
};

Svd svd(const Eigen::MatrixXd& M, SvdMethod method = SvdMethod::Jacobi);
Eigen::VectorXd singular_values(const Eigen::MatrixXd& M);

/// Eigenvalue magnitudes of a general square matrix, descending. Ties keep
/// the solver's original order.
Eigen::VectorXd eigenvalue_magnitudes(const Eigen::MatrixXd& M);

/// Integer power by repeated squaring, p >= 0.
Eigen::MatrixXd matrix_power(const Eigen::MatrixXd& M, int p);

}  // namespace ilc
