#include "ilc/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "ilc/errors.hpp"

namespace ilc {

Svd svd(const Eigen::MatrixXd& M, SvdMethod method) {
  constexpr unsigned kThin = Eigen::ComputeThinU | Eigen::ComputeThinV;
  Svd out;
  if (method == SvdMethod::Jacobi) {
    Eigen::JacobiSVD<Eigen::MatrixXd> solver(M, kThin);
    out = {solver.matrixU(), solver.singularValues(), solver.matrixV()};
  } else {
    Eigen::BDCSVD<Eigen::MatrixXd> solver(M, kThin);
    out = {solver.matrixU(), solver.singularValues(), solver.matrixV()};
  }
  for (Eigen::Index k = 0; k < out.U.cols(); ++k) {
    Eigen::Index imax = 0;
    out.U.col(k).cwiseAbs().maxCoeff(&imax);
    if (out.U(imax, k) < 0.0) {
      out.U.col(k) *= -1.0;
      out.V.col(k) *= -1.0;
    }
  }
  return out;
}

Eigen::VectorXd singular_values(const Eigen::MatrixXd& M) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(M).singularValues();
}

Eigen::VectorXd eigenvalue_magnitudes(const Eigen::MatrixXd& M) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(M, false);
  if (solver.info() != Eigen::Success) throw DegenerateError("eigenvalue iteration did not converge");
  const Eigen::VectorXd mags = solver.eigenvalues().cwiseAbs();
  std::vector<Eigen::Index> order(mags.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) { return mags(a) > mags(b); });
  Eigen::VectorXd out(mags.size());
  for (std::size_t i = 0; i < order.size(); ++i) out(static_cast<Eigen::Index>(i)) = mags(order[i]);
  return out;
}

Eigen::MatrixXd matrix_power(const Eigen::MatrixXd& M, int p) {
  if (p < 0) throw ConfigError("matrix power must be >= 0");
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(M.rows(), M.cols());
  Eigen::MatrixXd base = M;
  while (p > 0) {
    if (p & 1) result = result * base;
    p >>= 1;
    if (p > 0) base = base * base;
  }
  return result;
}

}  // namespace ilc
