#include "ilc/lti_model.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "ilc/errors.hpp"

namespace ilc {

namespace {

// Series connection: signal flows through `first`, then `second`.
ContinuousStateSpace cascade(const ContinuousStateSpace& first, const ContinuousStateSpace& second) {
  const int n1 = first.order();
  const int n2 = second.order();
  ContinuousStateSpace out;
  out.A = Eigen::MatrixXd::Zero(n1 + n2, n1 + n2);
  out.A.topLeftCorner(n1, n1) = first.A;
  out.A.bottomRightCorner(n2, n2) = second.A;
  out.A.bottomLeftCorner(n2, n1) = second.B * first.C;
  out.B = Eigen::VectorXd::Zero(n1 + n2);
  out.B.head(n1) = first.B;
  out.C = Eigen::RowVectorXd::Zero(n1 + n2);
  out.C.tail(n2) = second.C;
  return out;
}

ContinuousStateSpace first_order_section(double a) {
  ContinuousStateSpace s;
  s.A = Eigen::MatrixXd::Constant(1, 1, -a);
  s.B = Eigen::VectorXd::Ones(1);
  s.C = Eigen::RowVectorXd::Constant(1, a);
  return s;
}

ContinuousStateSpace second_order_section(const SecondOrderSection& sec) {
  const double w2 = sec.omega * sec.omega;
  ContinuousStateSpace s;
  s.A.resize(2, 2);
  s.A << 0.0, 1.0, -w2, -2.0 * sec.zeta * sec.omega;
  s.B.resize(2);
  s.B << 0.0, 1.0;
  s.C.resize(2);
  s.C << w2, 0.0;
  return s;
}

std::complex<double> state_space_response(const Eigen::MatrixXd& A, const Eigen::VectorXd& B,
                                          const Eigen::RowVectorXd& C, std::complex<double> z) {
  const int n = static_cast<int>(A.rows());
  Eigen::MatrixXcd M = z * Eigen::MatrixXcd::Identity(n, n) - A.cast<std::complex<double>>();
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(M);
  if (!lu.isInvertible()) {
    throw DomainError("evaluation point z = (" + std::to_string(z.real()) + ", " +
                      std::to_string(z.imag()) + ") is an eigenvalue of A");
  }
  Eigen::VectorXcd x = lu.solve(B.cast<std::complex<double>>());
  return (C.cast<std::complex<double>>() * x)(0);
}

// Monic polynomial coefficients (highest power first) with the given roots.
Eigen::VectorXd poly_from_roots(const Eigen::VectorXcd& roots) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(roots.size() + 1);
  c(0) = 1.0;
  for (Eigen::Index k = 0; k < roots.size(); ++k) {
    for (Eigen::Index i = k + 1; i >= 1; --i) c(i) -= roots(k) * c(i - 1);
  }
  return c.real();
}

}  // namespace

void ContinuousPlant::validate() const {
  if (first_order.empty() && second_order.empty()) {
    throw ConfigError("plant: at least one section is required");
  }
  for (double a : first_order) {
    if (!(a > 0.0) || !std::isfinite(a)) throw ConfigError("plant.first_order: pole parameter must be > 0");
  }
  for (const auto& s : second_order) {
    if (!(s.omega > 0.0) || !std::isfinite(s.omega)) throw ConfigError("plant.second_order.omega must be > 0");
    if (!(s.zeta > 0.0) || !std::isfinite(s.zeta)) throw ConfigError("plant.second_order.zeta must be > 0");
  }
}

int ContinuousPlant::order() const {
  return static_cast<int>(first_order.size() + 2 * second_order.size());
}

std::complex<double> ContinuousPlant::evaluate(std::complex<double> s) const {
  std::complex<double> g = 1.0;
  for (double a : first_order) g *= a / (s + a);
  for (const auto& sec : second_order) {
    const double w2 = sec.omega * sec.omega;
    g *= w2 / (s * s + 2.0 * sec.zeta * sec.omega * s + w2);
  }
  return g;
}

std::complex<double> ContinuousStateSpace::evaluate(std::complex<double> s) const {
  return state_space_response(A, B, C, s);
}

ContinuousPlant third_order_plant() { return {{8.8}, {{37.0, 0.5}}}; }
ContinuousPlant fourth_order_plant() { return {{}, {{37.0, 0.5}, {74.0, 0.5}}}; }
ContinuousPlant fifth_order_plant() { return {{8.8}, {{37.0, 0.5}, {74.0, 0.5}}}; }

ContinuousStateSpace realize(const ContinuousPlant& plant) {
  plant.validate();
  std::vector<ContinuousStateSpace> sections;
  for (double a : plant.first_order) sections.push_back(first_order_section(a));
  for (const auto& s : plant.second_order) sections.push_back(second_order_section(s));
  ContinuousStateSpace out = sections.front();
  for (std::size_t i = 1; i < sections.size(); ++i) out = cascade(out, sections[i]);
  return out;
}

DiscretePlant discretize_zoh(const ContinuousStateSpace& css, double T) {
  if (!(T > 0.0) || !std::isfinite(T)) throw ConfigError("sample period must be > 0");
  const int n = css.order();
  // exp([[Ac, Bc], [0, 0]] T) = [[A, B], [0, 1]]
  Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(n + 1, n + 1);
  aug.topLeftCorner(n, n) = css.A * T;
  aug.topRightCorner(n, 1) = css.B * T;
  const Eigen::MatrixXd e = aug.exp();
  DiscretePlant dp;
  dp.A = e.topLeftCorner(n, n);
  dp.B = e.topRightCorner(n, 1);
  dp.C = css.C;
  dp.T = T;
  return dp;
}

Eigen::VectorXd markov_parameters(const DiscretePlant& dp, int N) {
  if (N < 1) throw ConfigError("horizon N must be >= 1");
  Eigen::VectorXd m(N);
  Eigen::VectorXd x = dp.B;
  for (int r = 0; r < N; ++r) {
    m(r) = dp.C.dot(x);
    x = dp.A * x;
  }
  return m;
}

std::complex<double> frequency_response(const DiscretePlant& dp, std::complex<double> z) {
  return state_space_response(dp.A, dp.B, dp.C, z);
}

std::vector<std::complex<double>> transmission_zeros(const DiscretePlant& dp) {
  const int n = dp.order();
  const Eigen::VectorXd den = poly_from_roots(Eigen::EigenSolver<Eigen::MatrixXd>(dp.A, false).eigenvalues());
  const Eigen::VectorXd m = markov_parameters(dp, n);
  // a(z) G(z) = b_1 z^(n-1) + ... + b_n with b_k = sum_{i<k} a_i m_(k-1-i)
  Eigen::VectorXd num = Eigen::VectorXd::Zero(n);
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < k; ++i) num(k - 1) += den(i) * m(k - 1 - i);
  }
  const double scale = num.cwiseAbs().maxCoeff();
  int lead = 0;
  while (lead < n && std::abs(num(lead)) <= 1e-14 * scale) ++lead;
  const int degree = n - 1 - lead;
  std::vector<std::complex<double>> zeros;
  if (degree <= 0) return zeros;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  for (int j = 0; j < degree; ++j) companion(0, j) = -num(lead + 1 + j) / num(lead);
  companion.bottomLeftCorner(degree - 1, degree - 1).setIdentity();
  const Eigen::VectorXcd roots = Eigen::EigenSolver<Eigen::MatrixXd>(companion, false).eigenvalues();
  zeros.assign(roots.data(), roots.data() + roots.size());
  return zeros;
}

int unstable_zero_count(const DiscretePlant& dp) {
  int count = 0;
  for (const auto& z : transmission_zeros(dp)) count += std::abs(z) > 1.0 ? 1 : 0;
  return count;
}

double spectral_radius(const Eigen::MatrixXd& A) {
  return Eigen::EigenSolver<Eigen::MatrixXd>(A, false).eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace ilc
