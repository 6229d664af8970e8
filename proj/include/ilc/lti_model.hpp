#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace ilc {

struct SecondOrderSection {
  double omega = 0.0;  // natural frequency, rad/s
  double zeta = 0.0;   // damping ratio

  bool operator==(const SecondOrderSection&) const = default;
};

/// Continuous plant as a product of unity-DC-gain sections
///   prod a/(s+a) * prod w^2/(s^2 + 2 zeta w s + w^2).
struct ContinuousPlant {
  std::vector<double> first_order;
  std::vector<SecondOrderSection> second_order;

  /// Throws ConfigError unless every a, omega, zeta is positive and at least
  /// one section is present.
  void validate() const;
  int order() const;
  /// Direct evaluation of the factored transfer function.
  std::complex<double> evaluate(std::complex<double> s) const;

  bool operator==(const ContinuousPlant&) const = default;
};

struct ContinuousStateSpace {
  Eigen::MatrixXd A;
  Eigen::VectorXd B;
  Eigen::RowVectorXd C;

  int order() const { return static_cast<int>(A.rows()); }
  std::complex<double> evaluate(std::complex<double> s) const;
};

/// Sampled plant x(k+1) = A x(k) + B u(k), y(k) = C x(k).
struct DiscretePlant {
  Eigen::MatrixXd A;
  Eigen::VectorXd B;
  Eigen::RowVectorXd C;
  double T = 0.0;  // sample period, s

  int order() const { return static_cast<int>(A.rows()); }
};

// Benchmark plants.
ContinuousPlant third_order_plant();   // a = 8.8, w0 = 37, zeta = 0.5
ContinuousPlant fourth_order_plant();  // w0 = 37, w1 = 74, zeta = 0.5
ContinuousPlant fifth_order_plant();   // a = 8.8, w0 = 37, w1 = 74, zeta = 0.5

inline constexpr double kDefaultSampleHz = 50.0;
inline constexpr int kDefaultHorizon = 51;

/// Controllable canonical form per section, cascaded in the order
/// first-order sections then second-order sections.
ContinuousStateSpace realize(const ContinuousPlant& plant);

/// Exact zero-order-hold equivalent with sample period T > 0.
DiscretePlant discretize_zoh(const ContinuousStateSpace& css, double T);

/// Unit pulse response C A^r B, r = 0..N-1.
Eigen::VectorXd markov_parameters(const DiscretePlant& dp, int N);

/// C (zI - A)^-1 B. Throws DomainError when zI - A is singular.
std::complex<double> frequency_response(const DiscretePlant& dp, std::complex<double> z);

/// Zeros of the sampled transfer function (roots of its numerator polynomial).
std::vector<std::complex<double>> transmission_zeros(const DiscretePlant& dp);

/// Number of sampled-system zeros with magnitude > 1.
int unstable_zero_count(const DiscretePlant& dp);

double spectral_radius(const Eigen::MatrixXd& A);

}  // namespace ilc
