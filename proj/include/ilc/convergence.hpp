#pragma once

#include <vector>

#include <Eigen/Dense>

#include "ilc/lifted_matrices.hpp"

namespace ilc {

/// Spectral summary of an error propagation matrix E = I - P L.
/// converges: every |lambda| < 1 (error -> 0 for any initial error).
/// monotonic: every sigma < 1 (Euclidean error norm shrinks every run).
struct ConvergenceReport {
  Eigen::VectorXd singular_values;        // descending
  Eigen::VectorXd eigenvalue_magnitudes;  // descending
  double spectral_radius = 0.0;
  bool converges = false;
  bool monotonic = false;

  double sigma_max() const { return singular_values.size() > 0 ? singular_values(0) : 0.0; }
};

ConvergenceReport analyze(const Eigen::MatrixXd& E);

struct SweepPoint {
  double phi = 0.0;
  double sigma_max = 0.0;
  double spectral_radius = 0.0;
};

struct GainSweep {
  std::vector<SweepPoint> points;
  std::size_t argmin = 0;  // index of smallest sigma_max (first on ties)
};

/// Evenly spaced grid lo, lo + step, ..., up to hi (inclusive within step/2).
std::vector<double> make_grid(double lo, double hi, double step);

/// Analyzes I - phi P_q Pc_inv_q for each phi.
GainSweep gain_sweep(const DeletedModel& dm, const std::vector<double>& phi_grid);

}  // namespace ilc
