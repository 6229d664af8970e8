#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ilc/learning_laws.hpp"
#include "ilc/lifted_matrices.hpp"

namespace ilc {

/// Set of (row, column) gain positions in an N x (N-q) gain matrix.
class GainRegion {
 public:
  using Entry = std::pair<int, int>;

  GainRegion() = default;
  /// Throws ConfigError on out-of-bounds or duplicate entries.
  GainRegion(std::vector<Entry> entries, int rows, int cols);

  /// Union of the upper-left and upper-right block x block corners.
  static GainRegion corners(int rows, int cols, int block = 5);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  std::vector<Entry> entries_;
  int rows_ = 0;
  int cols_ = 0;
};

struct OptimizerConfig {
  double r = 0.1;  // weight on the step length
  int iterations = 1000;
  GainRegion region;  // empty means GainRegion::corners of the gain matrix
  bool reselect_region = false;

  void validate() const;
};

struct TracePoint {
  double sigma_max = 0.0;
  double spectral_radius = 0.0;
};

struct OptimizationTrace {
  std::vector<TracePoint> points;  // iterations + 1 entries on success
  Eigen::MatrixXd gains;
  LearningLaw law;
  bool completed = true;
  std::string diagnostic;
};

/// d sigma_k / d l_ij for every entry of L, where sigma_k is the k-th
/// singular value (0-based) of I - P_q L. Equals -(P_q^T u_k) v_k^T.
/// Throws DegenerateError when sigma_k is not simple.
Eigen::MatrixXd sensitivity_matrix(const Eigen::MatrixXd& P_q, const Eigen::MatrixXd& L, int k = 0);

/// Regularized steepest-descent step  -(S S^T + r I)^-1 S sigma, evaluated
/// in the equivalent scalar form -S sigma / (S^T S + r).
Eigen::VectorXd descent_step(double sigma, const Eigen::VectorXd& S, double r);

/// Starts from Pc_inv_q and repeatedly steps the region's gains against the
/// gradient of the largest singular value. Sensitivities are recomputed
/// every iteration.
OptimizationTrace optimize(const DeletedModel& dm, const OptimizerConfig& cfg);

struct SensitivityMap {
  Eigen::MatrixXd sensitivity;   // d sigma_1 / d l_ij over the whole gain matrix
  Eigen::VectorXd column_score;  // max |sensitivity| per column
  std::vector<int> flagged_columns;
};

/// Sensitivity of sigma_1 for the unmodified deleted inverse circulant.
/// A column is flagged when its score exceeds flag_factor times the median
/// column score.
SensitivityMap sensitivity_map(const DeletedModel& dm, double flag_factor = 10.0);

}  // namespace ilc
