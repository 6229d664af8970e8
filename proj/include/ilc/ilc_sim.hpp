#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ilc/learning_laws.hpp"
#include "ilc/lifted_matrices.hpp"

namespace ilc {

enum class TrajectoryLabel { Yd1, Yd2, Custom };

std::string_view to_string(TrajectoryLabel label);
std::optional<TrajectoryLabel> parse_trajectory_label(std::string_view name);

/// Desired output y*(k), k = 1..N, sampled at t_k = k T.
struct Trajectory {
  Eigen::VectorXd samples;
  TrajectoryLabel label = TrajectoryLabel::Custom;
  double T = 0.0;
};

// yd1(t) = pi (1 - cos(pi t / 2))^2
double yd1(double t);
// yd2(t) = pi (5 t^3 - 7.5 t^4 + 3 t^5)
double yd2(double t);

/// Throws ConfigError for TrajectoryLabel::Custom.
Trajectory make_trajectory(TrajectoryLabel label, double T, int N);

struct SimulationResult {
  std::vector<Eigen::VectorXd> inputs;          // u_j, j = 0..J
  std::vector<Eigen::VectorXd> errors;          // e_j on steps q+1..N
  std::vector<Eigen::VectorXd> deleted_errors;  // y* - y_j on steps 1..q (diagnostic only)
  std::vector<double> rms;                      // ||e_j|| / sqrt(N - q)
  LawKind kind = LawKind::InverseCirculant;
  int q = 0;
};

/// Runs u_{j+1} = u_j + L e_j for J iterations on the lifted plant. Empty
/// u0 / x0 mean zero.
SimulationResult run_ilc(const LiftedModel& lm, const LearningLaw& law, const Trajectory& traj, int J,
                         const Eigen::VectorXd& u0 = {}, const Eigen::VectorXd& x0 = {});

/// Tracks y* = v_k, the k-th right singular vector of I - P L_new, from
/// u0 = 0, x0 = 0, so e_0 = v_k. law_new must be built without deletion.
SimulationResult worst_case_experiment(const LiftedModel& lm, const LearningLaw& law_new, int J,
                                       int singular_index = 0);

std::vector<SimulationResult> compare_laws(const LiftedModel& lm, const std::vector<LearningLaw>& laws,
                                           const Trajectory& traj, int J);

}  // namespace ilc
