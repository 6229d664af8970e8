#include "ilc/ilc_sim.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ilc/errors.hpp"
#include "ilc/linalg.hpp"

namespace ilc {

std::string_view to_string(TrajectoryLabel label) {
  switch (label) {
    case TrajectoryLabel::Yd1: return "yd1";
    case TrajectoryLabel::Yd2: return "yd2";
    case TrajectoryLabel::Custom: return "custom";
  }
  return "custom";
}

std::optional<TrajectoryLabel> parse_trajectory_label(std::string_view name) {
  if (name == "yd1") return TrajectoryLabel::Yd1;
  if (name == "yd2") return TrajectoryLabel::Yd2;
  if (name == "custom") return TrajectoryLabel::Custom;
  return std::nullopt;
}

double yd1(double t) {
  const double c = 1.0 - std::cos(std::numbers::pi * t / 2.0);
  return std::numbers::pi * c * c;
}

double yd2(double t) {
  const double t3 = t * t * t;
  return std::numbers::pi * (5.0 * t3 - 7.5 * t3 * t + 3.0 * t3 * t * t);
}

Trajectory make_trajectory(TrajectoryLabel label, double T, int N) {
  if (label == TrajectoryLabel::Custom) throw ConfigError("trajectory must be yd1 or yd2");
  if (N < 1) throw ConfigError("horizon N must be >= 1");
  Trajectory traj{Eigen::VectorXd(N), label, T};
  for (int k = 1; k <= N; ++k) {
    const double t = k * T;
    traj.samples(k - 1) = label == TrajectoryLabel::Yd1 ? yd1(t) : yd2(t);
  }
  return traj;
}

SimulationResult run_ilc(const LiftedModel& lm, const LearningLaw& law, const Trajectory& traj, int J,
                         const Eigen::VectorXd& u0, const Eigen::VectorXd& x0) {
  const int N = lm.N;
  const int q = law.q;
  if (J < 0) throw ConfigError("iteration count J must be >= 0");
  if (q < 0 || q >= N || law.L.rows() != N || law.L.cols() != N - q) {
    throw ConfigError("learning law shape does not match horizon N = " + std::to_string(N) +
                      " and deletion q = " + std::to_string(q));
  }
  if (traj.samples.size() != N) throw ConfigError("trajectory length does not match horizon N");
  if (u0.size() != 0 && u0.size() != N) throw ConfigError("initial input must have length N");
  if (x0.size() != 0 && x0.size() != lm.O.cols()) throw ConfigError("initial state has wrong dimension");

  Eigen::VectorXd u = u0.size() == 0 ? Eigen::VectorXd::Zero(N) : u0;
  const Eigen::VectorXd free_response =
      x0.size() == 0 ? Eigen::VectorXd::Zero(N) : Eigen::VectorXd(lm.O * x0);

  SimulationResult res;
  res.kind = law.kind;
  res.q = q;
  const double norm = std::sqrt(static_cast<double>(N - q));
  for (int j = 0; j <= J; ++j) {
    const Eigen::VectorXd full = traj.samples - (lm.P * u + free_response);
    Eigen::VectorXd e = full.tail(N - q);
    res.inputs.push_back(u);
    res.deleted_errors.push_back(full.head(q));
    res.rms.push_back(e.norm() / norm);
    if (j < J) u += law.L * e;
    res.errors.push_back(std::move(e));
  }
  return res;
}

SimulationResult worst_case_experiment(const LiftedModel& lm, const LearningLaw& law_new, int J, int singular_index) {
  if (law_new.q != 0) throw ConfigError("worst-case experiment needs a law built without deletion");
  const Svd s = svd(error_propagation(lm.P, law_new));
  if (singular_index < 0 || singular_index >= s.V.cols()) throw ConfigError("singular index out of range");
  const Trajectory target{s.V.col(singular_index), TrajectoryLabel::Custom, lm.T};
  return run_ilc(lm, law_new, target, J);
}

std::vector<SimulationResult> compare_laws(const LiftedModel& lm, const std::vector<LearningLaw>& laws,
                                           const Trajectory& traj, int J) {
  std::vector<SimulationResult> out;
  out.reserve(laws.size());
  for (const auto& law : laws) {
    if (law.q != laws.front().q) throw ConfigError("compared laws must share the deletion count");
    out.push_back(run_ilc(lm, law, traj, J));
  }
  return out;
}

}  // namespace ilc
