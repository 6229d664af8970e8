#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "ilc/learning_laws.hpp"
#include "ilc/lifted_matrices.hpp"
#include "ilc/lti_model.hpp"

namespace ilc {

/// Everything one CLI run needs. Built from a preset or a JSON config file,
/// then overridden field by field from command-line flags.
struct ExperimentConfig {
  std::string plant_name = "third_order";  // preset name, file path, or "inline"
  ContinuousPlant plant = third_order_plant();
  int N = kDefaultHorizon;
  double sample_hz = kDefaultSampleHz;
  std::optional<int> q;  // unset: count of unstable sampling zeros
  LawKind law = LawKind::InverseCirculant;
  int power = 1;
  double phi = 1.0;
  double phi_min = -1.0;
  double phi_max = 2.0;
  double phi_step = 0.05;
  double r = 0.1;
  int optimizer_iterations = 1000;
  int region_block = 5;
  bool reselect_region = false;
  double contraction_gain = 1.0;
  double quadratic_weight = 1.0;
  std::string trajectory = "yd1";
  int ilc_iterations = 50;
  std::string out = "out";

  bool operator==(const ExperimentConfig&) const = default;

  /// Throws ConfigError naming the first offending field.
  void validate() const;
};

/// third_order, fourth_order, fifth_order: T = 0.02 s, N = 51, q = 1, 2, 2.
std::optional<ExperimentConfig> preset(const std::string& name);

/// Resolves a preset name or a plant-spec file path.
ExperimentConfig config_for_plant(const std::string& plant);

nlohmann::json config_to_json(const ExperimentConfig& cfg);
/// Fields missing from the document keep the values of `base`.
ExperimentConfig config_from_json(const nlohmann::json& doc, const ExperimentConfig& base = {});

/// Sampled plant, lifted matrices, and deletion resolved from a config.
struct Experiment {
  ExperimentConfig config;
  DiscretePlant plant;
  LiftedModel lifted;
  Eigen::MatrixXd pc_inv;
  DeletedModel deleted;
};

Experiment prepare(const ExperimentConfig& cfg);

/// Builds the configured law; the optimized law runs the optimizer.
LearningLaw build_law(const Experiment& ex, LawKind kind);

// Commands. Each writes its artifacts under cfg.out plus run.json holding the
// resolved config, and prints a one-line summary to `log`.
void cmd_analyze(const ExperimentConfig& cfg, std::ostream& log);
void cmd_optimize(const ExperimentConfig& cfg, std::ostream& log);
void cmd_simulate(const ExperimentConfig& cfg, std::ostream& log);
void cmd_compare(const ExperimentConfig& cfg, std::ostream& log);
void cmd_sweep(const ExperimentConfig& cfg, std::ostream& log);
void cmd_sensitivity(const ExperimentConfig& cfg, std::ostream& log);

/// Dispatch by name; returns the process exit code (0, 2 config, 3 numerical).
int run_command(const std::string& name, const ExperimentConfig& cfg, std::ostream& log, std::ostream& err);

}  // namespace ilc
