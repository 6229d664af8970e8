#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "ilc/convergence.hpp"
#include "ilc/gain_optimizer.hpp"
#include "ilc/ilc_sim.hpp"
#include "ilc/learning_laws.hpp"
#include "ilc/lti_model.hpp"

namespace ilc::io {

/// printf "%.17g".
std::string format_double(double v);

/// "<tag>_N<N>_q<q>.csv"
std::string matrix_filename(const std::string& tag, int N, int q);

/// Row-major CSV, comma separated, 17 significant digits.
std::string matrix_to_csv(const Eigen::MatrixXd& M);
void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXd& M);
Eigen::MatrixXd read_matrix_csv(const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, const std::string& text);
nlohmann::json read_json(const std::filesystem::path& path);

/// {"kind": ..., "q": ..., "params": {...}}
nlohmann::json law_sidecar(const LearningLaw& law);
/// Writes <tag>_N<N>_q<q>.csv and the matching .json sidecar; returns the csv path.
std::filesystem::path export_law(const std::filesystem::path& dir, const LearningLaw& law);
LearningLaw import_law(const std::filesystem::path& csv_path);

/// Plant spec document:
///   {"first_order": [8.8], "second_order": [{"omega": 37.0, "zeta": 0.5}],
///    "sample_hz": 50.0, "N": 51}
/// sample_hz and N are optional.
struct PlantSpec {
  ContinuousPlant plant;
  double sample_hz = kDefaultSampleHz;
  int N = kDefaultHorizon;

  bool operator==(const PlantSpec&) const = default;
};

PlantSpec parse_plant_spec(const nlohmann::json& doc);
nlohmann::json plant_to_json(const ContinuousPlant& plant);

nlohmann::json report_to_json(const ConvergenceReport& rep);
std::string report_table_csv(const ConvergenceReport& rep);
std::string sweep_csv(const GainSweep& sweep);
std::string trace_csv(const OptimizationTrace& trace);
/// Columns: iteration, rms_<lawkind>...
std::string comparison_csv(const std::vector<SimulationResult>& runs);

}  // namespace ilc::io
