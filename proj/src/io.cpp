#include "ilc/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ilc/errors.hpp"

namespace ilc::io {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string matrix_filename(const std::string& tag, int N, int q) {
  return tag + "_N" + std::to_string(N) + "_q" + std::to_string(q) + ".csv";
}

std::string matrix_to_csv(const Eigen::MatrixXd& M) {
  std::string out;
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_double(M(i, j));
    }
    out += '\n';
  }
  return out;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open " + path.string() + " for writing");
  f << text;
}

void write_matrix_csv(const fs::path& path, const Eigen::MatrixXd& M) { write_text(path, matrix_to_csv(M)); }

Eigen::MatrixXd read_matrix_csv(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (!rows.empty() && row.size() != rows.front().size()) throw ConfigError(path.string() + ": ragged matrix CSV");
    rows.push_back(std::move(row));
  }
  Eigen::MatrixXd M(static_cast<Eigen::Index>(rows.size()), rows.empty() ? 0 : static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return M;
}

json read_json(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open " + path.string());
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

json law_sidecar(const LearningLaw& law) {
  json params = json::object();
  for (const auto& [k, v] : law.params) params[k] = v;
  return {{"kind", std::string(to_string(law.kind))}, {"q", law.q}, {"params", params}};
}

fs::path export_law(const fs::path& dir, const LearningLaw& law) {
  const std::string tag = "L_" + std::string(to_string(law.kind));
  const fs::path csv = dir / matrix_filename(tag, static_cast<int>(law.L.rows()), law.q);
  write_matrix_csv(csv, law.L);
  fs::path side = csv;
  side.replace_extension(".json");
  write_text(side, law_sidecar(law).dump(2) + "\n");
  return csv;
}

LearningLaw import_law(const fs::path& csv_path) {
  fs::path side = csv_path;
  side.replace_extension(".json");
  const json meta = read_json(side);
  LearningLaw law;
  law.L = read_matrix_csv(csv_path);
  const auto kind = parse_law_kind(meta.at("kind").get<std::string>());
  if (!kind) throw ConfigError(side.string() + ": unknown law kind");
  law.kind = *kind;
  law.q = meta.at("q").get<int>();
  for (const auto& [k, v] : meta.at("params").items()) law.params[k] = v.get<double>();
  return law;
}

PlantSpec parse_plant_spec(const json& doc) {
  if (!doc.is_object()) throw ConfigError("plant spec must be a JSON object");
  PlantSpec spec;
  try {
    if (doc.contains("first_order")) spec.plant.first_order = doc.at("first_order").get<std::vector<double>>();
    if (doc.contains("second_order")) {
      for (const auto& s : doc.at("second_order")) {
        spec.plant.second_order.push_back({s.at("omega").get<double>(), s.at("zeta").get<double>()});
      }
    }
    if (doc.contains("sample_hz")) spec.sample_hz = doc.at("sample_hz").get<double>();
    if (doc.contains("N")) spec.N = doc.at("N").get<int>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("plant spec: ") + e.what());
  }
  spec.plant.validate();
  if (!(spec.sample_hz > 0.0)) throw ConfigError("plant spec: sample_hz must be > 0");
  if (spec.N < 1) throw ConfigError("plant spec: N must be >= 1");
  return spec;
}

json plant_to_json(const ContinuousPlant& plant) {
  json second = json::array();
  for (const auto& s : plant.second_order) second.push_back({{"omega", s.omega}, {"zeta", s.zeta}});
  return {{"first_order", plant.first_order}, {"second_order", second}};
}

json report_to_json(const ConvergenceReport& rep) {
  return {{"singular_values", std::vector<double>(rep.singular_values.begin(), rep.singular_values.end())},
          {"eigenvalue_magnitudes",
           std::vector<double>(rep.eigenvalue_magnitudes.begin(), rep.eigenvalue_magnitudes.end())},
          {"spectral_radius", rep.spectral_radius},
          {"converges", rep.converges},
          {"monotonic", rep.monotonic}};
}

std::string report_table_csv(const ConvergenceReport& rep) {
  std::string out = "index,sigma,abs_lambda\n";
  for (Eigen::Index i = 0; i < rep.singular_values.size(); ++i) {
    out += std::to_string(i + 1) + ',' + format_double(rep.singular_values(i)) + ',' +
           format_double(rep.eigenvalue_magnitudes(i)) + '\n';
  }
  return out;
}

std::string sweep_csv(const GainSweep& sweep) {
  std::string out = "phi,sigma_max,spectral_radius\n";
  for (const auto& p : sweep.points) {
    out += format_double(p.phi) + ',' + format_double(p.sigma_max) + ',' + format_double(p.spectral_radius) + '\n';
  }
  return out;
}

std::string trace_csv(const OptimizationTrace& trace) {
  std::string out = "iteration,sigma_max,spectral_radius\n";
  for (std::size_t i = 0; i < trace.points.size(); ++i) {
    out += std::to_string(i) + ',' + format_double(trace.points[i].sigma_max) + ',' +
           format_double(trace.points[i].spectral_radius) + '\n';
  }
  return out;
}

std::string comparison_csv(const std::vector<SimulationResult>& runs) {
  std::string out = "iteration";
  std::size_t length = 0;
  for (const auto& r : runs) {
    out += ",rms_" + std::string(to_string(r.kind));
    length = std::max(length, r.rms.size());
  }
  out += '\n';
  for (std::size_t j = 0; j < length; ++j) {
    out += std::to_string(j);
    for (const auto& r : runs) out += ',' + (j < r.rms.size() ? format_double(r.rms[j]) : std::string());
    out += '\n';
  }
  return out;
}

}  // namespace ilc::io
