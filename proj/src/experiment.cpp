#include "ilc/experiment.hpp"

#include <cstdio>
#include <filesystem>
#include <ostream>

#include "ilc/convergence.hpp"
#include "ilc/errors.hpp"
#include "ilc/gain_optimizer.hpp"
#include "ilc/ilc_sim.hpp"
#include "ilc/io.hpp"

namespace ilc {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string summary(const char* label, double a, const char* label2, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s=%.17g %s=%.17g", label, a, label2, b);
  return buf;
}

void write_run_json(const ExperimentConfig& cfg, const std::string& command, json result) {
  json doc = {{"command", command}, {"config", config_to_json(cfg)}, {"result", std::move(result)}};
  io::write_text(fs::path(cfg.out) / "run.json", doc.dump(2) + "\n");
}

LawKind effective_law(const ExperimentConfig& cfg) {
  if (cfg.law == LawKind::InverseCirculant && cfg.power > 1) return LawKind::Accelerated;
  return cfg.law;
}

template <typename T>
void take(const json& doc, const char* key, T& field) {
  if (doc.contains(key)) field = doc.at(key).get<T>();
}

}  // namespace

void ExperimentConfig::validate() const {
  plant.validate();
  if (N < 1) throw ConfigError("N must be >= 1");
  if (!(sample_hz > 0.0)) throw ConfigError("sample_hz must be > 0");
  if (q && (*q < 0 || *q >= N)) throw ConfigError("q must satisfy 0 <= q < N");
  if (power < 1) throw ConfigError("power must be >= 1");
  if (!(phi_step > 0.0) || !(phi_max >= phi_min)) throw ConfigError("phi grid: need phi_step > 0 and phi_max >= phi_min");
  if (!(r > 0.0)) throw ConfigError("optimizer.r must be > 0");
  if (optimizer_iterations < 1) throw ConfigError("iterations must be >= 1");
  if (region_block < 1) throw ConfigError("optimizer.block must be >= 1");
  if (!(quadratic_weight > 0.0)) throw ConfigError("quadratic_weight must be > 0");
  if (!parse_trajectory_label(trajectory) || trajectory == "custom") throw ConfigError("trajectory must be yd1 or yd2");
  if (ilc_iterations < 0) throw ConfigError("ilc_iterations must be >= 0");
  if (out.empty()) throw ConfigError("out must name a directory");
}

std::optional<ExperimentConfig> preset(const std::string& name) {
  ExperimentConfig cfg;
  cfg.plant_name = name;
  if (name == "third_order") {
    cfg.plant = third_order_plant();
    cfg.q = 1;
    cfg.optimizer_iterations = 1000;
  } else if (name == "fourth_order") {
    cfg.plant = fourth_order_plant();
    cfg.q = 2;
    cfg.optimizer_iterations = 10000;
  } else if (name == "fifth_order") {
    cfg.plant = fifth_order_plant();
    cfg.q = 2;
    cfg.optimizer_iterations = 10000;
  } else {
    return std::nullopt;
  }
  return cfg;
}

ExperimentConfig config_for_plant(const std::string& plant) {
  if (auto cfg = preset(plant)) return *cfg;
  if (!fs::exists(plant)) throw ConfigError("plant: '" + plant + "' is neither a preset nor an existing file");
  const io::PlantSpec spec = io::parse_plant_spec(io::read_json(plant));
  ExperimentConfig cfg;
  cfg.plant_name = plant;
  cfg.plant = spec.plant;
  cfg.N = spec.N;
  cfg.sample_hz = spec.sample_hz;
  cfg.q.reset();
  return cfg;
}

json config_to_json(const ExperimentConfig& cfg) {
  return {{"plant_name", cfg.plant_name},
          {"plant", io::plant_to_json(cfg.plant)},
          {"N", cfg.N},
          {"sample_hz", cfg.sample_hz},
          {"q", cfg.q ? json(*cfg.q) : json(nullptr)},
          {"law", std::string(to_string(cfg.law))},
          {"power", cfg.power},
          {"phi", cfg.phi},
          {"phi_min", cfg.phi_min},
          {"phi_max", cfg.phi_max},
          {"phi_step", cfg.phi_step},
          {"optimizer",
           {{"r", cfg.r},
            {"iterations", cfg.optimizer_iterations},
            {"block", cfg.region_block},
            {"reselect_region", cfg.reselect_region}}},
          {"contraction_gain", cfg.contraction_gain},
          {"quadratic_weight", cfg.quadratic_weight},
          {"trajectory", cfg.trajectory},
          {"ilc_iterations", cfg.ilc_iterations},
          {"out", cfg.out}};
}

ExperimentConfig config_from_json(const json& doc, const ExperimentConfig& base) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig cfg = base;
  try {
    if (doc.contains("plant")) {
      const json& p = doc.at("plant");
      if (p.is_string()) {
        cfg = config_for_plant(p.get<std::string>());
      } else {
        const io::PlantSpec spec = io::parse_plant_spec(p);
        cfg.plant = spec.plant;
        cfg.plant_name = "inline";
        if (p.contains("N")) cfg.N = spec.N;
        if (p.contains("sample_hz")) cfg.sample_hz = spec.sample_hz;
      }
    }
    take(doc, "plant_name", cfg.plant_name);
    take(doc, "N", cfg.N);
    take(doc, "sample_hz", cfg.sample_hz);
    if (doc.contains("q")) {
      cfg.q = doc.at("q").is_null() ? std::nullopt : std::optional<int>(doc.at("q").get<int>());
    }
    if (doc.contains("law")) {
      const auto kind = parse_law_kind(doc.at("law").get<std::string>());
      if (!kind) throw ConfigError("law: unknown kind '" + doc.at("law").get<std::string>() + "'");
      cfg.law = *kind;
    }
    take(doc, "power", cfg.power);
    take(doc, "phi", cfg.phi);
    take(doc, "phi_min", cfg.phi_min);
    take(doc, "phi_max", cfg.phi_max);
    take(doc, "phi_step", cfg.phi_step);
    if (doc.contains("optimizer")) {
      const json& o = doc.at("optimizer");
      take(o, "r", cfg.r);
      take(o, "iterations", cfg.optimizer_iterations);
      take(o, "block", cfg.region_block);
      take(o, "reselect_region", cfg.reselect_region);
    }
    take(doc, "contraction_gain", cfg.contraction_gain);
    take(doc, "quadratic_weight", cfg.quadratic_weight);
    take(doc, "trajectory", cfg.trajectory);
    take(doc, "ilc_iterations", cfg.ilc_iterations);
    take(doc, "out", cfg.out);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

Experiment prepare(const ExperimentConfig& cfg) {
  cfg.validate();
  Experiment ex;
  ex.config = cfg;
  ex.plant = discretize_zoh(realize(cfg.plant), 1.0 / cfg.sample_hz);
  ex.lifted = build_lifted(ex.plant, cfg.N);
  ex.pc_inv = circulant_inverse(ex.lifted);
  const int q = cfg.q ? *cfg.q : default_deletion_count(ex.plant);
  ex.deleted = delete_leading_steps(ex.lifted, ex.pc_inv, q);
  return ex;
}

LearningLaw build_law(const Experiment& ex, LawKind kind) {
  const ExperimentConfig& cfg = ex.config;
  switch (kind) {
    case LawKind::InverseCirculant: return law_inverse_circulant(ex.deleted);
    case LawKind::ScaledInverseCirculant: return law_scaled(ex.deleted, cfg.phi);
    case LawKind::Accelerated: return law_accelerated(ex.deleted, cfg.power);
    case LawKind::OptimizedInverseCirculant: {
      OptimizerConfig oc;
      oc.r = cfg.r;
      oc.iterations = cfg.optimizer_iterations;
      oc.region = GainRegion::corners(static_cast<int>(ex.deleted.Pc_inv_q.rows()),
                                      static_cast<int>(ex.deleted.Pc_inv_q.cols()), cfg.region_block);
      oc.reselect_region = cfg.reselect_region;
      OptimizationTrace trace = optimize(ex.deleted, oc);
      if (!trace.completed) throw DegenerateError(trace.diagnostic);
      return trace.law;
    }
    case LawKind::PartialIsometry:
      // Without deletion P carries a numerically zero singular value; the
      // singular vectors still define the law.
      return law_partial_isometry(ex.deleted.P_q, ex.deleted.q == 0 ? 0.0 : -1.0);
    case LawKind::ContractionMapping: return law_contraction_mapping(ex.deleted.P_q, cfg.contraction_gain);
    case LawKind::QuadraticCost: return law_quadratic_cost(ex.deleted.P_q, cfg.quadratic_weight);
  }
  throw ConfigError("law: unsupported kind");
}

void cmd_analyze(const ExperimentConfig& cfg, std::ostream& log) {
  const Experiment ex = prepare(cfg);
  const LearningLaw law = build_law(ex, effective_law(cfg));
  const ConvergenceReport rep = analyze(error_propagation(ex.deleted.P_q, law));
  const fs::path out(cfg.out);
  io::write_text(out / "table.csv", io::report_table_csv(rep));
  json result = io::report_to_json(rep);
  result["law"] = io::law_sidecar(law);
  io::write_text(out / "report.json", result.dump(2) + "\n");
  write_run_json(cfg, "analyze", result);
  log << summary("sigma_max", rep.sigma_max(), "spectral_radius", rep.spectral_radius) << '\n';
}

void cmd_optimize(const ExperimentConfig& cfg, std::ostream& log) {
  const Experiment ex = prepare(cfg);
  OptimizerConfig oc;
  oc.r = cfg.r;
  oc.iterations = cfg.optimizer_iterations;
  oc.region = GainRegion::corners(static_cast<int>(ex.deleted.Pc_inv_q.rows()),
                                  static_cast<int>(ex.deleted.Pc_inv_q.cols()), cfg.region_block);
  oc.reselect_region = cfg.reselect_region;
  const OptimizationTrace trace = optimize(ex.deleted, oc);
  const fs::path out(cfg.out);
  io::write_text(out / "trace.csv", io::trace_csv(trace));
  if (!trace.completed) throw DegenerateError(trace.diagnostic);
  io::export_law(out, trace.law);
  const TracePoint& last = trace.points.back();
  write_run_json(cfg, "optimize", {{"sigma_max", last.sigma_max}, {"spectral_radius", last.spectral_radius}});
  log << "final " << summary("sigma_max", last.sigma_max, "spectral_radius", last.spectral_radius) << '\n';
}

void cmd_simulate(const ExperimentConfig& cfg, std::ostream& log) {
  const Experiment ex = prepare(cfg);
  const LearningLaw law = build_law(ex, effective_law(cfg));
  const Trajectory traj = make_trajectory(*parse_trajectory_label(cfg.trajectory), ex.plant.T, cfg.N);
  const SimulationResult res = run_ilc(ex.lifted, law, traj, cfg.ilc_iterations);
  io::write_text(fs::path(cfg.out) / "rms.csv", io::comparison_csv({res}));
  write_run_json(cfg, "simulate",
                 {{"law", io::law_sidecar(law)}, {"q", res.q}, {"trajectory", cfg.trajectory},
                  {"J", cfg.ilc_iterations}, {"final_rms", res.rms.back()}});
  log << summary("initial_rms", res.rms.front(), "final_rms", res.rms.back()) << '\n';
}

void cmd_compare(const ExperimentConfig& cfg, std::ostream& log) {
  const Experiment ex = prepare(cfg);
  std::vector<LearningLaw> laws;
  for (LawKind k : {LawKind::OptimizedInverseCirculant, LawKind::PartialIsometry, LawKind::ContractionMapping,
                    LawKind::QuadraticCost}) {
    laws.push_back(build_law(ex, k));
  }
  const Trajectory traj = make_trajectory(*parse_trajectory_label(cfg.trajectory), ex.plant.T, cfg.N);
  const auto runs = compare_laws(ex.lifted, laws, traj, cfg.ilc_iterations);
  io::write_text(fs::path(cfg.out) / "compare.csv", io::comparison_csv(runs));
  json laws_json = json::array();
  for (std::size_t i = 0; i < laws.size(); ++i) {
    json entry = io::law_sidecar(laws[i]);
    entry["sigma_max"] = analyze(error_propagation(ex.deleted.P_q, laws[i])).sigma_max();
    entry["final_rms"] = runs[i].rms.back();
    laws_json.push_back(entry);
  }
  write_run_json(cfg, "compare",
                 {{"laws", laws_json}, {"q", ex.deleted.q}, {"trajectory", cfg.trajectory}, {"J", cfg.ilc_iterations}});
  for (const auto& r : runs) log << to_string(r.kind) << " final_rms=" << io::format_double(r.rms.back()) << '\n';
}

void cmd_sweep(const ExperimentConfig& cfg, std::ostream& log) {
  const Experiment ex = prepare(cfg);
  const GainSweep sweep = gain_sweep(ex.deleted, make_grid(cfg.phi_min, cfg.phi_max, cfg.phi_step));
  io::write_text(fs::path(cfg.out) / "sweep.csv", io::sweep_csv(sweep));
  const SweepPoint& best = sweep.points[sweep.argmin];
  write_run_json(cfg, "sweep", {{"argmin_phi", best.phi}, {"min_sigma_max", best.sigma_max}});
  log << "minimum " << summary("phi", best.phi, "sigma_max", best.sigma_max) << '\n';
}

void cmd_sensitivity(const ExperimentConfig& cfg, std::ostream& log) {
  const Experiment ex = prepare(cfg);
  const SensitivityMap map = sensitivity_map(ex.deleted);
  const fs::path out(cfg.out);
  io::write_matrix_csv(out / io::matrix_filename("sensitivity", cfg.N, ex.deleted.q), map.sensitivity);
  const json result = {
      {"flagged_columns", map.flagged_columns},
      {"column_score", std::vector<double>(map.column_score.begin(), map.column_score.end())}};
  io::write_text(out / "sensitivity.json", result.dump(2) + "\n");
  write_run_json(cfg, "sensitivity", result);
  log << "flagged columns:";
  for (int c : map.flagged_columns) log << ' ' << c;
  log << '\n';
}

int run_command(const std::string& name, const ExperimentConfig& cfg, std::ostream& log, std::ostream& err) {
  try {
    if (name == "analyze") cmd_analyze(cfg, log);
    else if (name == "optimize") cmd_optimize(cfg, log);
    else if (name == "simulate") cmd_simulate(cfg, log);
    else if (name == "compare") cmd_compare(cfg, log);
    else if (name == "sweep") cmd_sweep(cfg, log);
    else if (name == "sensitivity") cmd_sensitivity(cfg, log);
    else throw ConfigError("unknown command '" + name + "'");
    return 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const DegenerateError& e) {
    err << "numerical degeneracy: " << e.what() << '\n';
    return 3;
  } catch (const fs::filesystem_error& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace ilc
