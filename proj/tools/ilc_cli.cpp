// Command-line driver for inverse-circulant ILC design experiments.
//
//   ilc <command> [--config file.json] [--plant preset|file] [flags...]
//
// Commands: analyze, optimize, simulate, compare, sweep, sensitivity.
// Exit codes: 0 success, 2 config error, 3 numerical degeneracy.

#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "ilc/errors.hpp"
#include "ilc/experiment.hpp"
#include "ilc/io.hpp"

namespace {

struct Overrides {
  std::optional<std::string> config_file;
  std::optional<std::string> plant;
  std::optional<int> N;
  std::optional<double> hz;
  std::optional<int> q;
  std::optional<std::string> law;
  std::optional<int> power;
  std::optional<double> phi;
  std::optional<double> phi_min;
  std::optional<double> phi_max;
  std::optional<double> phi_step;
  std::optional<double> r;
  std::optional<int> iterations;
  std::optional<int> block;
  bool reselect = false;
  std::optional<double> contraction_gain;
  std::optional<double> quadratic_weight;
  std::optional<std::string> traj;
  std::optional<int> ilc_iterations;
  std::optional<std::string> out;
  std::optional<long> seed;
};

void add_flags(CLI::App& cmd, Overrides& o) {
  cmd.add_option("--config", o.config_file, "JSON experiment config");
  cmd.add_option("--plant", o.plant, "preset (third_order, fourth_order, fifth_order) or plant spec JSON file");
  cmd.add_option("--n", o.N, "horizon length N");
  cmd.add_option("--hz", o.hz, "sample rate in Hz");
  cmd.add_option("--q", o.q, "number of leading steps deleted from the learning objective");
  cmd.add_option("--law", o.law, "learning law kind");
  cmd.add_option("--power", o.power, "power of the accelerated inverse-circulant law");
  cmd.add_option("--phi", o.phi, "overall gain for the scaled law");
  cmd.add_option("--phi-min", o.phi_min, "gain sweep lower end");
  cmd.add_option("--phi-max", o.phi_max, "gain sweep upper end");
  cmd.add_option("--phi-step", o.phi_step, "gain sweep step");
  cmd.add_option("--r", o.r, "optimizer step weight");
  cmd.add_option("--iterations", o.iterations, "optimizer iterations");
  cmd.add_option("--block", o.block, "corner block size of the optimized gain region");
  cmd.add_flag("--reselect-region", o.reselect, "re-pick the optimized entries every iteration");
  cmd.add_option("--contraction-gain", o.contraction_gain, "gain of the contraction mapping law");
  cmd.add_option("--quadratic-weight", o.quadratic_weight, "weight of the quadratic cost law");
  cmd.add_option("--traj", o.traj, "desired trajectory: yd1 or yd2");
  cmd.add_option("--ilc-iterations", o.ilc_iterations, "learning iterations J to simulate");
  cmd.add_option("--out", o.out, "output directory");
  cmd.add_option("--seed", o.seed, "reserved; every command is deterministic");
}

ilc::ExperimentConfig resolve(const Overrides& o) {
  ilc::ExperimentConfig cfg;
  if (o.config_file) cfg = ilc::config_from_json(ilc::io::read_json(*o.config_file), cfg);
  if (o.plant) {
    const ilc::ExperimentConfig p = ilc::config_for_plant(*o.plant);
    cfg.plant_name = p.plant_name;
    cfg.plant = p.plant;
    cfg.N = p.N;
    cfg.sample_hz = p.sample_hz;
    cfg.q = p.q;
    cfg.optimizer_iterations = p.optimizer_iterations;
  }
  if (o.N) cfg.N = *o.N;
  if (o.hz) cfg.sample_hz = *o.hz;
  if (o.q) cfg.q = *o.q;
  if (o.law) {
    const auto kind = ilc::parse_law_kind(*o.law);
    if (!kind) throw ilc::ConfigError("--law: unknown kind '" + *o.law + "'");
    cfg.law = *kind;
  }
  if (o.power) cfg.power = *o.power;
  if (o.phi) cfg.phi = *o.phi;
  if (o.phi_min) cfg.phi_min = *o.phi_min;
  if (o.phi_max) cfg.phi_max = *o.phi_max;
  if (o.phi_step) cfg.phi_step = *o.phi_step;
  if (o.r) cfg.r = *o.r;
  if (o.iterations) cfg.optimizer_iterations = *o.iterations;
  if (o.block) cfg.region_block = *o.block;
  if (o.reselect) cfg.reselect_region = true;
  if (o.contraction_gain) cfg.contraction_gain = *o.contraction_gain;
  if (o.quadratic_weight) cfg.quadratic_weight = *o.quadratic_weight;
  if (o.traj) cfg.trajectory = *o.traj;
  if (o.ilc_iterations) cfg.ilc_iterations = *o.ilc_iterations;
  if (o.out) cfg.out = *o.out;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse-circulant iterative learning control design"};
  app.require_subcommand(1);
  Overrides o;
  const std::pair<const char*, const char*> commands[] = {
      {"analyze", "spectrum of I - P L for the configured law"},
      {"optimize", "steepest-descent adjustment of the deleted inverse circulant"},
      {"simulate", "RMS error trace of the configured law"},
      {"compare", "RMS traces of the optimized law and the baseline laws"},
      {"sweep", "sigma_max and spectral radius over a scalar gain grid"},
      {"sensitivity", "d sigma_1 / d L over the whole gain matrix"},
  };
  for (auto [name, about] : commands) add_flags(*app.add_subcommand(name, about), o);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  ilc::ExperimentConfig cfg;
  try {
    cfg = resolve(o);
  } catch (const ilc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }
  return ilc::run_command(command, cfg, std::cout, std::cerr);
}
