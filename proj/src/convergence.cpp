#include "ilc/convergence.hpp"

#include <cmath>

#include "ilc/errors.hpp"
#include "ilc/learning_laws.hpp"
#include "ilc/linalg.hpp"

namespace ilc {

ConvergenceReport analyze(const Eigen::MatrixXd& E) {
  if (E.rows() != E.cols()) throw ConfigError("analyze: matrix must be square");
  ConvergenceReport rep;
  rep.singular_values = singular_values(E);
  rep.eigenvalue_magnitudes = eigenvalue_magnitudes(E);
  rep.spectral_radius = rep.eigenvalue_magnitudes.size() > 0 ? rep.eigenvalue_magnitudes(0) : 0.0;
  rep.converges = rep.spectral_radius < 1.0;
  rep.monotonic = rep.sigma_max() < 1.0;
  return rep;
}

std::vector<double> make_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) throw ConfigError("grid: need step > 0 and max >= min");
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 0.5));
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count + 1));
  for (long i = 0; i <= count; ++i) grid.push_back(lo + static_cast<double>(i) * step);
  return grid;
}

GainSweep gain_sweep(const DeletedModel& dm, const std::vector<double>& phi_grid) {
  if (phi_grid.empty()) throw ConfigError("gain sweep: grid must be nonempty");
  const Eigen::MatrixXd PL = dm.P_q * dm.Pc_inv_q;
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(PL.rows(), PL.cols());
  GainSweep out;
  out.points.resize(phi_grid.size());
  for (std::size_t i = 0; i < phi_grid.size(); ++i) {
    const ConvergenceReport rep = analyze(I - phi_grid[i] * PL);
    out.points[i] = {phi_grid[i], rep.sigma_max(), rep.spectral_radius};
  }
  for (std::size_t i = 1; i < out.points.size(); ++i)
    if (out.points[i].sigma_max < out.points[out.argmin].sigma_max) out.argmin = i;
  return out;
}

}  // namespace ilc
