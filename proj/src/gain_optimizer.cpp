#include "ilc/gain_optimizer.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "ilc/convergence.hpp"
#include "ilc/errors.hpp"
#include "ilc/linalg.hpp"

namespace ilc {

namespace {

constexpr double kSimpleGapRatio = 1e-9;

void require_simple(const Eigen::VectorXd& sigma, int k) {
  if (k < 0 || k >= sigma.size()) throw ConfigError("singular index out of range");
  const double tol = kSimpleGapRatio * sigma(0);
  const bool below = k + 1 >= sigma.size() || sigma(k) - sigma(k + 1) > tol;
  const bool above = k == 0 || sigma(k - 1) - sigma(k) > tol;
  if (!below || !above || !(sigma(0) > 0.0)) {
    throw DegenerateError("singular value " + std::to_string(k + 1) +
                          " is repeated; its derivative is undefined");
  }
}

Eigen::MatrixXd sensitivity_from_svd(const Eigen::MatrixXd& P_q, const Svd& s, int k) {
  return -(P_q.transpose() * s.U.col(k)) * s.V.col(k).transpose();
}

// Region of the same size made of the entries with the largest |sensitivity|.
GainRegion strongest_entries(const Eigen::MatrixXd& sens, std::size_t count) {
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(sens.size()));
  std::iota(idx.begin(), idx.end(), 0);
  count = std::min(count, idx.size());
  std::partial_sort(idx.begin(), idx.begin() + static_cast<long>(count), idx.end(), [&](Eigen::Index a, Eigen::Index b) {
    return std::abs(sens.data()[a]) > std::abs(sens.data()[b]);
  });
  std::vector<GainRegion::Entry> entries;
  for (std::size_t i = 0; i < count; ++i) {
    entries.emplace_back(static_cast<int>(idx[i] % sens.rows()), static_cast<int>(idx[i] / sens.rows()));
  }
  std::sort(entries.begin(), entries.end());
  return {std::move(entries), static_cast<int>(sens.rows()), static_cast<int>(sens.cols())};
}

}  // namespace

GainRegion::GainRegion(std::vector<Entry> entries, int rows, int cols)
    : entries_(std::move(entries)), rows_(rows), cols_(cols) {
  std::set<Entry> seen;
  for (const auto& [i, j] : entries_) {
    if (i < 0 || i >= rows || j < 0 || j >= cols) {
      throw ConfigError("gain region entry (" + std::to_string(i) + ", " + std::to_string(j) + ") out of bounds");
    }
    if (!seen.insert({i, j}).second) {
      throw ConfigError("gain region entry (" + std::to_string(i) + ", " + std::to_string(j) + ") repeated");
    }
  }
}

GainRegion GainRegion::corners(int rows, int cols, int block) {
  const int br = std::min(block, rows);
  const int bc = std::min(block, cols);
  std::set<Entry> set;
  for (int i = 0; i < br; ++i) {
    for (int j = 0; j < bc; ++j) {
      set.insert({i, j});
      set.insert({i, cols - bc + j});
    }
  }
  return {std::vector<Entry>(set.begin(), set.end()), rows, cols};
}

void OptimizerConfig::validate() const {
  if (!(r > 0.0)) throw ConfigError("optimizer.r must be > 0");
  if (iterations < 1) throw ConfigError("optimizer.iterations must be >= 1");
}

Eigen::MatrixXd sensitivity_matrix(const Eigen::MatrixXd& P_q, const Eigen::MatrixXd& L, int k) {
  const Svd s = svd(error_propagation(P_q, L));
  require_simple(s.sigma, k);
  return sensitivity_from_svd(P_q, s, k);
}

Eigen::VectorXd descent_step(double sigma, const Eigen::VectorXd& S, double r) {
  if (!(r > 0.0)) throw ConfigError("descent step: r must be > 0");
  return -S * (sigma / (S.squaredNorm() + r));
}

OptimizationTrace optimize(const DeletedModel& dm, const OptimizerConfig& cfg) {
  cfg.validate();
  const int rows = static_cast<int>(dm.Pc_inv_q.rows());
  const int cols = static_cast<int>(dm.Pc_inv_q.cols());
  GainRegion region = cfg.region.size() > 0 ? cfg.region : GainRegion::corners(rows, cols);
  if (region.rows() != rows || region.cols() != cols) {
    throw ConfigError("gain region shape does not match the gain matrix");
  }

  OptimizationTrace trace;
  trace.gains = dm.Pc_inv_q;
  trace.points.reserve(static_cast<std::size_t>(cfg.iterations) + 1);
  Eigen::VectorXd S(static_cast<Eigen::Index>(region.size()));

  for (int it = 0;; ++it) {
    const Eigen::MatrixXd E = error_propagation(dm.P_q, trace.gains);
    const Svd s = svd(E, SvdMethod::DivideConquer);
    trace.points.push_back({s.sigma(0), eigenvalue_magnitudes(E)(0)});
    if (it == cfg.iterations) break;

    try {
      require_simple(s.sigma, 0);
    } catch (const DegenerateError& e) {
      trace.completed = false;
      trace.diagnostic = "stopped at iteration " + std::to_string(it) + ": " + e.what();
      break;
    }
    const Eigen::MatrixXd sens = sensitivity_from_svd(dm.P_q, s, 0);
    if (cfg.reselect_region) {
      region = strongest_entries(sens, region.size());
      S.resize(static_cast<Eigen::Index>(region.size()));
    }
    const auto& entries = region.entries();
    for (std::size_t n = 0; n < entries.size(); ++n) S(static_cast<Eigen::Index>(n)) = sens(entries[n].first, entries[n].second);
    const Eigen::VectorXd delta = descent_step(s.sigma(0), S, cfg.r);
    for (std::size_t n = 0; n < entries.size(); ++n) trace.gains(entries[n].first, entries[n].second) += delta(static_cast<Eigen::Index>(n));
  }

  trace.law = {trace.gains, LawKind::OptimizedInverseCirculant, dm.q,
               {{"r", cfg.r}, {"iterations", static_cast<double>(cfg.iterations)}}};
  return trace;
}

SensitivityMap sensitivity_map(const DeletedModel& dm, double flag_factor) {
  SensitivityMap out;
  out.sensitivity = sensitivity_matrix(dm.P_q, dm.Pc_inv_q, 0);
  out.column_score = out.sensitivity.cwiseAbs().colwise().maxCoeff().transpose();
  std::vector<double> scores(out.column_score.data(), out.column_score.data() + out.column_score.size());
  const auto mid = scores.begin() + static_cast<long>(scores.size() / 2);
  std::nth_element(scores.begin(), mid, scores.end());
  double median = *mid;
  if (scores.size() % 2 == 0) median = 0.5 * (median + *std::max_element(scores.begin(), mid));
  for (Eigen::Index j = 0; j < out.column_score.size(); ++j) {
    if (out.column_score(j) > flag_factor * median) out.flagged_columns.push_back(static_cast<int>(j));
  }
  return out;
}

}  // namespace ilc
