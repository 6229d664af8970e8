#include "ilc/learning_laws.hpp"

#include <array>
#include <limits>
#include <string>
#include <utility>

#include "ilc/errors.hpp"
#include "ilc/linalg.hpp"

namespace ilc {

namespace {

constexpr std::array<std::pair<LawKind, std::string_view>, 7> kLawNames{{
    {LawKind::InverseCirculant, "inverse_circulant"},
    {LawKind::OptimizedInverseCirculant, "optimized_inverse_circulant"},
    {LawKind::Accelerated, "accelerated"},
    {LawKind::ScaledInverseCirculant, "scaled_inverse_circulant"},
    {LawKind::PartialIsometry, "partial_isometry"},
    {LawKind::ContractionMapping, "contraction_mapping"},
    {LawKind::QuadraticCost, "quadratic_cost"},
}};

int deletion_of(const Eigen::MatrixXd& P_q) { return static_cast<int>(P_q.cols() - P_q.rows()); }

}  // namespace

std::string_view to_string(LawKind kind) {
  for (const auto& [k, name] : kLawNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<LawKind> parse_law_kind(std::string_view name) {
  for (const auto& [k, n] : kLawNames)
    if (n == name) return k;
  return std::nullopt;
}

LearningLaw law_inverse_circulant(const DeletedModel& dm) {
  return {dm.Pc_inv_q, LawKind::InverseCirculant, dm.q, {}};
}

LearningLaw law_scaled(const DeletedModel& dm, double phi) {
  return {phi * dm.Pc_inv_q, LawKind::ScaledInverseCirculant, dm.q, {{"phi", phi}}};
}

LearningLaw law_accelerated(const DeletedModel& dm, int power) {
  if (power < 1) throw ConfigError("accelerated law: power must be >= 1");
  const Eigen::MatrixXd E = error_propagation(dm.P_q, dm.Pc_inv_q);
  Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(E.rows(), E.cols());
  Eigen::MatrixXd term = sum;
  for (int k = 1; k < power; ++k) {
    term = term * E;
    sum += term;
  }
  return {dm.Pc_inv_q * sum, LawKind::Accelerated, dm.q, {{"power", static_cast<double>(power)}}};
}

LearningLaw law_partial_isometry(const Eigen::MatrixXd& P_q, double rank_tol) {
  const Svd s = svd(P_q);
  const double smax = s.sigma.size() > 0 ? s.sigma(0) : 0.0;
  if (rank_tol < 0.0) {
    rank_tol = std::numeric_limits<double>::epsilon() * static_cast<double>(std::max(P_q.rows(), P_q.cols())) * smax;
  }
  const double smin = s.sigma.size() > 0 ? s.sigma(s.sigma.size() - 1) : 0.0;
  if (!(smin > rank_tol)) {
    throw DegenerateError("partial isometry law: P_q is rank deficient (smallest singular value " +
                          std::to_string(smin) + ")");
  }
  return {s.V * s.U.transpose(), LawKind::PartialIsometry, deletion_of(P_q), {}};
}

LearningLaw law_contraction_mapping(const Eigen::MatrixXd& P_q, double gain) {
  return {gain * P_q.transpose(), LawKind::ContractionMapping, deletion_of(P_q), {{"gain", gain}}};
}

LearningLaw law_quadratic_cost(const Eigen::MatrixXd& P_q, double weight) {
  if (!(weight > 0.0)) throw ConfigError("quadratic cost law: weight must be > 0");
  const Eigen::Index n = P_q.cols();
  const Eigen::MatrixXd G = P_q.transpose() * P_q + weight * Eigen::MatrixXd::Identity(n, n);
  return {G.llt().solve(P_q.transpose()), LawKind::QuadraticCost, deletion_of(P_q), {{"weight", weight}}};
}

Eigen::MatrixXd error_propagation(const Eigen::MatrixXd& P_q, const Eigen::MatrixXd& L) {
  if (L.rows() != P_q.cols() || L.cols() != P_q.rows()) {
    throw ConfigError("shape mismatch: P_q is " + std::to_string(P_q.rows()) + "x" + std::to_string(P_q.cols()) +
                      ", L is " + std::to_string(L.rows()) + "x" + std::to_string(L.cols()));
  }
  return Eigen::MatrixXd::Identity(P_q.rows(), P_q.rows()) - P_q * L;
}

Eigen::MatrixXd error_propagation(const Eigen::MatrixXd& P_q, const LearningLaw& law) {
  return error_propagation(P_q, law.L);
}

}  // namespace ilc
