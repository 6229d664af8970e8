#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "ilc/lifted_matrices.hpp"

namespace ilc {

enum class LawKind {
  InverseCirculant,
  OptimizedInverseCirculant,
  Accelerated,
  ScaledInverseCirculant,
  PartialIsometry,
  ContractionMapping,
  QuadraticCost,
};

std::string_view to_string(LawKind kind);
std::optional<LawKind> parse_law_kind(std::string_view name);

/// Learning gain matrix for u_{j+1} = u_j + L e_j, where e_j covers the
/// non-deleted steps q+1..N. L is N x (N-q).
struct LearningLaw {
  Eigen::MatrixXd L;
  LawKind kind = LawKind::InverseCirculant;
  int q = 0;
  std::map<std::string, double> params;
};

LearningLaw law_inverse_circulant(const DeletedModel& dm);

/// Overall gain phi in front of the deleted inverse circulant.
LearningLaw law_scaled(const DeletedModel& dm, double phi);

/// Gain whose error propagation is the p-th power of the inverse circulant
/// one: I - P_q L = (I - P_q Pc_inv_q)^p. Built as Pc_inv_q * sum_{k<p} E^k,
/// which never forms P^-1.
LearningLaw law_accelerated(const DeletedModel& dm, int power);

/// V U^T from the thin SVD of P_q. Throws DegenerateError when the smallest
/// singular value of P_q is at or below rank_tol; a negative rank_tol selects
/// the usual numerical-rank threshold eps * max(rows, cols) * sigma_max.
LearningLaw law_partial_isometry(const Eigen::MatrixXd& P_q, double rank_tol = -1.0);

LearningLaw law_contraction_mapping(const Eigen::MatrixXd& P_q, double gain = 1.0);

/// (P_q^T P_q + w I)^-1 P_q^T, w > 0.
LearningLaw law_quadratic_cost(const Eigen::MatrixXd& P_q, double weight = 1.0);

/// I - P_q L. Throws ConfigError on incompatible shapes.
Eigen::MatrixXd error_propagation(const Eigen::MatrixXd& P_q, const LearningLaw& law);
Eigen::MatrixXd error_propagation(const Eigen::MatrixXd& P_q, const Eigen::MatrixXd& L);

}  // namespace ilc
