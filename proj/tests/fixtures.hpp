#pragma once

#include <utility>
#include <vector>

#include "ilc/lifted_matrices.hpp"
#include "ilc/lti_model.hpp"

namespace ilc::testing {

inline constexpr double kT = 0.02;
inline constexpr int kN = 51;

inline std::vector<std::pair<const char*, ContinuousPlant>> benchmark_plants() {
  return {{"third_order", third_order_plant()}, {"fourth_order", fourth_order_plant()}, {"fifth_order", fifth_order_plant()}};
}

inline DiscretePlant sampled(const ContinuousPlant& plant, double T = kT) { return discretize_zoh(realize(plant), T); }

inline DiscretePlant scalar_plant(double a, double b, double c, double T = 1.0) {
  DiscretePlant dp;
  dp.A = Eigen::MatrixXd::Constant(1, 1, a);
  dp.B = Eigen::VectorXd::Constant(1, b);
  dp.C = Eigen::RowVectorXd::Constant(1, c);
  dp.T = T;
  return dp;
}

}  // namespace ilc::testing
