#pragma once

#include <Eigen/Dense>

#include "pielm/geometry.hpp"
#include "pielm/problems.hpp"
#include "pielm/solve.hpp"

namespace pielm {

/// sqrt(sum |pred - exact|^2 / sum |exact|^2).
double rel_error(const Eigen::VectorXd& pred, const Eigen::VectorXd& exact);

struct EvaluationReport {
  double rel = 0.0;
  double max_abs_error = 0.0;
  PointSet points;
  Eigen::VectorXd u_exact;
  Eigen::VectorXd u_pred;
  Eigen::VectorXd abs_error;
  Eigen::Index n_points = 0;
  double wall_time_seconds = 0.0;  // supplied by the caller
};

/// Exact solution values at each row of `points`.
Eigen::VectorXd exact_values(const ProblemSpec& problem, const PointSet& points);

EvaluationReport evaluate(const TrainedModel& model, const ProblemSpec& problem,
                          const PointSet& test_points, double wall_time_seconds = 0.0);

}  // namespace pielm
