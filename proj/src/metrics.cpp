#include "pielm/metrics.hpp"

#include <cmath>

#include "pielm/error.hpp"

namespace pielm {

double rel_error(const Eigen::VectorXd& pred, const Eigen::VectorXd& exact) {
  PIELM_THROW_IF(pred.size() != exact.size(), ErrorKind::ContractViolation,
                 "rel_error: length mismatch");
  const double denom = exact.squaredNorm();
  PIELM_THROW_IF(!(denom > 0.0), ErrorKind::UndefinedMetric,
                 "rel_error: exact values are all zero");
  return std::sqrt((pred - exact).squaredNorm() / denom);
}

Eigen::VectorXd exact_values(const ProblemSpec& problem, const PointSet& points) {
  Eigen::VectorXd out(points.rows());
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    out[i] = problem.exact_u(row_of(points, i));
  }
  return out;
}

EvaluationReport evaluate(const TrainedModel& model, const ProblemSpec& problem,
                          const PointSet& test_points, double wall_time_seconds) {
  EvaluationReport report;
  report.points = test_points;
  report.u_pred = predict(model, test_points);
  report.u_exact = exact_values(problem, test_points);
  report.abs_error = (report.u_pred - report.u_exact).cwiseAbs();
  report.rel = rel_error(report.u_pred, report.u_exact);
  report.max_abs_error = report.abs_error.size() ? report.abs_error.maxCoeff() : 0.0;
  report.n_points = test_points.rows();
  report.wall_time_seconds = wall_time_seconds;
  return report;
}

}  // namespace pielm
