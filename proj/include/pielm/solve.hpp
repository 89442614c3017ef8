#pragma once

#include <limits>

#include <Eigen/Dense>

#include "pielm/assembly.hpp"
#include "pielm/features.hpp"

namespace pielm {

struct SolveConfig {
  /// 0 selects the minimum-norm least-squares solution; > 0 solves
  /// (H^T H + lambda I) beta = H^T S.
  double ridge_lambda = 0.0;
  /// Singular values below rank_tolerance * sigma_max are discarded.
  double rank_tolerance = std::numeric_limits<double>::epsilon();
};

struct SolveDiagnostics {
  double residual_norm = 0.0;  // ||H beta - S||_2
  Eigen::Index rank = 0;
  double condition_estimate = 0.0;  // sigma_max / sigma_min of the factored matrix
};

struct TrainedModel {
  HiddenLayer layer;
  Eigen::VectorXd beta;
  SolveDiagnostics diagnostics;
};

/// Least-squares solve of H beta = S.
///
/// Without ridge the columns are equilibrated to unit norm, H is reduced by
/// Householder QR and the triangular factor is solved by a thresholded SVD,
/// so beta is the minimum-norm solution in the equilibrated variables. The
/// square-invertible and full-rank cases fall out as special cases. With ridge
/// the unscaled regularised problem min ||H b - S||^2 + lambda ||b||^2 is
/// solved by QR of [R; sqrt(lambda) I].
Eigen::VectorXd solve_least_squares(const Eigen::MatrixXd& H,
                                    const Eigen::VectorXd& S,
                                    const SolveConfig& config,
                                    SolveDiagnostics* diagnostics = nullptr);

TrainedModel solve_system(const HiddenLayer& layer, const AssembledSystem& system,
                          const SolveConfig& config = {});

/// feature_block(layer, points, op) * beta, evaluated in row chunks.
Eigen::VectorXd predict(const TrainedModel& model, const PointSet& points,
                        const Operator& op = ValueOp{});

}  // namespace pielm
