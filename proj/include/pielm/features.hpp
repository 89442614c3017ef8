#pragma once

#include <variant>

#include <Eigen/Dense>

#include "pielm/activation.hpp"
#include "pielm/geometry.hpp"

namespace pielm {

/// Fixed random hidden layer: unit i computes kind(weights.row(i) . x + biases[i]).
struct HiddenLayer {
  Eigen::MatrixXd weights;  // N x d
  Eigen::VectorXd biases;   // N
  ActivationKind kind = ActivationKind::Sine;
  double delta = 1.0;

  Eigen::Index units() const { return weights.rows(); }
  int dim() const { return static_cast<int>(weights.cols()); }
};

/// Draws every weight and bias i.i.d. uniform on [-delta, delta]; weights
/// first (row by row), then biases.
HiddenLayer init_hidden(Eigen::Index n, int d, ActivationKind kind, double delta,
                        Rng& rng);

/// M x N matrix of points[q] . W[i] + b[i].
Eigen::MatrixXd preactivations(const HiddenLayer& layer, const PointSet& points);

// Operator selectors. Each feature column is the operator applied to one
// basis function sigma(V_i(x)).
struct ValueOp {};
struct PartialOp {
  int axis = 0;
};
/// One outward unit normal per point row.
struct NormalDerivOp {
  PointSet normals;
};
struct LaplacianOp {};
struct BiharmonicOp {};

using Operator =
    std::variant<ValueOp, PartialOp, NormalDerivOp, LaplacianOp, BiharmonicOp>;

/// Writes the M x N operator block for `points` into `out`.
void fill_feature_block(const HiddenLayer& layer, const PointSet& points,
                        const Operator& op, Eigen::Ref<Eigen::MatrixXd> out);

Eigen::MatrixXd feature_block(const HiddenLayer& layer, const PointSet& points,
                              const Operator& op);

/// Per-unit column weights for the biharmonic block, (sum_k w_ki^2)^2.
Eigen::VectorXd biharmonic_weights(const HiddenLayer& layer);

}  // namespace pielm
