#include "pielm/features.hpp"

#include <cmath>

#include "pielm/error.hpp"

namespace pielm {

namespace {

// Applies the order-th activation derivative in place, scaling column i by
// column_scale[i] (or by the per-entry factor for normal derivatives).
template <typename Scale>
void activate(ActivationKind kind, int order, Eigen::Ref<Eigen::MatrixXd> v,
              Scale&& scale) {
  const Eigen::Index rows = v.rows();
  const Eigen::Index cols = v.cols();
  for (Eigen::Index i = 0; i < cols; ++i) {
    double* col = v.col(i).data();
    if (kind == ActivationKind::Sine) {
      // Hot path for the main method: avoid the dispatch per entry.
      switch (order) {
        case 0:
          for (Eigen::Index q = 0; q < rows; ++q) col[q] = std::sin(col[q]) * scale(q, i);
          break;
        case 1:
          for (Eigen::Index q = 0; q < rows; ++q) col[q] = std::cos(col[q]) * scale(q, i);
          break;
        case 2:
          for (Eigen::Index q = 0; q < rows; ++q) col[q] = -std::sin(col[q]) * scale(q, i);
          break;
        default:
          for (Eigen::Index q = 0; q < rows; ++q) col[q] = std::sin(col[q]) * scale(q, i);
      }
    } else {
      for (Eigen::Index q = 0; q < rows; ++q) {
        col[q] = activation(kind, order, col[q]) * scale(q, i);
      }
    }
  }
}

}  // namespace

HiddenLayer init_hidden(Eigen::Index n, int d, ActivationKind kind, double delta,
                        Rng& rng) {
  PIELM_THROW_IF(!(delta > 0.0) || !std::isfinite(delta),
                 ErrorKind::InvalidHyperparameter,
                 "init_hidden: delta must be positive and finite");
  PIELM_THROW_IF(n < 1, ErrorKind::InvalidHyperparameter,
                 "init_hidden: need at least one hidden unit");
  PIELM_THROW_IF(d != 2 && d != 3, ErrorKind::InvalidHyperparameter,
                 "init_hidden: dimension must be 2 or 3");
  std::uniform_real_distribution<double> u(-delta, delta);
  HiddenLayer layer{Eigen::MatrixXd(n, d), Eigen::VectorXd(n), kind, delta};
  for (Eigen::Index i = 0; i < n; ++i) {
    for (int k = 0; k < d; ++k) layer.weights(i, k) = u(rng);
  }
  for (Eigen::Index i = 0; i < n; ++i) layer.biases[i] = u(rng);
  return layer;
}

Eigen::MatrixXd preactivations(const HiddenLayer& layer, const PointSet& points) {
  PIELM_THROW_IF(points.cols() != layer.dim(), ErrorKind::ContractViolation,
                 "preactivations: point dimension does not match the layer");
  Eigen::MatrixXd v = points * layer.weights.transpose();
  v.rowwise() += layer.biases.transpose();
  return v;
}

Eigen::VectorXd biharmonic_weights(const HiddenLayer& layer) {
  return layer.weights.rowwise().squaredNorm().array().square().matrix();
}

void fill_feature_block(const HiddenLayer& layer, const PointSet& points,
                        const Operator& op, Eigen::Ref<Eigen::MatrixXd> out) {
  PIELM_THROW_IF(points.cols() != layer.dim(), ErrorKind::ContractViolation,
                 "feature_block: point dimension does not match the layer");
  PIELM_THROW_IF(out.rows() != points.rows() || out.cols() != layer.units(),
                 ErrorKind::ContractViolation,
                 "feature_block: output block has the wrong shape");
  out.noalias() = points * layer.weights.transpose();
  out.rowwise() += layer.biases.transpose();

  const ActivationKind kind = layer.kind;
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, ValueOp>) {
          activate(kind, 0, out, [](Eigen::Index, Eigen::Index) { return 1.0; });
        } else if constexpr (std::is_same_v<T, PartialOp>) {
          PIELM_THROW_IF(o.axis < 0 || o.axis >= layer.dim(),
                         ErrorKind::ContractViolation,
                         "feature_block: partial derivative axis out of range");
          const auto w = layer.weights.col(o.axis);
          activate(kind, 1, out, [&](Eigen::Index, Eigen::Index i) { return w[i]; });
        } else if constexpr (std::is_same_v<T, NormalDerivOp>) {
          PIELM_THROW_IF(o.normals.rows() != points.rows() ||
                             o.normals.cols() != points.cols(),
                         ErrorKind::ContractViolation,
                         "feature_block: normal derivative needs one normal per point");
          // (q, i) -> W[i] . n(q)
          const Eigen::MatrixXd directional = o.normals * layer.weights.transpose();
          activate(kind, 1, out,
                   [&](Eigen::Index q, Eigen::Index i) { return directional(q, i); });
        } else if constexpr (std::is_same_v<T, LaplacianOp>) {
          const Eigen::VectorXd w2 = layer.weights.rowwise().squaredNorm();
          activate(kind, 2, out, [&](Eigen::Index, Eigen::Index i) { return w2[i]; });
        } else {
          const Eigen::VectorXd w4 = biharmonic_weights(layer);
          activate(kind, 4, out, [&](Eigen::Index, Eigen::Index i) { return w4[i]; });
        }
      },
      op);
}

Eigen::MatrixXd feature_block(const HiddenLayer& layer, const PointSet& points,
                              const Operator& op) {
  Eigen::MatrixXd out(points.rows(), layer.units());
  fill_feature_block(layer, points, op, out);
  return out;
}

}  // namespace pielm
