#include "pielm/solve.hpp"

#include <cmath>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "pielm/error.hpp"

namespace pielm {

namespace {

constexpr Eigen::Index kPredictChunk = 4096;

// min ||A x - b|| has the same minimisers as min ||R x - c|| with R square
// upper triangular when A is tall.
struct Reduced {
  Eigen::MatrixXd R;
  Eigen::VectorXd c;
};

Reduced reduce(Eigen::MatrixXd A, const Eigen::VectorXd& b) {
  const Eigen::Index n = A.cols();
  if (A.rows() <= n) return {std::move(A), b};
  Eigen::HouseholderQR<Eigen::Ref<Eigen::MatrixXd>> qr(A);
  Eigen::VectorXd qtb = b;
  qtb.applyOnTheLeft(qr.householderQ().adjoint());
  Eigen::MatrixXd R = A.topRows(n).triangularView<Eigen::Upper>();
  return {std::move(R), qtb.head(n)};
}

double condition_of(const Eigen::VectorXd& sigma) {
  if (sigma.size() == 0) return 0.0;
  const double smin = sigma[sigma.size() - 1];
  return smin > 0.0 ? sigma[0] / smin : std::numeric_limits<double>::infinity();
}

Eigen::Index rank_of(const Eigen::VectorXd& sigma, double tol) {
  if (sigma.size() == 0 || sigma[0] == 0.0) return 0;
  return (sigma.array() > tol * sigma[0]).count();
}

}  // namespace

Eigen::VectorXd solve_least_squares(const Eigen::MatrixXd& H,
                                    const Eigen::VectorXd& S,
                                    const SolveConfig& config,
                                    SolveDiagnostics* diagnostics) {
  PIELM_THROW_IF(!(config.ridge_lambda >= 0.0) || !std::isfinite(config.ridge_lambda),
                 ErrorKind::InvalidHyperparameter,
                 "solve: ridge_lambda must be finite and non-negative");
  PIELM_THROW_IF(!(config.rank_tolerance > 0.0 && config.rank_tolerance < 1.0),
                 ErrorKind::InvalidHyperparameter,
                 "solve: rank_tolerance must lie in (0, 1)");
  PIELM_THROW_IF(H.rows() == 0 || H.cols() == 0, ErrorKind::DegenerateSystem,
                 "solve: empty system");
  PIELM_THROW_IF(H.rows() != S.size(), ErrorKind::ContractViolation,
                 "solve: H and S disagree on the number of rows");
  PIELM_THROW_IF(!H.allFinite() || !S.allFinite(), ErrorKind::Data,
                 "solve: non-finite entries in H or S");
  PIELM_THROW_IF((H.array() == 0.0).all(), ErrorKind::DegenerateSystem,
                 "solve: every entry of H is zero");

  const Eigen::Index n = H.cols();
  Eigen::VectorXd beta;
  SolveDiagnostics diag;

  if (config.ridge_lambda == 0.0) {
    Eigen::VectorXd scale = H.colwise().norm().transpose();
    for (Eigen::Index j = 0; j < n; ++j) scale[j] = scale[j] > 0.0 ? 1.0 / scale[j] : 1.0;
    Reduced red = reduce(H * scale.asDiagonal(), S);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(red.R, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(config.rank_tolerance);
    beta = scale.asDiagonal() * svd.solve(red.c);
    diag.rank = rank_of(svd.singularValues(), config.rank_tolerance);
    diag.condition_estimate = condition_of(svd.singularValues());
  } else {
    Reduced red = reduce(H, S);
    const Eigen::BDCSVD<Eigen::MatrixXd> values(red.R);
    diag.rank = rank_of(values.singularValues(), config.rank_tolerance);
    diag.condition_estimate = condition_of(values.singularValues());

    const Eigen::Index k = red.R.rows();
    Eigen::MatrixXd augmented = Eigen::MatrixXd::Zero(k + n, n);
    augmented.topRows(k) = red.R;
    augmented.bottomRows(n).diagonal().setConstant(std::sqrt(config.ridge_lambda));
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + n);
    rhs.head(k) = red.c;
    beta = Eigen::HouseholderQR<Eigen::MatrixXd>(augmented).solve(rhs);
  }

  diag.residual_norm = (H * beta - S).norm();
  if (diagnostics) *diagnostics = diag;
  return beta;
}

TrainedModel solve_system(const HiddenLayer& layer, const AssembledSystem& system,
                          const SolveConfig& config) {
  PIELM_THROW_IF(system.H.cols() != layer.units(), ErrorKind::ContractViolation,
                 "solve_system: system columns do not match the hidden layer");
  TrainedModel model{layer, {}, {}};
  model.beta = solve_least_squares(system.H, system.S, config, &model.diagnostics);
  return model;
}

Eigen::VectorXd predict(const TrainedModel& model, const PointSet& points,
                        const Operator& op) {
  PIELM_THROW_IF(points.cols() != model.layer.dim(), ErrorKind::ContractViolation,
                 "predict: point dimension does not match the model");
  if (const auto* nd = std::get_if<NormalDerivOp>(&op)) {
    PIELM_THROW_IF(nd->normals.rows() != points.rows(),
                   ErrorKind::ContractViolation,
                   "predict: normal derivative needs one normal per point");
  }
  Eigen::VectorXd out(points.rows());
  Eigen::MatrixXd block;
  for (Eigen::Index start = 0; start < points.rows(); start += kPredictChunk) {
    const Eigen::Index rows = std::min(kPredictChunk, points.rows() - start);
    const PointSet chunk = points.middleRows(start, rows);
    const auto* nd = std::get_if<NormalDerivOp>(&op);
    const Operator chunk_op =
        nd ? Operator{NormalDerivOp{nd->normals.middleRows(start, rows)}} : op;
    block.resize(rows, model.layer.units());
    fill_feature_block(model.layer, chunk, chunk_op, block);
    out.segment(start, rows).noalias() = block * model.beta;
  }
  return out;
}

}  // namespace pielm
