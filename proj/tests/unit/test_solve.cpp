#include <gtest/gtest.h>

#include <cmath>

#include "pielm/error.hpp"
#include "pielm/solve.hpp"

using namespace pielm;

namespace {

Eigen::MatrixXd random_matrix(Eigen::Index m, Eigen::Index n, std::uint64_t seed) {
  Rng rng = make_stream(seed, 7);
  std::normal_distribution<double> g;
  Eigen::MatrixXd A(m, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) A(i, j) = g(rng);
  }
  return A;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no pielm::Error thrown";
  return ErrorKind::Io;
}

}  // namespace

TEST(Solve, RidgeHandCase) {
  // (1 + 1 + lambda) beta = 2 with lambda = 1.
  const Eigen::MatrixXd H = Eigen::MatrixXd::Ones(2, 1);
  const Eigen::VectorXd S = Eigen::VectorXd::Ones(2);
  const Eigen::VectorXd beta = solve_least_squares(H, S, SolveConfig{1.0});
  ASSERT_EQ(beta.size(), 1);
  EXPECT_NEAR(beta[0], 2.0 / 3.0, 1e-15);
}

TEST(Solve, SquareInvertible) {
  Eigen::MatrixXd H(2, 2);
  H << 2, 1, 1, 3;
  const Eigen::VectorXd S = Eigen::Vector2d(3, 5);
  const Eigen::VectorXd beta = solve_least_squares(H, S, {});
  EXPECT_NEAR(beta[0], 0.8, 1e-14);
  EXPECT_NEAR(beta[1], 1.4, 1e-14);
}

TEST(Solve, MatchesNormalEquations) {
  for (std::uint64_t seed : {1, 2, 3}) {
    const Eigen::MatrixXd H = random_matrix(200, 30, seed);
    const Eigen::VectorXd S = random_matrix(200, 1, seed + 100).col(0);
    SolveDiagnostics diag;
    const Eigen::VectorXd beta = solve_least_squares(H, S, {}, &diag);
    const Eigen::VectorXd ne = (H.transpose() * H).ldlt().solve(H.transpose() * S);
    EXPECT_LE((beta - ne).norm() / ne.norm(), 1e-8);
    EXPECT_EQ(diag.rank, 30);
    EXPECT_NEAR(diag.residual_norm, (H * ne - S).norm(), 1e-10);
    EXPECT_GT(diag.condition_estimate, 1.0);
    EXPECT_LT(diag.condition_estimate, 10.0);
  }
}

TEST(Solve, RidgeMatchesRegularisedNormalEquations) {
  const Eigen::MatrixXd H = random_matrix(80, 12, 4);
  const Eigen::VectorXd S = random_matrix(80, 1, 5).col(0);
  for (double lambda : {1e-3, 0.5, 10.0}) {
    const Eigen::VectorXd beta = solve_least_squares(H, S, SolveConfig{lambda});
    const Eigen::MatrixXd A =
        H.transpose() * H + lambda * Eigen::MatrixXd::Identity(12, 12);
    const Eigen::VectorXd want = A.ldlt().solve(H.transpose() * S);
    EXPECT_LE((beta - want).norm() / want.norm(), 1e-12) << lambda;
  }
}

TEST(Solve, RidgeContinuousAsLambdaVanishes) {
  const Eigen::MatrixXd H = random_matrix(60, 10, 6);
  const Eigen::VectorXd S = random_matrix(60, 1, 7).col(0);
  const Eigen::VectorXd beta0 = solve_least_squares(H, S, {});
  double previous = std::numeric_limits<double>::infinity();
  for (double lambda : {1e-1, 1e-3, 1e-5, 1e-7, 1e-9}) {
    const double gap = (solve_least_squares(H, S, SolveConfig{lambda}) - beta0).norm();
    EXPECT_LT(gap, previous);
    previous = gap;
  }
  EXPECT_LE(previous / beta0.norm(), 1e-8);
}

TEST(Solve, MinimumNormOnDuplicateColumns) {
  Eigen::MatrixXd H(3, 2);
  H << 1, 1, 2, 2, 3, 3;
  const Eigen::VectorXd S = Eigen::Vector3d(2, 4, 6);
  SolveDiagnostics diag;
  const Eigen::VectorXd beta = solve_least_squares(H, S, {}, &diag);
  EXPECT_NEAR(beta[0], 1.0, 1e-14);
  EXPECT_NEAR(beta[1], 1.0, 1e-14);
  EXPECT_EQ(diag.rank, 1);
  EXPECT_NEAR(diag.residual_norm, 0.0, 1e-13);
}

TEST(Solve, Underdetermined) {
  Eigen::MatrixXd H(1, 2);
  H << 1, 1;
  const Eigen::VectorXd beta = solve_least_squares(H, Eigen::VectorXd::Constant(1, 2.0), {});
  EXPECT_NEAR(beta[0], 1.0, 1e-15);
  EXPECT_NEAR(beta[1], 1.0, 1e-15);
}

TEST(Solve, RejectsBadInput) {
  const Eigen::MatrixXd H = Eigen::MatrixXd::Ones(3, 2);
  const Eigen::VectorXd S = Eigen::VectorXd::Ones(3);
  EXPECT_EQ(kind_of([&] { solve_least_squares(H, S, SolveConfig{-1.0}); }),
            ErrorKind::InvalidHyperparameter);
  EXPECT_EQ(kind_of([&] { solve_least_squares(H, S, SolveConfig{0.0, 0.0}); }),
            ErrorKind::InvalidHyperparameter);
  EXPECT_EQ(kind_of([&] { solve_least_squares(Eigen::MatrixXd(0, 2), Eigen::VectorXd(0), {}); }),
            ErrorKind::DegenerateSystem);
  EXPECT_EQ(kind_of([&] { solve_least_squares(Eigen::MatrixXd::Zero(3, 2), S, {}); }),
            ErrorKind::DegenerateSystem);
  Eigen::MatrixXd nan = H;
  nan(1, 1) = std::nan("");
  EXPECT_EQ(kind_of([&] { solve_least_squares(nan, S, {}); }), ErrorKind::Data);
  EXPECT_EQ(kind_of([&] { solve_least_squares(H, Eigen::VectorXd::Ones(2), {}); }),
            ErrorKind::ContractViolation);
}

TEST(Solve, PredictChunksAgreeWithFullBlock) {
  Rng rng = make_stream(9, 3);
  TrainedModel model{init_hidden(15, 2, ActivationKind::Gaussian, 1.0, rng), {}, {}};
  model.beta = Eigen::VectorXd::LinSpaced(15, -2.0, 2.0);
  PointSet x(9000, 2);
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    x(i, 0) = std::sin(0.001 * static_cast<double>(i));
    x(i, 1) = std::cos(0.0037 * static_cast<double>(i));
  }
  PointSet n(9000, 2);
  n.col(0) = x.col(1);
  n.col(1) = -x.col(0);
  const Eigen::VectorXd a = predict(model, x);
  EXPECT_LE((a - feature_block(model.layer, x, ValueOp{}) * model.beta).cwiseAbs().maxCoeff(),
            1e-13);
  const Eigen::VectorXd b = predict(model, x, NormalDerivOp{n});
  EXPECT_LE(
      (b - feature_block(model.layer, x, NormalDerivOp{n}) * model.beta).cwiseAbs().maxCoeff(),
      1e-13);
  EXPECT_EQ(kind_of([&] { predict(model, x, NormalDerivOp{n.topRows(10)}); }),
            ErrorKind::ContractViolation);
}

TEST(Solve, SolveSystemChecksColumns) {
  Rng rng = make_stream(9, 3);
  const HiddenLayer layer = init_hidden(4, 2, ActivationKind::Sine, 1.0, rng);
  AssembledSystem sys;
  sys.H = Eigen::MatrixXd::Ones(5, 3);
  sys.S = Eigen::VectorXd::Ones(5);
  EXPECT_EQ(kind_of([&] { solve_system(layer, sys); }), ErrorKind::ContractViolation);
}
