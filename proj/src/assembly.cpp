#include "pielm/assembly.hpp"

#include "pielm/error.hpp"

namespace pielm {

AssembledSystem assemble(const HiddenLayer& layer, const CollocationSet& colloc,
                         const ProblemSpec& problem, BoundaryRegime regime,
                         const BlockWeights& weights) {
  PIELM_THROW_IF(problem.regime != regime, ErrorKind::Specification,
                 "assemble: problem '" + problem.name + "' is " +
                     std::string(to_string(problem.regime)) + ", requested " +
                     std::string(to_string(regime)));
  PIELM_THROW_IF(!problem.source_f || !problem.boundary_g,
                 ErrorKind::Specification,
                 "assemble: problem lacks source or boundary values");
  PIELM_THROW_IF(regime == BoundaryRegime::Dirichlet && !problem.boundary_h,
                 ErrorKind::Specification,
                 "assemble: Dirichlet problem lacks normal-derivative data h");
  PIELM_THROW_IF(regime == BoundaryRegime::Navier && !problem.boundary_k,
                 ErrorKind::Specification,
                 "assemble: Navier problem lacks Laplacian data k");
  const int d = layer.dim();
  PIELM_THROW_IF((colloc.interior.rows() > 0 && colloc.interior.cols() != d) ||
                     (colloc.boundary.rows() > 0 && colloc.boundary.cols() != d),
                 ErrorKind::ContractViolation,
                 "assemble: collocation dimension does not match the layer");
  PIELM_THROW_IF(colloc.normals.rows() != colloc.boundary.rows(),
                 ErrorKind::ContractViolation,
                 "assemble: one normal per boundary point required");

  const Eigen::Index q = colloc.interior.rows();
  const Eigen::Index p = colloc.boundary.rows();
  const Eigen::Index n = layer.units();

  AssembledSystem sys;
  sys.regime = regime;
  sys.blocks = BlockRows{0, q, q + p, q + 2 * p};
  sys.H.resize(q + 2 * p, n);
  sys.S.resize(q + 2 * p);

  if (q > 0) {
    fill_feature_block(layer, colloc.interior, BiharmonicOp{},
                       sys.H.middleRows(0, q));
    for (Eigen::Index r = 0; r < q; ++r) {
      sys.S[r] = problem.source_f(row_of(colloc.interior, r));
    }
  }
  if (p > 0) {
    fill_feature_block(layer, colloc.boundary, ValueOp{}, sys.H.middleRows(q, p));
    if (regime == BoundaryRegime::Dirichlet) {
      fill_feature_block(layer, colloc.boundary, NormalDerivOp{colloc.normals},
                         sys.H.middleRows(q + p, p));
    } else {
      fill_feature_block(layer, colloc.boundary, LaplacianOp{},
                         sys.H.middleRows(q + p, p));
    }
    for (Eigen::Index r = 0; r < p; ++r) {
      const Point x = row_of(colloc.boundary, r);
      sys.S[q + r] = problem.boundary_g(x);
      sys.S[q + p + r] = regime == BoundaryRegime::Dirichlet
                             ? problem.boundary_h(x, row_of(colloc.normals, r))
                             : problem.boundary_k(x);
    }
  }

  auto scale = [&](Eigen::Index start, Eigen::Index rows, double w) {
    if (w == 1.0 || rows == 0) return;
    sys.H.middleRows(start, rows) *= w;
    sys.S.segment(start, rows) *= w;
  };
  scale(0, q, weights.interior);
  scale(q, p, weights.value);
  scale(q + p, p, weights.second);
  return sys;
}

}  // namespace pielm
