#include "pielm/fdm.hpp"

#include <cmath>
#include <vector>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "pielm/error.hpp"

namespace pielm {

FdmGrid FdmGrid::make(const Eigen::Vector2d& lo, const Eigen::Vector2d& hi, int nx,
                      int ny) {
  PIELM_THROW_IF(nx < 3 || ny < 3, ErrorKind::ContractViolation,
                 "fdm: need at least 3 interior nodes per axis");
  PIELM_THROW_IF((hi.array() <= lo.array()).any(), ErrorKind::GeometryDegenerate,
                 "fdm: box lo must be below hi");
  return FdmGrid{lo, hi, nx, ny, (hi.x() - lo.x()) / (nx + 1),
                 (hi.y() - lo.y()) / (ny + 1)};
}

PointSet FdmGrid::nodes() const {
  PointSet out(static_cast<Eigen::Index>(nx) * ny, 2);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      const Eigen::Index r = static_cast<Eigen::Index>(i) * ny + j;
      out(r, 0) = lo.x() + (i + 1) * hx;
      out(r, 1) = lo.y() + (j + 1) * hy;
    }
  }
  return out;
}

namespace {

// Right-hand side of -lap_h(w) = -source with Dirichlet values from `edge`.
Eigen::VectorXd poisson_rhs(const FdmGrid& g, const Eigen::VectorXd& source,
                            const ScalarField& edge) {
  Eigen::VectorXd rhs = -source;
  const double ax = 1.0 / (g.hx * g.hx), ay = 1.0 / (g.hy * g.hy);
  auto at = [&](double x, double y) {
    const double p[2] = {x, y};
    return edge(Point(p, 2));
  };
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.ny; ++j) {
      const Eigen::Index r = static_cast<Eigen::Index>(i) * g.ny + j;
      const double x = g.lo.x() + (i + 1) * g.hx;
      const double y = g.lo.y() + (j + 1) * g.hy;
      if (i == 0) rhs[r] += ax * at(g.lo.x(), y);
      if (i == g.nx - 1) rhs[r] += ax * at(g.hi.x(), y);
      if (j == 0) rhs[r] += ay * at(x, g.lo.y());
      if (j == g.ny - 1) rhs[r] += ay * at(x, g.hi.y());
    }
  }
  return rhs;
}

Eigen::SparseMatrix<double> negative_laplacian(const FdmGrid& g) {
  const double ax = 1.0 / (g.hx * g.hx), ay = 1.0 / (g.hy * g.hy);
  const Eigen::Index n = static_cast<Eigen::Index>(g.nx) * g.ny;
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(static_cast<std::size_t>(5 * n));
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.ny; ++j) {
      const Eigen::Index r = static_cast<Eigen::Index>(i) * g.ny + j;
      t.emplace_back(r, r, 2.0 * (ax + ay));
      if (i > 0) t.emplace_back(r, r - g.ny, -ax);
      if (i < g.nx - 1) t.emplace_back(r, r + g.ny, -ax);
      if (j > 0) t.emplace_back(r, r - 1, -ay);
      if (j < g.ny - 1) t.emplace_back(r, r + 1, -ay);
    }
  }
  Eigen::SparseMatrix<double> A(n, n);
  A.setFromTriplets(t.begin(), t.end());
  return A;
}

}  // namespace

FdmSolution solve_fdm(const ProblemSpec& problem, const FdmGrid& grid) {
  PIELM_THROW_IF(problem.dimension != 2 || !problem.default_domain.is_box(),
                 ErrorKind::UnsupportedGeometry,
                 "fdm: only 2D box domains are supported (problem '" +
                     problem.name + "' is on " + problem.default_domain.describe() +
                     ")");
  const auto& lo = problem.default_domain.bounds_lo();
  const auto& hi = problem.default_domain.bounds_hi();
  PIELM_THROW_IF(std::abs(lo[0] - grid.lo.x()) > 1e-12 ||
                     std::abs(lo[1] - grid.lo.y()) > 1e-12 ||
                     std::abs(hi[0] - grid.hi.x()) > 1e-12 ||
                     std::abs(hi[1] - grid.hi.y()) > 1e-12,
                 ErrorKind::UnsupportedGeometry,
                 "fdm: grid box does not match the problem domain");

  const ScalarField& v_edge = problem.regime == BoundaryRegime::Navier
                                  ? problem.boundary_k
                                  : problem.exact_laplacian;
  PIELM_THROW_IF(!v_edge, ErrorKind::Specification,
                 "fdm: no boundary values available for the intermediate field");

  const PointSet nodes = grid.nodes();
  Eigen::VectorXd f(nodes.rows());
  for (Eigen::Index r = 0; r < nodes.rows(); ++r) f[r] = problem.source_f(row_of(nodes, r));

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> chol(negative_laplacian(grid));
  PIELM_THROW_IF(chol.info() != Eigen::Success, ErrorKind::DegenerateSystem,
                 "fdm: factorisation of the five-point Laplacian failed");

  FdmSolution out{grid, {}, {}};
  out.v = chol.solve(poisson_rhs(grid, f, v_edge));
  out.u = chol.solve(poisson_rhs(grid, out.v, problem.boundary_g));
  return out;
}

}  // namespace pielm
