#pragma once

#include <Eigen/Dense>

#include "pielm/geometry.hpp"
#include "pielm/problems.hpp"

namespace pielm {

/// Uniform grid of nx x ny interior nodes on a 2D box; boundary nodes sit on
/// the box edges.
struct FdmGrid {
  Eigen::Vector2d lo;
  Eigen::Vector2d hi;
  int nx = 0;
  int ny = 0;
  double hx = 0.0;
  double hy = 0.0;

  static FdmGrid make(const Eigen::Vector2d& lo, const Eigen::Vector2d& hi, int nx,
                      int ny);
  /// Interior node coordinates, x index outer, y index inner.
  PointSet nodes() const;
};

struct FdmSolution {
  FdmGrid grid;
  Eigen::VectorXd u;  // interior nodes, ordered as FdmGrid::nodes()
  Eigen::VectorXd v;  // intermediate field, v = laplacian(u)
};

/// Coupled five-point finite-difference solve of the biharmonic problem on a
/// box: laplacian(v) = f with v = k on the boundary, then laplacian(u) = v
/// with u = g. Dirichlet problems have no k, so their v boundary values come
/// from the exact Laplacian. Both Poisson solves share one sparse Cholesky
/// factorisation.
FdmSolution solve_fdm(const ProblemSpec& problem, const FdmGrid& grid);

}  // namespace pielm
