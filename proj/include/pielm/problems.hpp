#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "pielm/activation.hpp"
#include "pielm/geometry.hpp"

namespace pielm {

enum class BoundaryRegime { Dirichlet, Navier };

std::string_view to_string(BoundaryRegime regime);

using ScalarField = std::function<double(Point)>;
using VectorField = std::function<Eigen::VectorXd(Point)>;
using NormalField = std::function<double(Point, Point)>;

/// Scale factors used for one reference domain, one per activation.
struct ReferenceDeltas {
  double sine = 1.0;
  double sigmoid = 1.0;
  double gaussian = 1.0;
  double tanh = 1.0;

  double operator[](ActivationKind kind) const;
};

struct ReferenceSetting {
  Domain domain;
  ReferenceDeltas delta;
};

/// Collocation and network sizes the experiments use by default.
struct RunDefaults {
  Eigen::Index hidden = 1000;
  Eigen::Index q_interior = 10000;
  Eigen::Index p_boundary = 4000;
  int test_grid = 128;  // per axis
};

/// A manufactured biharmonic problem: exact solution and all data derived
/// from it in closed form.
struct ProblemSpec {
  std::string name;
  int dimension = 2;
  BoundaryRegime regime = BoundaryRegime::Dirichlet;

  ScalarField exact_u;
  VectorField exact_gradient;
  ScalarField exact_laplacian;
  ScalarField source_f;
  ScalarField boundary_g;
  NormalField boundary_h;  // Dirichlet only
  ScalarField boundary_k;  // Navier only

  Domain default_domain;
  std::vector<ReferenceSetting> references;
  RunDefaults defaults;
};

/// Registered names: dirichlet-poly2d, dirichlet-hexagram2d,
/// dirichlet-holes3d, navier-sinsq2d, navier-porous2d, navier-shell3d.
const std::vector<std::string>& problem_names();

/// Builds a problem on `domain`, or on its first reference domain when none is
/// given. dirichlet-poly2d needs a box since its solution vanishes on it.
ProblemSpec get_problem(std::string_view name,
                        const std::optional<Domain>& domain = std::nullopt);

}  // namespace pielm
