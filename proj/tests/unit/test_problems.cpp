#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "pielm/error.hpp"
#include "pielm/problems.hpp"

using namespace pielm;

namespace {

oracle::Field as_field(const ScalarField& f) {
  return [f](const Eigen::VectorXd& x) {
    return f(Point(x.data(), static_cast<std::size_t>(x.size())));
  };
}

PointSet interior(const ProblemSpec& p, Eigen::Index n) {
  Rng rng = make_stream(17, 1);
  return sample_interior(p.default_domain, n, rng);
}

}  // namespace

TEST(Problems, Registry) {
  const auto& names = problem_names();
  ASSERT_EQ(names.size(), 6u);
  for (const auto& name : names) {
    const ProblemSpec p = get_problem(name);
    EXPECT_EQ(p.name, name);
    EXPECT_EQ(p.default_domain.dim(), p.dimension);
    EXPECT_FALSE(p.references.empty());
    EXPECT_EQ(p.regime == BoundaryRegime::Dirichlet, static_cast<bool>(p.boundary_h));
    EXPECT_EQ(p.regime == BoundaryRegime::Navier, static_cast<bool>(p.boundary_k));
  }
  try {
    get_problem("navier-nothing");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Lookup);
  }
}

TEST(Problems, DomainRestrictions) {
  const Domain hex = Domain::hexagram({-1, -1}, {1, 1});
  const Domain cube = Domain::box(Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(1, 1, 1));
  auto kind = [](const std::string& name, const Domain& d) {
    try {
      get_problem(name, d);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Io;
  };
  EXPECT_EQ(kind("dirichlet-poly2d", hex), ErrorKind::Specification);
  EXPECT_EQ(kind("navier-sinsq2d", cube), ErrorKind::Specification);
  EXPECT_EQ(kind("navier-shell3d", hex), ErrorKind::Specification);
  EXPECT_NO_THROW(get_problem("navier-shell3d", cube));
}

TEST(Problems, ReferenceDeltas) {
  const ProblemSpec p = get_problem("dirichlet-poly2d");
  ASSERT_EQ(p.references.size(), 4u);
  EXPECT_EQ(p.references[0].delta[ActivationKind::Sine], 8.0);
  EXPECT_EQ(p.references[1].delta[ActivationKind::Sine], 5.0);
  EXPECT_EQ(p.references[3].delta[ActivationKind::Sigmoid], 0.1);
  EXPECT_EQ(p.references[3].delta[ActivationKind::Gaussian], 0.2);
  EXPECT_EQ(p.references[3].delta[ActivationKind::Tanh], 0.12);
  const ProblemSpec n = get_problem("navier-sinsq2d");
  EXPECT_EQ(n.references[0].delta[ActivationKind::Sine], 9.0);
  EXPECT_EQ(n.references[1].delta[ActivationKind::Sine], 11.0);
}

TEST(Problems, HandValues) {
  const ProblemSpec poly = get_problem("dirichlet-poly2d");
  const double origin[] = {0.0, 0.0}, edge[] = {1.0, 0.3};
  EXPECT_EQ(poly.exact_u(origin), 1.0);
  EXPECT_EQ(poly.exact_u(edge), 0.0);
  // u_xxxx + 2 u_xxyy + u_yyyy = 24 + 32 + 24 at the origin.
  EXPECT_EQ(poly.source_f(origin), 80.0);

  const ProblemSpec sinsq = get_problem("navier-sinsq2d");
  EXPECT_EQ(sinsq.boundary_k(origin), 4.0);
  EXPECT_EQ(sinsq.exact_u(origin), 0.0);

  const ProblemSpec hex = get_problem("dirichlet-hexagram2d");
  const double p[] = {M_PI / 2, 0.0};
  EXPECT_DOUBLE_EQ(hex.exact_u(p), std::exp(1.0));

  const ProblemSpec shell = get_problem("navier-shell3d");
  const double q[] = {0.5, 0.5, 0.5};
  EXPECT_DOUBLE_EQ(shell.exact_u(q), 1.0);
  EXPECT_DOUBLE_EQ(shell.source_f(q), 9.0 * std::pow(M_PI, 4));
}

// Finite-difference Laplacian and biharmonic of exact_u against the closed
// forms, with one Richardson step to reach fourth order.
TEST(Problems, ManufacturedSolutionsConsistent) {
  for (const auto& name : problem_names()) {
    const ProblemSpec p = get_problem(name);
    const oracle::Field u = as_field(p.exact_u);
    const PointSet x = interior(p, 40);
    std::vector<double> bih_fd, f, lap_fd, lap;
    double u_scale = 0.0;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      const Eigen::VectorXd y = x.row(i).transpose();
      bih_fd.push_back(oracle::richardson([&](double h) { return oracle::biharmonic(u, y, h); },
                                          2e-2));
      lap_fd.push_back(oracle::richardson([&](double h) { return oracle::laplacian(u, y, h); },
                                          2e-2));
      f.push_back(p.source_f(row_of(x, i)));
      lap.push_back(p.exact_laplacian(row_of(x, i)));
      u_scale = std::max(u_scale, std::abs(u(y)));
    }
    double f_norm = 0.0;
    for (double v : f) f_norm = std::max(f_norm, std::abs(v));
    if (f_norm > 0.0) {
      EXPECT_LE(oracle::rel(bih_fd, f), 1e-3) << name;
    } else {
      // Biharmonic of a harmonic function: compare against the size of u.
      for (double v : bih_fd) EXPECT_LE(std::abs(v), 1e-3 * u_scale) << name;
    }
    double lap_norm = 0.0;
    for (double v : lap) lap_norm = std::max(lap_norm, std::abs(v));
    if (lap_norm > 0.0) {
      EXPECT_LE(oracle::rel(lap_fd, lap), 1e-6) << name;
    } else {
      for (double v : lap_fd) EXPECT_LE(std::abs(v), 1e-6 * u_scale) << name;
    }
  }
}

TEST(Problems, GradientAndBoundaryData) {
  for (const auto& name : problem_names()) {
    const ProblemSpec p = get_problem(name);
    const oracle::Field u = as_field(p.exact_u);
    Rng rng = make_stream(5, 2);
    const BoundarySamples b = sample_boundary(p.default_domain, 50, rng);
    for (Eigen::Index i = 0; i < b.points.rows(); ++i) {
      const Point x = row_of(b.points, i);
      const Eigen::VectorXd y = b.points.row(i).transpose();
      const Eigen::VectorXd g = p.exact_gradient(x);
      for (int k = 0; k < p.dimension; ++k) {
        const double fd = oracle::richardson(
            [&](double h) { return oracle::partial(u, y, k, h); }, 1e-3);
        EXPECT_NEAR(g[k], fd, 1e-7 * (1.0 + std::abs(fd))) << name;
      }
      EXPECT_EQ(p.boundary_g(x), p.exact_u(x));
      if (p.regime == BoundaryRegime::Dirichlet) {
        EXPECT_NEAR(p.boundary_h(x, row_of(b.normals, i)),
                    g.dot(b.normals.row(i).transpose()), 1e-12 * (1.0 + g.norm()));
      } else {
        EXPECT_EQ(p.boundary_k(x), p.exact_laplacian(x));
      }
    }
  }
}

TEST(Problems, PolyVanishesOnShiftedBox) {
  const Domain d = Domain::box(Eigen::Vector2d(5, 0), Eigen::Vector2d(15, 10));
  const ProblemSpec p = get_problem("dirichlet-poly2d", d);
  Rng rng = make_stream(1, 2);
  const BoundarySamples b = sample_boundary(d, 40, rng);
  for (Eigen::Index i = 0; i < b.points.rows(); ++i) {
    EXPECT_EQ(p.exact_u(row_of(b.points, i)), 0.0);
    EXPECT_NEAR(p.boundary_h(row_of(b.points, i), row_of(b.normals, i)), 0.0, 1e-9);
  }
}
