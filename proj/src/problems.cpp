#include "pielm/problems.hpp"

#include <cmath>

#include "pielm/error.hpp"

namespace pielm {

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

double dot(const Eigen::VectorXd& a, Point b) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < a.size(); ++k) s += a[k] * b[static_cast<std::size_t>(k)];
  return s;
}

ProblemSpec base(std::string name, int dimension, BoundaryRegime regime,
                 Domain domain, std::vector<ReferenceSetting> refs,
                 RunDefaults defaults) {
  ProblemSpec p{std::move(name), dimension, regime, {}, {}, {}, {}, {}, {}, {},
                std::move(domain), std::move(refs), defaults};
  return p;
}

// Boundary data follow from the exact solution.
void wire_boundary(ProblemSpec& p) {
  p.boundary_g = p.exact_u;
  if (p.regime == BoundaryRegime::Dirichlet) {
    auto grad = p.exact_gradient;
    p.boundary_h = [grad](Point x, Point n) { return dot(grad(x), n); };
  } else {
    p.boundary_k = p.exact_laplacian;
  }
}

// u = [(x1-a1)(b1-x1)]^2 [(x2-a2)(b2-x2)]^2 on the box [a1,b1]x[a2,b2].
ProblemSpec poly2d(const Domain& domain, std::vector<ReferenceSetting> refs) {
  PIELM_THROW_IF(!domain.is_box() || domain.dim() != 2, ErrorKind::Specification,
                 "dirichlet-poly2d: the domain must be a 2D box");
  const double a1 = domain.bounds_lo()[0], b1 = domain.bounds_hi()[0];
  const double a2 = domain.bounds_lo()[1], b2 = domain.bounds_hi()[1];
  auto bump = [](double x, double a, double b) { return (x - a) * (b - x); };
  auto slope = [](double x, double a, double b) { return a + b - 2.0 * x; };

  ProblemSpec p = base("dirichlet-poly2d", 2, BoundaryRegime::Dirichlet, domain,
                       std::move(refs), RunDefaults{});
  p.exact_u = [=](Point x) {
    const double A = bump(x[0], a1, b1), B = bump(x[1], a2, b2);
    return A * A * B * B;
  };
  p.exact_gradient = [=](Point x) {
    const double A = bump(x[0], a1, b1), B = bump(x[1], a2, b2);
    return vec({2.0 * A * slope(x[0], a1, b1) * B * B,
                2.0 * B * slope(x[1], a2, b2) * A * A});
  };
  p.exact_laplacian = [=](Point x) {
    const double A = bump(x[0], a1, b1), B = bump(x[1], a2, b2);
    const double sa = slope(x[0], a1, b1), sb = slope(x[1], a2, b2);
    return (2.0 * sa * sa - 4.0 * A) * B * B + A * A * (2.0 * sb * sb - 4.0 * B);
  };
  p.source_f = [=](Point x) {
    const double A = bump(x[0], a1, b1), B = bump(x[1], a2, b2);
    const double sa = slope(x[0], a1, b1), sb = slope(x[1], a2, b2);
    return 24.0 * B * B + 24.0 * A * A +
           2.0 * (2.0 * sa * sa - 4.0 * A) * (2.0 * sb * sb - 4.0 * B);
  };
  wire_boundary(p);
  return p;
}

// u = sin(x1) exp(cos(x2)).
ProblemSpec hexagram2d(const Domain& domain, std::vector<ReferenceSetting> refs) {
  PIELM_THROW_IF(domain.dim() != 2, ErrorKind::Specification,
                 "dirichlet-hexagram2d: the domain must be 2D");
  ProblemSpec p = base("dirichlet-hexagram2d", 2, BoundaryRegime::Dirichlet,
                       domain, std::move(refs), RunDefaults{});
  p.exact_u = [](Point x) { return std::sin(x[0]) * std::exp(std::cos(x[1])); };
  p.exact_gradient = [](Point x) {
    const double e = std::exp(std::cos(x[1]));
    return vec({std::cos(x[0]) * e, -std::sin(x[0]) * std::sin(x[1]) * e});
  };
  p.exact_laplacian = [](Point x) {
    const double s = std::sin(x[1]), c = std::cos(x[1]);
    return std::sin(x[0]) * std::exp(c) * (s * s - c - 1.0);
  };
  p.source_f = [](Point x) {
    const double s = std::sin(x[1]), c = std::cos(x[1]);
    const double s2 = s * s;
    return std::sin(x[0]) * std::exp(c) *
           (1.0 - 2.0 * (s2 - c) +
            (s2 * s2 - 6.0 * s2 * c + 3.0 * c * c - 4.0 * s2 + c));
  };
  wire_boundary(p);
  return p;
}

// u = 50 exp(-(x1 + x2 + x3) / 4).
ProblemSpec holes3d(const Domain& domain, std::vector<ReferenceSetting> refs) {
  PIELM_THROW_IF(domain.dim() != 3, ErrorKind::Specification,
                 "dirichlet-holes3d: the domain must be 3D");
  ProblemSpec p = base("dirichlet-holes3d", 3, BoundaryRegime::Dirichlet, domain,
                       std::move(refs), RunDefaults{2000, 15000, 6000, 32});
  auto e = [](Point x) { return std::exp(-0.25 * (x[0] + x[1] + x[2])); };
  p.exact_u = [e](Point x) { return 50.0 * e(x); };
  p.exact_gradient = [e](Point x) {
    const double g = -12.5 * e(x);
    return vec({g, g, g});
  };
  p.exact_laplacian = [e](Point x) { return 9.375 * e(x); };
  p.source_f = [e](Point x) { return 225.0 / 128.0 * e(x); };
  wire_boundary(p);
  return p;
}

// u = sin(x1^2 + x2^2).
ProblemSpec sinsq2d(const Domain& domain, std::vector<ReferenceSetting> refs) {
  PIELM_THROW_IF(domain.dim() != 2, ErrorKind::Specification,
                 "navier-sinsq2d: the domain must be 2D");
  ProblemSpec p = base("navier-sinsq2d", 2, BoundaryRegime::Navier, domain,
                       std::move(refs), RunDefaults{});
  auto r2 = [](Point x) { return x[0] * x[0] + x[1] * x[1]; };
  p.exact_u = [r2](Point x) { return std::sin(r2(x)); };
  p.exact_gradient = [r2](Point x) {
    const double c = std::cos(r2(x));
    return vec({2.0 * x[0] * c, 2.0 * x[1] * c});
  };
  p.exact_laplacian = [r2](Point x) {
    const double s = r2(x);
    return 4.0 * std::cos(s) - 4.0 * s * std::sin(s);
  };
  p.source_f = [](Point x) {
    const double a = x[0] * x[0], b = x[1] * x[1];
    const double s = std::sin(a + b), c = std::cos(a + b);
    return 16.0 * a * a * s + 16.0 * b * b * s - 64.0 * a * c - 64.0 * b * c +
           32.0 * a * b * s - 32.0 * s;
  };
  wire_boundary(p);
  return p;
}

// u = exp(x1) sin(x2), harmonic.
ProblemSpec porous2d(const Domain& domain, std::vector<ReferenceSetting> refs) {
  PIELM_THROW_IF(domain.dim() != 2, ErrorKind::Specification,
                 "navier-porous2d: the domain must be 2D");
  ProblemSpec p = base("navier-porous2d", 2, BoundaryRegime::Navier, domain,
                       std::move(refs), RunDefaults{});
  p.exact_u = [](Point x) { return std::exp(x[0]) * std::sin(x[1]); };
  p.exact_gradient = [](Point x) {
    const double e = std::exp(x[0]);
    return vec({e * std::sin(x[1]), e * std::cos(x[1])});
  };
  p.exact_laplacian = [](Point) { return 0.0; };
  p.source_f = [](Point) { return 0.0; };
  wire_boundary(p);
  return p;
}

// u = sin(pi x1) sin(pi x2) sin(pi x3).
ProblemSpec shell3d(const Domain& domain, std::vector<ReferenceSetting> refs) {
  PIELM_THROW_IF(domain.dim() != 3, ErrorKind::Specification,
                 "navier-shell3d: the domain must be 3D");
  ProblemSpec p = base("navier-shell3d", 3, BoundaryRegime::Navier, domain,
                       std::move(refs), RunDefaults{2000, 20000, 10000, 32});
  constexpr double pi = M_PI;
  auto u = [](Point x) {
    return std::sin(pi * x[0]) * std::sin(pi * x[1]) * std::sin(pi * x[2]);
  };
  p.exact_u = u;
  p.exact_gradient = [](Point x) {
    const double s0 = std::sin(pi * x[0]), s1 = std::sin(pi * x[1]),
                 s2 = std::sin(pi * x[2]);
    return vec({pi * std::cos(pi * x[0]) * s1 * s2,
                pi * s0 * std::cos(pi * x[1]) * s2,
                pi * s0 * s1 * std::cos(pi * x[2])});
  };
  p.exact_laplacian = [u](Point x) { return -3.0 * pi * pi * u(x); };
  p.source_f = [u](Point x) { return 9.0 * pi * pi * pi * pi * u(x); };
  wire_boundary(p);
  return p;
}

Domain box2(double a1, double b1, double a2, double b2) {
  return Domain::box(vec({a1, a2}), vec({b1, b2}));
}

std::vector<ReferenceSetting> references_for(std::string_view name) {
  constexpr double pi = M_PI;
  if (name == "dirichlet-poly2d") {
    return {
        {box2(-1, 1, -1, 1), {8.0, 6.0, 1.5, 1.4}},
        {box2(0, 5, 0, 5), {5.0, 2.0, 0.8, 1.4}},
        {box2(-4, 6, -3, 7), {1.0, 0.5, 0.3, 0.2}},
        {box2(5, 15, 0, 10), {0.8, 0.1, 0.2, 0.12}},
    };
  }
  if (name == "dirichlet-hexagram2d") {
    return {
        {Domain::hexagram({-pi, -pi}, {pi, pi}), {8.5, 1.2, 1.4, 0.6}},
        {Domain::hexagram({0, pi}, {3 * pi, 2 * pi}), {8.5, 0.6, 0.6, 0.3}},
    };
  }
  if (name == "dirichlet-holes3d") {
    const Eigen::Vector3d lo(1, 1, 1), hi(3, 3, 3);
    return {{Domain::holed_cube(lo, hi, Domain::default_cube_holes(lo, hi)),
             {2.0, 1.0, 1.0, 1.0}}};
  }
  if (name == "navier-sinsq2d") {
    return {
        {box2(0, 1, 0, 1), {9.0, 6.5, 4.1, 3.2}},
        {box2(0, 4, 0, 4), {11.0, 3.0, 1.5, 4.0}},
    };
  }
  if (name == "navier-porous2d") {
    const Eigen::Vector2d lo1(-1, -pi), hi1(1, pi), lo2(0, 0), hi2(4, 4 * pi);
    return {
        {Domain::porous_plate(lo1, hi1, Domain::default_plate_holes(lo1, hi1)),
         {2.5, 0.7, 0.4, 0.4}},
        {Domain::porous_plate(lo2, hi2, Domain::default_plate_holes(lo2, hi2)),
         {1.2, 0.6, 0.4, 0.3}},
    };
  }
  if (name == "navier-shell3d") {
    return {{Domain::spherical_shell(Eigen::Vector3d::Zero(), 0.2, 1.0),
             {4.0, 1.0, 1.0, 1.0}}};
  }
  throw Error(ErrorKind::Lookup, "unknown problem '" + std::string(name) + "'");
}

}  // namespace

std::string_view to_string(BoundaryRegime regime) {
  return regime == BoundaryRegime::Dirichlet ? "dirichlet" : "navier";
}

double ReferenceDeltas::operator[](ActivationKind kind) const {
  switch (kind) {
    case ActivationKind::Sine: return sine;
    case ActivationKind::Sigmoid: return sigmoid;
    case ActivationKind::Gaussian: return gaussian;
    case ActivationKind::Tanh: return tanh;
  }
  return sine;
}

const std::vector<std::string>& problem_names() {
  static const std::vector<std::string> names{
      "dirichlet-poly2d", "dirichlet-hexagram2d", "dirichlet-holes3d",
      "navier-sinsq2d",   "navier-porous2d",      "navier-shell3d"};
  return names;
}

ProblemSpec get_problem(std::string_view name, const std::optional<Domain>& domain) {
  auto refs = references_for(name);
  const Domain chosen = domain ? *domain : refs.front().domain;
  if (name == "dirichlet-poly2d") return poly2d(chosen, std::move(refs));
  if (name == "dirichlet-hexagram2d") return hexagram2d(chosen, std::move(refs));
  if (name == "dirichlet-holes3d") return holes3d(chosen, std::move(refs));
  if (name == "navier-sinsq2d") return sinsq2d(chosen, std::move(refs));
  if (name == "navier-porous2d") return porous2d(chosen, std::move(refs));
  return shell3d(chosen, std::move(refs));
}

}  // namespace pielm
