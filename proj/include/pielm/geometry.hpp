#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace pielm {

/// Rows are points. Row-major so that a single point is contiguous.
using PointSet =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Point = std::span<const double>;
using Rng = std::mt19937_64;

inline Point row_of(const PointSet& points, Eigen::Index i) {
  return {points.row(i).data(), static_cast<std::size_t>(points.cols())};
}

/// Independent, reproducible stream for one pipeline stage.
Rng make_stream(std::uint64_t seed, std::uint64_t stage);

struct Box {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;
};

struct Triangle {
  std::array<Eigen::Vector2d, 3> vertices;
};

/// Union of two triangles. The bounding box is what grids and rejection
/// sampling use; the triangles are free parameters.
struct Hexagram {
  Eigen::Vector2d lo;
  Eigen::Vector2d hi;
  std::array<Triangle, 2> triangles;
};

struct Hole {
  Eigen::VectorXd center;
  double radius = 0.0;
};

struct PorousPlate {
  Eigen::Vector2d lo;
  Eigen::Vector2d hi;
  std::vector<Hole> holes;
};

struct HoledCube {
  Eigen::Vector3d lo;
  Eigen::Vector3d hi;
  std::vector<Hole> holes;
};

struct SphericalShell {
  Eigen::Vector3d center;
  double r_inner = 0.0;
  double r_outer = 0.0;
};

// Boundary pieces. Each has its own parametrisation and a constant or
// analytic outward normal.

/// Straight segment a->b with a fixed outward normal (2D only).
struct Segment {
  Eigen::Vector2d a;
  Eigen::Vector2d b;
  Eigen::Vector2d normal;
};

/// Face of an axis-aligned box: x[axis] == (side > 0 ? hi : lo).
struct AxisFace {
  int axis = 0;
  int side = 1;
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;
};

/// Circle (2D) or sphere (3D). orientation = +1 when the domain is inside
/// the surface, -1 when the surface bounds a hole.
struct RoundSurface {
  Eigen::VectorXd center;
  double radius = 0.0;
  int orientation = 1;
};

using BoundaryPiece = std::variant<Segment, AxisFace, RoundSurface>;

double measure(const BoundaryPiece& piece);

class Domain {
public:
  using Shape =
      std::variant<Box, Hexagram, PorousPlate, HoledCube, SphericalShell>;

  static Domain box(Eigen::VectorXd lo, Eigen::VectorXd hi);
  /// Star built from the bounding box: an apex-up and an apex-down triangle,
  /// each spanning the full box width, with bases a quarter of the height
  /// away from the opposite edge (the affine image of a regular hexagram).
  static Domain hexagram(const Eigen::Vector2d& lo, const Eigen::Vector2d& hi);
  static Domain hexagram(const Eigen::Vector2d& lo, const Eigen::Vector2d& hi,
                         const Triangle& first, const Triangle& second);
  static Domain porous_plate(const Eigen::Vector2d& lo,
                             const Eigen::Vector2d& hi,
                             std::vector<Hole> holes);
  /// 3x3 array of circles of radius 0.1 * min side, centred at the quarter
  /// points of each side.
  static std::vector<Hole> default_plate_holes(const Eigen::Vector2d& lo,
                                               const Eigen::Vector2d& hi);
  static Domain holed_cube(const Eigen::Vector3d& lo, const Eigen::Vector3d& hi,
                           std::vector<Hole> holes);
  /// One central sphere of radius side/4 and eight spheres of radius
  /// 0.075 * side at centre +- 0.3 * side. For [1,3]^3 this is radius 0.5
  /// plus radius 0.15 at (2 +- 0.6, 2 +- 0.6, 2 +- 0.6).
  static std::vector<Hole> default_cube_holes(const Eigen::Vector3d& lo,
                                              const Eigen::Vector3d& hi);
  static Domain spherical_shell(const Eigen::Vector3d& center, double r_inner,
                                double r_outer);

  int dim() const { return dim_; }
  const Shape& shape() const { return shape_; }
  bool is_box() const { return std::holds_alternative<Box>(shape_); }

  /// Closed membership test.
  bool contains(Point x) const;

  const Eigen::VectorXd& bounds_lo() const { return lo_; }
  const Eigen::VectorXd& bounds_hi() const { return hi_; }

  /// Boundary components in a fixed order.
  const std::vector<BoundaryPiece>& boundary() const { return boundary_; }

  /// Compact, comma-free description, e.g. "box[-1:1]x[-1:1]".
  std::string describe() const;

private:
  Domain(Shape shape, int dim, Eigen::VectorXd lo, Eigen::VectorXd hi,
         std::vector<BoundaryPiece> boundary);

  Shape shape_;
  int dim_;
  Eigen::VectorXd lo_;
  Eigen::VectorXd hi_;
  std::vector<BoundaryPiece> boundary_;
};

struct BoundarySamples {
  PointSet points;
  PointSet normals;
  /// Index into Domain::boundary() for each row.
  std::vector<int> component;
};

struct CollocationSet {
  PointSet interior;
  PointSet boundary;
  PointSet normals;
};

/// q points i.i.d. uniform over the domain, by rejection against the bounding
/// box for anything that is not a plain box.
PointSet sample_interior(const Domain& domain, Eigen::Index q, Rng& rng);

/// p points split over the boundary components proportionally to their
/// measure (largest-remainder rounding, at least one per component). Points
/// within 1e-9 of an edge or vertex are never produced.
BoundarySamples sample_boundary(const Domain& domain, Eigen::Index p, Rng& rng);

/// Allocation used by sample_boundary; exposed for testing.
std::vector<Eigen::Index> allocate_boundary(const Domain& domain,
                                            Eigen::Index p);

/// Equidistant tensor grid over the bounding box, keeping points inside the
/// domain. The last axis varies fastest.
PointSet grid(const Domain& domain, std::span<const int> resolution);

}  // namespace pielm
