#include "pielm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pielm/error.hpp"
#include "pielm/text.hpp"

namespace pielm {

namespace {

constexpr double kCornerGap = 1e-9;
constexpr double kMinAcceptance = 1e-4;
constexpr long long kAcceptanceProbe = 100000;

double cross(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

double signed_area(const Triangle& t) {
  return 0.5 * cross(t.vertices[1] - t.vertices[0], t.vertices[2] - t.vertices[0]);
}

Triangle counter_clockwise(Triangle t) {
  if (signed_area(t) < 0) std::swap(t.vertices[1], t.vertices[2]);
  return t;
}

// Closed test for a counter-clockwise triangle; tol > 0 shrinks it.
bool in_triangle(const Triangle& t, const Eigen::Vector2d& p, double tol = 0.0) {
  for (int e = 0; e < 3; ++e) {
    const auto& a = t.vertices[e];
    const auto& b = t.vertices[(e + 1) % 3];
    const Eigen::Vector2d edge = b - a;
    if (cross(edge, p - a) < tol * edge.norm()) return false;
  }
  return true;
}

// Parameters along a->b where it crosses the edges of t.
std::vector<double> crossings(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                              const Triangle& t) {
  std::vector<double> out;
  const Eigen::Vector2d r = b - a;
  for (int e = 0; e < 3; ++e) {
    const auto& c = t.vertices[e];
    const Eigen::Vector2d s = t.vertices[(e + 1) % 3] - c;
    const double denom = cross(r, s);
    if (std::abs(denom) < 1e-14 * r.norm() * s.norm()) continue;
    const double u = cross(c - a, s) / denom;
    const double v = cross(c - a, r) / denom;
    if (u > 0.0 && u < 1.0 && v >= 0.0 && v <= 1.0) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BoundaryPiece> hexagram_outline(const std::array<Triangle, 2>& tris) {
  std::vector<BoundaryPiece> out;
  for (int k = 0; k < 2; ++k) {
    const Triangle& self = tris[k];
    const Triangle& other = tris[1 - k];
    for (int e = 0; e < 3; ++e) {
      const Eigen::Vector2d a = self.vertices[e];
      const Eigen::Vector2d b = self.vertices[(e + 1) % 3];
      const Eigen::Vector2d dir = (b - a).normalized();
      const Eigen::Vector2d normal(dir.y(), -dir.x());
      std::vector<double> ts = crossings(a, b, other);
      ts.insert(ts.begin(), 0.0);
      ts.push_back(1.0);
      for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        const Eigen::Vector2d p0 = a + ts[i] * (b - a);
        const Eigen::Vector2d p1 = a + ts[i + 1] * (b - a);
        if ((p1 - p0).norm() < 1e-12) continue;
        const Eigen::Vector2d mid = 0.5 * (p0 + p1);
        if (in_triangle(other, mid, 1e-12)) continue;
        out.push_back(Segment{p0, p1, normal});
      }
    }
  }
  return out;
}

std::vector<BoundaryPiece> box_faces(const Eigen::VectorXd& lo,
                                     const Eigen::VectorXd& hi) {
  std::vector<BoundaryPiece> out;
  for (int axis = 0; axis < lo.size(); ++axis) {
    for (int side : {-1, 1}) out.push_back(AxisFace{axis, side, lo, hi});
  }
  return out;
}

void check_box(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) {
  PIELM_THROW_IF(lo.size() != hi.size() || (lo.size() != 2 && lo.size() != 3),
                 ErrorKind::GeometryDegenerate,
                 "box: lo/hi must both be 2- or 3-vectors");
  PIELM_THROW_IF(!lo.allFinite() || !hi.allFinite(),
                 ErrorKind::GeometryDegenerate, "box: non-finite bounds");
  PIELM_THROW_IF((hi.array() <= lo.array()).any(),
                 ErrorKind::GeometryDegenerate,
                 "box: lo must be strictly below hi in every coordinate");
}

void check_holes(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                 const std::vector<Hole>& holes) {
  for (std::size_t i = 0; i < holes.size(); ++i) {
    const Hole& h = holes[i];
    PIELM_THROW_IF(h.center.size() != lo.size(), ErrorKind::GeometryDegenerate,
                   "hole " + std::to_string(i) + ": dimension mismatch");
    PIELM_THROW_IF(!(h.radius > 0.0), ErrorKind::GeometryDegenerate,
                   "hole " + std::to_string(i) + ": radius must be positive");
    PIELM_THROW_IF(((h.center.array() - h.radius) <= lo.array()).any() ||
                       ((h.center.array() + h.radius) >= hi.array()).any(),
                   ErrorKind::GeometryDegenerate,
                   "hole " + std::to_string(i) + ": not strictly inside the box");
    for (std::size_t j = 0; j < i; ++j) {
      PIELM_THROW_IF((h.center - holes[j].center).norm() <=
                         h.radius + holes[j].radius,
                     ErrorKind::GeometryDegenerate,
                     "holes " + std::to_string(j) + " and " + std::to_string(i) +
                         " overlap");
    }
  }
}

bool outside_holes(const std::vector<Hole>& holes, Point x) {
  for (const Hole& h : holes) {
    double r2 = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double d = x[k] - h.center[static_cast<Eigen::Index>(k)];
      r2 += d * d;
    }
    if (r2 < h.radius * h.radius) return false;
  }
  return true;
}

bool in_box(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi, Point x) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    if (x[k] < lo[i] || x[k] > hi[i]) return false;
  }
  return true;
}

std::string interval(double a, double b) {
  return "[" + format_number(a) + ":" + format_number(b) + "]";
}

std::string box_text(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) {
  std::string s;
  for (Eigen::Index k = 0; k < lo.size(); ++k) {
    if (k) s += "x";
    s += interval(lo[k], hi[k]);
  }
  return s;
}

// Uniform on [a, b] avoiding kCornerGap at both ends.
double interior_uniform(double a, double b, Rng& rng) {
  std::uniform_real_distribution<double> u(a, b);
  for (;;) {
    const double t = u(rng);
    if (t - a >= kCornerGap && b - t >= kCornerGap) return t;
  }
}

void sample_piece(const BoundaryPiece& piece, Rng& rng,
                  Eigen::Ref<Eigen::RowVectorXd> point,
                  Eigen::Ref<Eigen::RowVectorXd> normal) {
  if (const auto* seg = std::get_if<Segment>(&piece)) {
    const double len = (seg->b - seg->a).norm();
    const double s = interior_uniform(0.0, len, rng);
    const Eigen::Vector2d p = seg->a + (s / len) * (seg->b - seg->a);
    point = p.transpose();
    normal = seg->normal.transpose();
  } else if (const auto* face = std::get_if<AxisFace>(&piece)) {
    for (Eigen::Index k = 0; k < face->lo.size(); ++k) {
      if (k == face->axis) {
        point[k] = face->side > 0 ? face->hi[k] : face->lo[k];
        normal[k] = face->side;
      } else {
        point[k] = interior_uniform(face->lo[k], face->hi[k], rng);
        normal[k] = 0.0;
      }
    }
  } else {
    const auto& round = std::get<RoundSurface>(piece);
    const auto d = round.center.size();
    Eigen::VectorXd dir(d);
    if (d == 2) {
      std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
      const double a = angle(rng);
      dir << std::cos(a), std::sin(a);
    } else {
      std::normal_distribution<double> gauss(0.0, 1.0);
      do {
        for (Eigen::Index k = 0; k < d; ++k) dir[k] = gauss(rng);
      } while (dir.norm() < 1e-12);
      dir.normalize();
    }
    point = (round.center + round.radius * dir).transpose();
    normal = (round.orientation * dir).transpose();
  }
}

}  // namespace

Rng make_stream(std::uint64_t seed, std::uint64_t stage) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stage & 0xffffffffu),
                    static_cast<std::uint32_t>(stage >> 32)};
  return Rng(seq);
}

double measure(const BoundaryPiece& piece) {
  if (const auto* seg = std::get_if<Segment>(&piece)) return (seg->b - seg->a).norm();
  if (const auto* face = std::get_if<AxisFace>(&piece)) {
    double m = 1.0;
    for (Eigen::Index k = 0; k < face->lo.size(); ++k) {
      if (k != face->axis) m *= face->hi[k] - face->lo[k];
    }
    return m;
  }
  const auto& round = std::get<RoundSurface>(piece);
  return round.center.size() == 2 ? 2.0 * M_PI * round.radius
                                   : 4.0 * M_PI * round.radius * round.radius;
}

Domain::Domain(Shape shape, int dim, Eigen::VectorXd lo, Eigen::VectorXd hi,
               std::vector<BoundaryPiece> boundary)
    : shape_(std::move(shape)),
      dim_(dim),
      lo_(std::move(lo)),
      hi_(std::move(hi)),
      boundary_(std::move(boundary)) {}

Domain Domain::box(Eigen::VectorXd lo, Eigen::VectorXd hi) {
  check_box(lo, hi);
  auto faces = box_faces(lo, hi);
  const int d = static_cast<int>(lo.size());
  return Domain(Box{lo, hi}, d, lo, hi, std::move(faces));
}

Domain Domain::hexagram(const Eigen::Vector2d& lo, const Eigen::Vector2d& hi) {
  check_box(lo, hi);
  const double cx = 0.5 * (lo.x() + hi.x());
  const double quarter = 0.25 * (hi.y() - lo.y());
  Triangle up{{Eigen::Vector2d(lo.x(), lo.y() + quarter),
               Eigen::Vector2d(hi.x(), lo.y() + quarter),
               Eigen::Vector2d(cx, hi.y())}};
  Triangle down{{Eigen::Vector2d(cx, lo.y()),
                 Eigen::Vector2d(hi.x(), hi.y() - quarter),
                 Eigen::Vector2d(lo.x(), hi.y() - quarter)}};
  return hexagram(lo, hi, up, down);
}

Domain Domain::hexagram(const Eigen::Vector2d& lo, const Eigen::Vector2d& hi,
                        const Triangle& first, const Triangle& second) {
  check_box(lo, hi);
  std::array<Triangle, 2> tris{counter_clockwise(first), counter_clockwise(second)};
  for (const auto& t : tris) {
    PIELM_THROW_IF(std::abs(signed_area(t)) < 1e-14,
                   ErrorKind::GeometryDegenerate, "hexagram: degenerate triangle");
    for (const auto& v : t.vertices) {
      PIELM_THROW_IF((v.array() < lo.array() - 1e-12).any() ||
                         (v.array() > hi.array() + 1e-12).any(),
                     ErrorKind::GeometryDegenerate,
                     "hexagram: triangle vertex outside the bounding box");
    }
  }
  auto outline = hexagram_outline(tris);
  return Domain(Hexagram{lo, hi, tris}, 2, lo, hi, std::move(outline));
}

std::vector<Hole> Domain::default_plate_holes(const Eigen::Vector2d& lo,
                                              const Eigen::Vector2d& hi) {
  const Eigen::Vector2d side = hi - lo;
  const double radius = 0.1 * side.minCoeff();
  std::vector<Hole> holes;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      Eigen::VectorXd c(2);
      c << lo.x() + 0.25 * i * side.x(), lo.y() + 0.25 * j * side.y();
      holes.push_back(Hole{c, radius});
    }
  }
  return holes;
}

Domain Domain::porous_plate(const Eigen::Vector2d& lo, const Eigen::Vector2d& hi,
                            std::vector<Hole> holes) {
  check_box(lo, hi);
  check_holes(lo, hi, holes);
  auto pieces = box_faces(lo, hi);
  for (const Hole& h : holes) pieces.push_back(RoundSurface{h.center, h.radius, -1});
  return Domain(PorousPlate{lo, hi, std::move(holes)}, 2, lo, hi, std::move(pieces));
}

std::vector<Hole> Domain::default_cube_holes(const Eigen::Vector3d& lo,
                                             const Eigen::Vector3d& hi) {
  const Eigen::Vector3d c = 0.5 * (lo + hi);
  const double side = (hi - lo).minCoeff();
  std::vector<Hole> holes{Hole{c, 0.25 * side}};
  for (int sx : {-1, 1}) {
    for (int sy : {-1, 1}) {
      for (int sz : {-1, 1}) {
        Eigen::VectorXd p = c + 0.3 * side * Eigen::Vector3d(sx, sy, sz);
        holes.push_back(Hole{p, 0.075 * side});
      }
    }
  }
  return holes;
}

Domain Domain::holed_cube(const Eigen::Vector3d& lo, const Eigen::Vector3d& hi,
                          std::vector<Hole> holes) {
  check_box(lo, hi);
  check_holes(lo, hi, holes);
  auto pieces = box_faces(lo, hi);
  for (const Hole& h : holes) pieces.push_back(RoundSurface{h.center, h.radius, -1});
  return Domain(HoledCube{lo, hi, std::move(holes)}, 3, lo, hi, std::move(pieces));
}

Domain Domain::spherical_shell(const Eigen::Vector3d& center, double r_inner,
                               double r_outer) {
  PIELM_THROW_IF(!center.allFinite(), ErrorKind::GeometryDegenerate,
                 "shell: non-finite center");
  PIELM_THROW_IF(!(r_inner > 0.0) || !(r_outer > r_inner),
                 ErrorKind::GeometryDegenerate,
                 "shell: need 0 < r_inner < r_outer");
  const Eigen::VectorXd c = center;
  std::vector<BoundaryPiece> pieces{RoundSurface{c, r_outer, 1},
                                    RoundSurface{c, r_inner, -1}};
  return Domain(SphericalShell{center, r_inner, r_outer}, 3,
                (center.array() - r_outer).matrix(),
                (center.array() + r_outer).matrix(), std::move(pieces));
}

bool Domain::contains(Point x) const {
  if (static_cast<int>(x.size()) != dim_) return false;
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Box>) {
          return in_box(s.lo, s.hi, x);
        } else if constexpr (std::is_same_v<T, Hexagram>) {
          const Eigen::Vector2d p(x[0], x[1]);
          return in_triangle(s.triangles[0], p) || in_triangle(s.triangles[1], p);
        } else if constexpr (std::is_same_v<T, PorousPlate> ||
                             std::is_same_v<T, HoledCube>) {
          return in_box(s.lo, s.hi, x) && outside_holes(s.holes, x);
        } else {
          double r2 = 0.0;
          for (int k = 0; k < 3; ++k) {
            const double d = x[k] - s.center[k];
            r2 += d * d;
          }
          return r2 >= s.r_inner * s.r_inner && r2 <= s.r_outer * s.r_outer;
        }
      },
      shape_);
}

std::string Domain::describe() const {
  return std::visit(
      [&](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Box>) {
          return "box" + box_text(s.lo, s.hi);
        } else if constexpr (std::is_same_v<T, Hexagram>) {
          return "hexagram" + box_text(s.lo, s.hi);
        } else if constexpr (std::is_same_v<T, PorousPlate>) {
          return "porous" + box_text(s.lo, s.hi) + "-" +
                 std::to_string(s.holes.size()) + "holes";
        } else if constexpr (std::is_same_v<T, HoledCube>) {
          return "holedcube" + box_text(s.lo, s.hi) + "-" +
                 std::to_string(s.holes.size()) + "holes";
        } else {
          return "shell(" + format_number(s.center.x()) + " " +
                 format_number(s.center.y()) + " " + format_number(s.center.z()) +
                 ")" + interval(s.r_inner, s.r_outer);
        }
      },
      shape_);
}

PointSet sample_interior(const Domain& domain, Eigen::Index q, Rng& rng) {
  PIELM_THROW_IF(q <= 0, ErrorKind::ContractViolation,
                 "sample_interior: count must be positive");
  const int d = domain.dim();
  PointSet out(q, d);
  std::vector<std::uniform_real_distribution<double>> axes;
  for (int k = 0; k < d; ++k) {
    axes.emplace_back(domain.bounds_lo()[k], domain.bounds_hi()[k]);
  }
  long long attempts = 0;
  Eigen::Index accepted = 0;
  std::vector<double> x(static_cast<std::size_t>(d));
  while (accepted < q) {
    for (int k = 0; k < d; ++k) x[static_cast<std::size_t>(k)] = axes[k](rng);
    ++attempts;
    if (domain.contains(x)) {
      for (int k = 0; k < d; ++k) out(accepted, k) = x[static_cast<std::size_t>(k)];
      ++accepted;
    }
    PIELM_THROW_IF(attempts >= kAcceptanceProbe &&
                       static_cast<double>(accepted) <
                           kMinAcceptance * static_cast<double>(attempts),
                   ErrorKind::GeometryDegenerate,
                   "sample_interior: rejection acceptance ratio below 1e-4 for " +
                       domain.describe());
  }
  return out;
}

std::vector<Eigen::Index> allocate_boundary(const Domain& domain, Eigen::Index p) {
  const auto& pieces = domain.boundary();
  const auto n = static_cast<Eigen::Index>(pieces.size());
  PIELM_THROW_IF(p < n, ErrorKind::Undercoverage,
                 "sample_boundary: " + std::to_string(p) +
                     " points cannot cover " + std::to_string(n) +
                     " boundary components");
  std::vector<double> m(pieces.size());
  std::transform(pieces.begin(), pieces.end(), m.begin(),
                 [](const BoundaryPiece& piece) { return measure(piece); });
  const double total = std::accumulate(m.begin(), m.end(), 0.0);

  std::vector<Eigen::Index> counts(pieces.size());
  std::vector<std::pair<double, std::size_t>> remainders;
  Eigen::Index used = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double exact = static_cast<double>(p) * m[i] / total;
    counts[i] = static_cast<Eigen::Index>(std::floor(exact));
    used += counts[i];
    remainders.emplace_back(exact - std::floor(exact), i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (Eigen::Index k = 0; k < p - used; ++k) {
    ++counts[remainders[static_cast<std::size_t>(k)].second];
  }
  // Every component gets at least one point, taken from the largest.
  for (auto& c : counts) {
    if (c == 0) {
      auto largest = std::max_element(counts.begin(), counts.end());
      --*largest;
      c = 1;
    }
  }
  return counts;
}

BoundarySamples sample_boundary(const Domain& domain, Eigen::Index p, Rng& rng) {
  PIELM_THROW_IF(p <= 0, ErrorKind::ContractViolation,
                 "sample_boundary: count must be positive");
  const auto counts = allocate_boundary(domain, p);
  const int d = domain.dim();
  BoundarySamples out{PointSet(p, d), PointSet(p, d), {}};
  out.component.reserve(static_cast<std::size_t>(p));
  Eigen::Index row = 0;
  const auto& pieces = domain.boundary();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (Eigen::Index k = 0; k < counts[i]; ++k, ++row) {
      sample_piece(pieces[i], rng, out.points.row(row), out.normals.row(row));
      out.component.push_back(static_cast<int>(i));
    }
  }
  return out;
}

PointSet grid(const Domain& domain, std::span<const int> resolution) {
  const int d = domain.dim();
  PIELM_THROW_IF(static_cast<int>(resolution.size()) != d,
                 ErrorKind::ContractViolation,
                 "grid: need one resolution per axis");
  Eigen::Index total = 1;
  for (int n : resolution) {
    PIELM_THROW_IF(n < 2, ErrorKind::ContractViolation,
                   "grid: resolution must be at least 2 per axis");
    total *= n;
  }
  const auto& lo = domain.bounds_lo();
  const auto& hi = domain.bounds_hi();
  std::vector<double> x(static_cast<std::size_t>(d));
  PointSet out(total, d);
  Eigen::Index kept = 0;
  for (Eigen::Index flat = 0; flat < total; ++flat) {
    Eigen::Index rest = flat;
    for (int k = d - 1; k >= 0; --k) {
      const auto n = resolution[static_cast<std::size_t>(k)];
      const auto i = static_cast<int>(rest % n);
      rest /= n;
      // Endpoints hit lo and hi exactly.
      x[static_cast<std::size_t>(k)] =
          i == n - 1 ? hi[k] : lo[k] + (hi[k] - lo[k]) * i / (n - 1);
    }
    if (domain.contains(x)) {
      for (int k = 0; k < d; ++k) out(kept, k) = x[static_cast<std::size_t>(k)];
      ++kept;
    }
  }
  out.conservativeResize(kept, d);
  return out;
}

}  // namespace pielm
