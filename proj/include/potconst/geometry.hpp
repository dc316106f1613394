#ifndef POTCONST_GEOMETRY_HPP_
#define POTCONST_GEOMETRY_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace potconst {

using Point = std::complex<double>;

struct Disk {
  Point center{0.0, 0.0};
  double radius = 1.0;
};

struct Segment {
  Point a{-1.0, 0.0};
  Point b{1.0, 0.0};
};

/// Closed polygon; the chain wraps from the last vertex back to the first.
struct Polygon {
  std::vector<Point> vertices;
};

/// Arc of the circle |z - center| = radius, counter-clockwise from angle0 to
/// angle1 (radians).
struct CircularArc {
  Point center{0.0, 0.0};
  double radius = 1.0;
  double angle0 = 0.0;
  double angle1 = 3.141592653589793;
};

struct FinitePoints {
  std::vector<Point> points;
};

/// User-supplied boundary samples, used verbatim.
struct DiscretizedCurve {
  bool closed = true;
  std::vector<Point> nodes;
};

using Shape =
    std::variant<Disk, Segment, Polygon, CircularArc, FinitePoints, DiscretizedCurve>;

/// A compact planar set E together with its boundary sampling density.
struct SetSpec {
  Shape shape;
  std::size_t boundary_samples = 256;
};

/// Throws Error(InvalidSet) if the set violates its invariants.
void validate(const SetSpec& set);

/// "disk", "segment", "polygon", "arc", "points" or "curve".
std::string kind_name(const SetSpec& set);

/// True for the discrete kinds whose node list is the set itself.
bool is_sampled_kind(const SetSpec& set);

/// Finite point sets have zero logarithmic capacity.
bool has_positive_capacity(const SetSpec& set);

/// Samples of the outer boundary, at least set.boundary_samples of them.
std::vector<Point> boundary_nodes(const SetSpec& set);

/// Samples with an explicit target count for analytic kinds. Sampled kinds
/// ignore the count and return their node list.
std::vector<Point> boundary_nodes(const SetSpec& set, std::size_t count);

/// d_E(z) = max over t in E of |z - t|.
double farthest_distance(const SetSpec& set, Point z);

/// Points of E at which d_E(z) is attained, up to a relative tolerance. For a
/// disk centered at z the whole circle attains; its boundary nodes are
/// returned in that case.
std::vector<Point> farthest_points(const SetSpec& set, Point z, double rel_tol = 1e-9);

/// max_k |z - c_k|; throws Error(EmptyTuple) on an empty tuple.
double max_distance_to_tuple(std::span<const Point> tuple, Point z);

double diameter(const SetSpec& set);

/// Image of the set under z -> a z + b.
SetSpec transformed(const SetSpec& set, Point a, Point b);

namespace detail {
// Unchecked variants for inner loops; callers validate once up front.
double farthest_distance_unchecked(const SetSpec& set, Point z);
}  // namespace detail

}  // namespace potconst

#endif  // POTCONST_GEOMETRY_HPP_
