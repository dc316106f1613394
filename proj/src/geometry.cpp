#include <potconst/error.hpp>
#include <potconst/geometry.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace potconst {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSet: return "InvalidSet";
    case ErrorKind::EmptyTuple: return "EmptyTuple";
    case ErrorKind::ZeroCapacity: return "ZeroCapacity";
    case ErrorKind::InvalidMeasure: return "InvalidMeasure";
    case ErrorKind::PoolTooSmall: return "PoolTooSmall";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::UnsupportedWeightKind: return "UnsupportedWeightKind";
    case ErrorKind::BadM: return "BadM";
    case ErrorKind::BadDegrees: return "BadDegrees";
    case ErrorKind::BadRadii: return "BadRadii";
    case ErrorKind::EmptyFactor: return "EmptyFactor";
    case ErrorKind::ZeroNorm: return "ZeroNorm";
    case ErrorKind::BadSequence: return "BadSequence";
    case ErrorKind::BadExponent: return "BadExponent";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::InvalidSet, msg); }

bool finite(Point p) { return std::isfinite(p.real()) && std::isfinite(p.imag()); }

void require_finite(std::span<const Point> pts, const char* what) {
  for (const Point& p : pts)
    if (!finite(p)) invalid(std::string(what) + " has a non-finite coordinate");
}

// Distinctness up to exact equality, via lexicographic sort.
bool all_distinct(std::span<const Point> pts) {
  std::vector<Point> sorted(pts.begin(), pts.end());
  auto less = [](Point x, Point y) {
    return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
  };
  std::sort(sorted.begin(), sorted.end(), less);
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

double cross(Point o, Point a, Point b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

bool on_segment(Point p, Point a, Point b) {
  return std::min(a.real(), b.real()) <= p.real() && p.real() <= std::max(a.real(), b.real()) &&
         std::min(a.imag(), b.imag()) <= p.imag() && p.imag() <= std::max(a.imag(), b.imag());
}

bool segments_intersect(Point p1, Point p2, Point q1, Point q2) {
  const double d1 = cross(q1, q2, p1);
  const double d2 = cross(q1, q2, p2);
  const double d3 = cross(p1, p2, q1);
  const double d4 = cross(p1, p2, q2);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment(p1, q1, q2)) return true;
  if (d2 == 0 && on_segment(p2, q1, q2)) return true;
  if (d3 == 0 && on_segment(q1, p1, p2)) return true;
  if (d4 == 0 && on_segment(q2, p1, p2)) return true;
  return false;
}

double arc_span(const CircularArc& arc) { return arc.angle1 - arc.angle0; }

bool is_full_circle(const CircularArc& arc) { return arc_span(arc) >= kTwoPi * (1.0 - 1e-14); }

bool arc_contains_angle(const CircularArc& arc, double phi) {
  double rel = std::fmod(phi - arc.angle0, kTwoPi);
  if (rel < 0) rel += kTwoPi;
  return rel <= arc_span(arc) + 1e-14;
}

// Endpoints plus, when z is not the center and the direction away from z lies
// on the arc, the antipodal point.
std::vector<Point> arc_candidates(const CircularArc& arc, Point z) {
  std::vector<Point> c;
  c.push_back(arc.center + std::polar(arc.radius, arc.angle0));
  c.push_back(arc.center + std::polar(arc.radius, arc.angle1));
  const Point rel = z - arc.center;
  if (std::abs(rel) > 0.0) {
    const double phi = std::arg(-rel);
    if (arc_contains_angle(arc, phi)) c.push_back(arc.center + std::polar(arc.radius, phi));
  }
  return c;
}

double max_over(std::span<const Point> pts, Point z) {
  double best = 0.0;
  for (const Point& t : pts) best = std::max(best, std::abs(z - t));
  return best;
}

double max_pairwise(std::span<const Point> pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, std::abs(pts[i] - pts[j]));
  return best;
}

}  // namespace

void validate(const SetSpec& set) {
  const bool sampled = is_sampled_kind(set);
  if (!sampled && set.boundary_samples < 8) invalid("boundary_samples must be at least 8");
  std::visit(
      Overloaded{
          [](const Disk& d) {
            if (!finite(d.center) || !std::isfinite(d.radius) || !(d.radius > 0))
              invalid("disk radius must be positive and finite");
          },
          [](const Segment& s) {
            if (!finite(s.a) || !finite(s.b)) invalid("segment endpoint is not finite");
            if (s.a == s.b) invalid("segment endpoints coincide");
          },
          [](const Polygon& p) {
            const auto& v = p.vertices;
            if (v.size() < 3) invalid("polygon needs at least 3 vertices");
            require_finite(v, "polygon");
            if (!all_distinct(v)) invalid("polygon vertices must be distinct");
            bool collinear = true;
            for (std::size_t i = 2; i < v.size() && collinear; ++i)
              if (cross(v[0], v[1], v[i]) != 0.0) collinear = false;
            if (collinear) invalid("polygon vertices are collinear");
            const std::size_t n = v.size();
            for (std::size_t i = 0; i < n; ++i) {
              for (std::size_t j = i + 1; j < n; ++j) {
                const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
                if (adjacent) continue;
                if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
                  invalid("polygon chain self-intersects");
              }
            }
          },
          [](const CircularArc& a) {
            if (!finite(a.center) || !std::isfinite(a.radius) || !(a.radius > 0))
              invalid("arc radius must be positive and finite");
            const double span = arc_span(a);
            if (!std::isfinite(span) || !(span > 0) || span > kTwoPi * (1.0 + 1e-14))
              invalid("arc needs 0 < angle1 - angle0 <= 2*pi");
          },
          [](const FinitePoints& f) {
            if (f.points.empty()) invalid("finite point set is empty");
            require_finite(f.points, "point set");
            if (!all_distinct(f.points)) invalid("finite point set has repeated points");
          },
          [](const DiscretizedCurve& c) {
            if (c.nodes.size() < 3) invalid("curve needs at least 3 nodes");
            require_finite(c.nodes, "curve");
            if (!all_distinct(c.nodes)) invalid("curve nodes must be distinct");
          },
      },
      set.shape);
}

std::string kind_name(const SetSpec& set) {
  return std::visit(Overloaded{
                        [](const Disk&) { return std::string("disk"); },
                        [](const Segment&) { return std::string("segment"); },
                        [](const Polygon&) { return std::string("polygon"); },
                        [](const CircularArc&) { return std::string("arc"); },
                        [](const FinitePoints&) { return std::string("points"); },
                        [](const DiscretizedCurve&) { return std::string("curve"); },
                    },
                    set.shape);
}

bool is_sampled_kind(const SetSpec& set) {
  return std::holds_alternative<FinitePoints>(set.shape) ||
         std::holds_alternative<DiscretizedCurve>(set.shape);
}

bool has_positive_capacity(const SetSpec& set) {
  return !std::holds_alternative<FinitePoints>(set.shape);
}

std::vector<Point> boundary_nodes(const SetSpec& set) {
  validate(set);
  return boundary_nodes(set, set.boundary_samples);
}

std::vector<Point> boundary_nodes(const SetSpec& set, std::size_t count) {
  return std::visit(
      Overloaded{
          [count](const Disk& d) {
            std::vector<Point> out(std::max<std::size_t>(count, 1));
            for (std::size_t k = 0; k < out.size(); ++k)
              out[k] = d.center + std::polar(d.radius, kTwoPi * double(k) / double(out.size()));
            return out;
          },
          [count](const Segment& s) {
            const std::size_t n = std::max<std::size_t>(count, 2);
            std::vector<Point> out(n);
            for (std::size_t k = 0; k < n; ++k) out[k] = s.a + (s.b - s.a) * (double(k) / double(n - 1));
            out.back() = s.b;
            return out;
          },
          [count](const Polygon& p) {
            // Arclength-uniform per edge; each edge starts at its vertex, so
            // vertices are always sampled.
            const auto& v = p.vertices;
            const std::size_t nv = v.size();
            double perimeter = 0.0;
            for (std::size_t i = 0; i < nv; ++i) perimeter += std::abs(v[(i + 1) % nv] - v[i]);
            std::vector<Point> out;
            out.reserve(count + nv);
            for (std::size_t i = 0; i < nv; ++i) {
              const Point a = v[i];
              const Point b = v[(i + 1) % nv];
              const auto pieces = std::max<std::size_t>(
                  1, std::size_t(std::ceil(double(count) * std::abs(b - a) / perimeter - 1e-9)));
              for (std::size_t k = 0; k < pieces; ++k) out.push_back(a + (b - a) * (double(k) / double(pieces)));
            }
            return out;
          },
          [count](const CircularArc& a) {
            const std::size_t n = std::max<std::size_t>(count, 2);
            std::vector<Point> out(n);
            if (is_full_circle(a)) {
              for (std::size_t k = 0; k < n; ++k)
                out[k] = a.center + std::polar(a.radius, a.angle0 + kTwoPi * double(k) / double(n));
            } else {
              const double span = arc_span(a);
              for (std::size_t k = 0; k < n; ++k)
                out[k] = a.center + std::polar(a.radius, a.angle0 + span * double(k) / double(n - 1));
            }
            return out;
          },
          [](const FinitePoints& f) { return f.points; },
          [](const DiscretizedCurve& c) { return c.nodes; },
      },
      set.shape);
}

namespace detail {

double farthest_distance_unchecked(const SetSpec& set, Point z) {
  return std::visit(
      Overloaded{
          [z](const Disk& d) { return std::abs(z - d.center) + d.radius; },
          [z](const Segment& s) { return std::max(std::abs(z - s.a), std::abs(z - s.b)); },
          [z](const Polygon& p) { return max_over(p.vertices, z); },
          [z](const CircularArc& a) {
            if (is_full_circle(a)) return std::abs(z - a.center) + a.radius;
            const auto c = arc_candidates(a, z);
            return max_over(c, z);
          },
          [z](const FinitePoints& f) { return max_over(f.points, z); },
          [z](const DiscretizedCurve& c) { return max_over(c.nodes, z); },
      },
      set.shape);
}

}  // namespace detail

double farthest_distance(const SetSpec& set, Point z) {
  validate(set);
  return detail::farthest_distance_unchecked(set, z);
}

std::vector<Point> farthest_points(const SetSpec& set, Point z, double rel_tol) {
  validate(set);
  const double d = detail::farthest_distance_unchecked(set, z);
  const double cutoff = d - rel_tol * std::max(1.0, d);
  auto attaining = [&](std::span<const Point> cands) {
    std::vector<Point> out;
    for (const Point& t : cands)
      if (std::abs(z - t) >= cutoff) out.push_back(t);
    return out;
  };
  return std::visit(
      Overloaded{
          [&](const Disk& disk) -> std::vector<Point> {
            const Point rel = z - disk.center;
            if (std::abs(rel) == 0.0) return boundary_nodes(set);
            return {disk.center - disk.radius * rel / std::abs(rel)};
          },
          [&](const Segment& s) -> std::vector<Point> {
            const Point ends[] = {s.a, s.b};
            return attaining(ends);
          },
          [&](const Polygon& p) -> std::vector<Point> { return attaining(p.vertices); },
          [&](const CircularArc& a) -> std::vector<Point> {
            const Point rel = z - a.center;
            if (std::abs(rel) == 0.0) return boundary_nodes(set);
            if (is_full_circle(a)) return {a.center - a.radius * rel / std::abs(rel)};
            return attaining(arc_candidates(a, z));
          },
          [&](const FinitePoints& f) -> std::vector<Point> { return attaining(f.points); },
          [&](const DiscretizedCurve& c) -> std::vector<Point> { return attaining(c.nodes); },
      },
      set.shape);
}

double max_distance_to_tuple(std::span<const Point> tuple, Point z) {
  if (tuple.empty()) throw Error(ErrorKind::EmptyTuple, "tuple has no points");
  return max_over(tuple, z);
}

double diameter(const SetSpec& set) {
  validate(set);
  return std::visit(
      Overloaded{
          [](const Disk& d) { return 2.0 * d.radius; },
          [](const Segment& s) { return std::abs(s.b - s.a); },
          [](const Polygon& p) { return max_pairwise(p.vertices); },
          [](const CircularArc& a) {
            const double span = arc_span(a);
            if (span >= std::numbers::pi) return 2.0 * a.radius;
            return 2.0 * a.radius * std::sin(0.5 * span);
          },
          [](const FinitePoints& f) { return max_pairwise(f.points); },
          [](const DiscretizedCurve& c) { return max_pairwise(c.nodes); },
      },
      set.shape);
}

SetSpec transformed(const SetSpec& set, Point a, Point b) {
  auto map_all = [a, b](std::vector<Point> pts) {
    for (Point& p : pts) p = a * p + b;
    return pts;
  };
  SetSpec out = set;
  out.shape = std::visit(
      Overloaded{
          [&](const Disk& d) -> Shape { return Disk{a * d.center + b, std::abs(a) * d.radius}; },
          [&](const Segment& s) -> Shape { return Segment{a * s.a + b, a * s.b + b}; },
          [&](const Polygon& p) -> Shape { return Polygon{map_all(p.vertices)}; },
          [&](const CircularArc& c) -> Shape {
            const double rot = std::arg(a);
            return CircularArc{a * c.center + b, std::abs(a) * c.radius, c.angle0 + rot, c.angle1 + rot};
          },
          [&](const FinitePoints& f) -> Shape { return FinitePoints{map_all(f.points)}; },
          [&](const DiscretizedCurve& c) -> Shape { return DiscretizedCurve{c.closed, map_all(c.nodes)}; },
      },
      set.shape);
  return out;
}

}  // namespace potconst
