#include <potconst/equilibrium.hpp>
#include <potconst/error.hpp>

#include <cmath>
#include <numbers>

namespace potconst {

namespace {

void require_positive_capacity(const SetSpec& set) {
  if (!has_positive_capacity(set))
    throw Error(ErrorKind::ZeroCapacity, "finite point sets have zero capacity");
}

void require_nodes(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "need at least one quadrature node");
}

QuadMeasure disk_measure(const Disk& d, std::size_t n) {
  std::vector<Point> nodes(n);
  for (std::size_t k = 0; k < n; ++k)
    nodes[k] = d.center + std::polar(d.radius, 2.0 * std::numbers::pi * double(k) / double(n));
  return QuadMeasure::uniform(std::move(nodes));
}

QuadMeasure chebyshev_measure(const Segment& s, std::size_t n) {
  std::vector<Point> nodes(n);
  const Point mid = 0.5 * (s.a + s.b);
  const Point half = 0.5 * (s.b - s.a);
  for (std::size_t k = 1; k <= n; ++k) {
    const double x = std::cos(std::numbers::pi * double(2 * k - 1) / double(2 * n));
    nodes[k - 1] = mid + half * x;
  }
  return QuadMeasure::uniform(std::move(nodes));
}

}  // namespace

std::optional<double> analytic_capacity(const SetSpec& set) {
  if (const auto* d = std::get_if<Disk>(&set.shape)) return d->radius;
  if (const auto* s = std::get_if<Segment>(&set.shape)) return std::abs(s->b - s->a) / 4.0;
  if (const auto* a = std::get_if<CircularArc>(&set.shape)) {
    const double span = std::min(a->angle1 - a->angle0, 2.0 * std::numbers::pi);
    return a->radius * std::sin(span / 4.0);
  }
  return std::nullopt;
}

CapacityEstimate capacity_from_ensemble(const SetSpec& set, const FeketeEnsemble& ensemble) {
  CapacityEstimate est;
  est.method = CapacityMethod::ChebyshevNorm;
  est.n_used = ensemble.points.size();
  est.chebyshev_norm = fekete_polynomial_norm(ensemble, set);
  est.fekete_product = transfinite_diameter_estimate(ensemble.points);
  est.value = *est.chebyshev_norm;
  est.error_hint = std::abs(*est.chebyshev_norm - *est.fekete_product);
  return est;
}

CapacityEstimate numeric_capacity(const SetSpec& set, std::size_t n) {
  validate(set);
  require_positive_capacity(set);
  return capacity_from_ensemble(set, fekete_points(set, n));
}

CapacityEstimate capacity(const SetSpec& set, std::size_t n) {
  validate(set);
  if (!has_positive_capacity(set)) {
    CapacityEstimate zero;
    zero.method = CapacityMethod::ZeroCapacity;
    return zero;
  }
  if (auto c = analytic_capacity(set)) {
    CapacityEstimate est;
    est.value = *c;
    est.method = CapacityMethod::Analytic;
    return est;
  }
  return numeric_capacity(set, n);
}

Equilibrium equilibrium(const SetSpec& set, std::size_t n_nodes) {
  validate(set);
  require_positive_capacity(set);
  require_nodes(n_nodes);
  if (const auto* d = std::get_if<Disk>(&set.shape))
    return {disk_measure(*d, n_nodes), capacity(set, n_nodes)};
  if (const auto* s = std::get_if<Segment>(&set.shape))
    return {chebyshev_measure(*s, n_nodes), capacity(set, n_nodes)};
  const FeketeEnsemble ens = fekete_points(set, n_nodes);
  CapacityEstimate cap = analytic_capacity(set) ? capacity(set, n_nodes) : capacity_from_ensemble(set, ens);
  return {counting_measure(ens), cap};
}

QuadMeasure equilibrium_measure(const SetSpec& set, std::size_t n_nodes) {
  validate(set);
  require_positive_capacity(set);
  require_nodes(n_nodes);
  if (const auto* d = std::get_if<Disk>(&set.shape)) return disk_measure(*d, n_nodes);
  if (const auto* s = std::get_if<Segment>(&set.shape)) return chebyshev_measure(*s, n_nodes);
  return counting_measure(fekete_points(set, n_nodes));
}

double green_bound(const SetSpec& set, const QuadMeasure& measure, const CapacityEstimate& cap, Point z) {
  validate(set);
  validate(measure);
  if (!(cap.value > 0.0)) throw Error(ErrorKind::ZeroCapacity, "capacity must be positive");
  return potential(measure, z) - std::log(cap.value);
}

}  // namespace potconst
