#include <potconst/error.hpp>
#include <potconst/quadrature.hpp>
#include <potconst/tuple_search.hpp>
#include <potconst/weighted.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace potconst {

namespace {

using std::numbers::pi;

// Lorentz density without the singular factor of the panel, times 2/(pi x).
QuadMeasure lorentz_measure(std::size_t n) {
  const double xs = lorentz_switch_point;
  const std::size_t na = std::max<std::size_t>(1, n / 2);
  const std::size_t nb = std::max<std::size_t>(1, n - na);
  std::vector<Point> nodes;
  std::vector<double> weights;

  // [1/4, xs]: x - 1/4 = h (1 + s), sqrt(x - 1/4) goes into the rule.
  const double ha = 0.5 * (xs - 0.25);
  const Rule ra = gauss_jacobi(int(na), 0.0, 0.5);
  for (std::size_t k = 0; k < na; ++k) {
    const double x = 0.25 + ha * (1.0 + ra.nodes[k]);
    nodes.emplace_back(x, 0.0);
    weights.push_back(ha * std::sqrt(ha) * ra.weights[k] * 2.0 / (pi * x * std::sqrt(1.0 - x)));
  }
  // [xs, 1]: 1 - x = h (1 - s), 1/sqrt(1 - x) goes into the rule.
  const double hb = 0.5 * (1.0 - xs);
  const Rule rb = gauss_jacobi(int(nb), -0.5, 0.0);
  for (std::size_t k = 0; k < nb; ++k) {
    const double x = xs + hb * (1.0 + rb.nodes[k]);
    nodes.emplace_back(x, 0.0);
    weights.push_back(std::sqrt(hb) * rb.weights[k] * 2.0 / (pi * x) * std::sqrt(x - 0.25));
  }
  return QuadMeasure::from(std::move(nodes), std::move(weights));
}

// dr dtheta / (2 pi) on the unit disk.
QuadMeasure radial_measure(std::size_t n) {
  const auto nr = std::max<std::size_t>(2, std::size_t(std::lround(std::sqrt(double(n)))));
  const std::size_t nt = std::max<std::size_t>(8, n / nr);
  const Rule r = gauss_legendre(int(nr));
  std::vector<Point> nodes;
  std::vector<double> weights;
  for (std::size_t i = 0; i < nr; ++i) {
    const double rad = 0.5 * (1.0 + r.nodes[i]);
    for (std::size_t j = 0; j < nt; ++j) {
      nodes.push_back(std::polar(rad, 2.0 * pi * (double(j) + 0.5) / double(nt)));
      weights.push_back(0.5 * r.weights[i] / double(nt));
    }
  }
  return QuadMeasure::from(std::move(nodes), std::move(weights));
}

// sup_{0<=t<=1} t |z - t|: f(t) = t^2 ((t-a)^2 + b^2) has critical points
// at the roots of 2t^2 - 3a t + a^2 + b^2.
double lorentz_farthest(Point z) {
  const double a = z.real(), b = z.imag();
  auto val = [&](double t) { return t * std::abs(z - t); };
  double best = val(1.0);
  const double disc = 9.0 * a * a - 8.0 * (a * a + b * b);
  if (disc >= 0.0) {
    const double sq = std::sqrt(disc);
    for (double t : {(3.0 * a - sq) / 4.0, (3.0 * a + sq) / 4.0})
      if (t > 0.0 && t < 1.0) best = std::max(best, val(t));
  }
  return best;
}

void require_m(std::size_t m) {
  if (m < 2) throw Error(ErrorKind::BadM, "m must be at least 2");
}

double weighted_ce_value(const SetSpec& set, const WeightSpec& weight, const WeightedEquilibrium& we) {
  const double avg = integrate(we.mu_w, [&](Point z) { return std::log(weighted_farthest_distance(set, weight, z)); });
  return avg + we.F_w;
}

}  // namespace

double lorentz_robin_constant() { return 8.0 * std::numbers::ln2 - 3.0 * std::log(3.0); }

WeightedEquilibrium weighted_equilibrium(const SetSpec& set, const WeightSpec& weight, std::size_t n_nodes) {
  check_admissible(set, weight);
  if (n_nodes < 2) throw Error(ErrorKind::InvalidInput, "need at least 2 quadrature nodes");
  WeightedEquilibrium we;
  switch (weight.kind) {
    case WeightKind::Unit: {
      const Equilibrium eq = equilibrium(set, n_nodes);
      we.mu_w = eq.measure;
      we.F_w = -std::log(eq.cap.value);
      we.support = set;
      return we;
    }
    case WeightKind::IncompleteLorentz:
      we.mu_w = lorentz_measure(n_nodes);
      we.F_w = lorentz_robin_constant();
      we.support = SetSpec{Segment{{0.25, 0.0}, {1.0, 0.0}}, set.boundary_samples};
      return we;
    case WeightKind::RadialExp:
      we.mu_w = radial_measure(n_nodes);
      we.F_w = 1.0;
      we.support = SetSpec{Disk{{0.0, 0.0}, 1.0}, set.boundary_samples};
      return we;
    case WeightKind::Tabulated:
      break;
  }
  throw Error(ErrorKind::UnsupportedWeightKind, "no equilibrium pair is known for tabulated weights");
}

double weighted_farthest_distance(const SetSpec& set, const WeightSpec& weight, Point z) {
  switch (weight.kind) {
    case WeightKind::Unit:
      return farthest_distance(set, z);
    case WeightKind::IncompleteLorentz:
      return lorentz_farthest(z);
    case WeightKind::RadialExp: {
      const double r = std::abs(z);
      return r <= 1.0 ? std::exp(r - 1.0) : r;
    }
    case WeightKind::Tabulated: {
      const WeightedPool pool = candidate_pool(set, weight, 0);
      double best = 0.0;
      for (std::size_t i = 0; i < pool.points.size(); ++i)
        best = std::max(best, std::exp(pool.log_weights[i]) * std::abs(z - pool.points[i]));
      return best;
    }
  }
  return 0.0;
}

ConstantReport constant_ce_w(const SetSpec& set, const WeightSpec& weight, std::size_t n_quadrature) {
  check_admissible(set, weight);
  if (weight.kind == WeightKind::Unit) return constant_ce(set, n_quadrature);
  if (weight.kind == WeightKind::Tabulated)
    throw Error(ErrorKind::UnsupportedWeightKind, "no equilibrium pair is known for tabulated weights");
  ConstantReport r;
  r.method = ConstantMethod::Quadrature;
  r.n_quadrature = n_quadrature;
  r.value = weighted_ce_value(set, weight, weighted_equilibrium(set, weight, n_quadrature));
  const double half = weighted_ce_value(set, weight, weighted_equilibrium(set, weight, std::max<std::size_t>(2, n_quadrature / 2)));
  r.error_hint = std::abs(r.value - half);
  r.exp_value = std::exp(r.value);
  return r;
}

ConstantReport constant_ce_wm(const SetSpec& set, const WeightSpec& weight, std::size_t m,
                              std::size_t n_quadrature, std::size_t restarts, std::uint64_t seed) {
  check_admissible(set, weight);
  require_m(m);
  if (weight.kind == WeightKind::Unit) return constant_ce_m(set, m, n_quadrature, restarts, seed);
  if (weight.kind == WeightKind::Tabulated)
    throw Error(ErrorKind::UnsupportedWeightKind, "no equilibrium pair is known for tabulated weights");
  if (restarts == 0) restarts = default_restarts(m);

  const WeightedEquilibrium we = weighted_equilibrium(set, weight, n_quadrature);
  const WeightedPool pool = candidate_pool(set, weight, set.boundary_samples);
  TupleSearchOptions opt;
  opt.restarts = restarts;
  opt.seed = seed;
  const TupleSearchResult best = maximize_tuple_objective(we.mu_w, pool.points, pool.log_weights, m, opt);

  std::vector<double> tuple_lw;
  for (Point c : best.tuple) tuple_lw.push_back(std::log(weight_value(weight, c)));

  ConstantReport r;
  r.method = ConstantMethod::Optimizer;
  r.n_quadrature = n_quadrature;
  r.m = m;
  r.restarts = restarts;
  r.maximizer_tuple = best.tuple;
  r.value = best.objective + we.F_w;
  r.optimizer_value = r.value;
  const WeightedEquilibrium half = weighted_equilibrium(set, weight, std::max<std::size_t>(2, n_quadrature / 2));
  r.error_hint = std::abs(r.value - (tuple_objective(half.mu_w, best.tuple, tuple_lw) + half.F_w));
  r.exp_value = std::exp(r.value);
  return r;
}

double circle_average_log_distance(std::span<const Point> points, std::span<const double> weights,
                                   double r, std::size_t n_angles) {
  CompensatedSum s;
  for (std::size_t j = 0; j < n_angles; ++j) {
    const Point z = std::polar(r, 2.0 * pi * double(j) / double(n_angles));
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < points.size(); ++k)
      best = std::max(best, std::log(weights[k]) + std::log(std::abs(z - points[k])));
    s.add(best);
  }
  return s.value() / double(n_angles);
}

std::vector<RieszSample> riesz_mass_check(std::span<const Point> points, std::span<const double> weights,
                                          std::span<const double> radii, std::size_t n_angles) {
  if (points.empty()) throw Error(ErrorKind::InvalidInput, "need at least one point");
  if (weights.size() != points.size()) throw Error(ErrorKind::InvalidInput, "one weight per point is required");
  if (n_angles < 512) throw Error(ErrorKind::InvalidInput, "need at least 512 angles");
  for (double w : weights)
    if (!(w > 0.0) || !std::isfinite(w)) throw Error(ErrorKind::InvalidInput, "weights must be positive");
  double rmax = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    rmax = std::max(rmax, std::abs(points[i]));
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw Error(ErrorKind::InvalidInput, "points must be distinct");
  }
  std::vector<RieszSample> out;
  for (double r : radii) {
    if (!(r > rmax + 1.0) || !std::isfinite(r))
      throw Error(ErrorKind::BadRadii, "radius " + std::to_string(r) + " must exceed max|p| + 1");
    const double h = 1e-4 * r;
    const double up = circle_average_log_distance(points, weights, r + h, n_angles);
    const double down = circle_average_log_distance(points, weights, r - h, n_angles);
    out.push_back({r, r * (up - down) / (2.0 * h)});
  }
  return out;
}

}  // namespace potconst
