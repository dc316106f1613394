#include <potconst/error.hpp>
#include <potconst/fekete.hpp>
#include <potconst/quadrature.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace potconst {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log|pool[c] - pool[p]| for every c, with the self term set to 0.
void log_distances_to(std::span<const Point> pool, std::size_t p, std::vector<double>& out) {
  out.resize(pool.size());
  const Point a = pool[p];
  for (std::size_t c = 0; c < pool.size(); ++c) out[c] = std::log(std::abs(pool[c] - a));
  out[p] = 0.0;
}

double log_vandermonde_of(std::span<const Point> pts, std::span<const double> log_w) {
  CompensatedSum s;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s.add(std::log(std::abs(pts[i] - pts[j])));
  for (double lw : log_w) s.add(double(n - 1) * lw);
  return s.value();
}

}  // namespace

FeketeEnsemble select_fekete(std::span<const Point> pool, std::span<const double> log_weights,
                             std::size_t n, const FeketeOptions& options) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "Fekete ensembles need n >= 2");
  if (pool.size() < min_pool_factor * n)
    throw Error(ErrorKind::PoolTooSmall, "candidate pool has " + std::to_string(pool.size()) +
                                             " points, need at least " + std::to_string(min_pool_factor * n));
  const bool weighted = !log_weights.empty();
  if (weighted && log_weights.size() != pool.size())
    throw Error(ErrorKind::InvalidInput, "one log-weight per pool point is required");

  const std::size_t P = pool.size();
  auto lw = [&](std::size_t c) { return weighted ? log_weights[c] : 0.0; };

  std::vector<double> S(P, 0.0);  // sum over selected points of log-distance
  std::vector<char> in_set(P, 0);
  std::vector<std::size_t> sel;
  sel.reserve(n);
  std::vector<double> row;

  auto add_point = [&](std::size_t c) {
    log_distances_to(pool, c, row);
    for (std::size_t k = 0; k < P; ++k) S[k] += row[k];
    in_set[c] = 1;
    sel.push_back(c);
  };

  std::size_t first = 0;
  for (std::size_t c = 1; c < P; ++c)
    if (lw(c) > lw(first)) first = c;
  add_point(first);

  while (sel.size() < n) {
    const double k = double(sel.size());
    std::size_t best = P;
    double best_val = kNegInf;
    for (std::size_t c = 0; c < P; ++c) {
      if (in_set[c]) continue;
      const double v = S[c] + k * lw(c);
      if (best == P || v > best_val) {
        best = c;
        best_val = v;
      }
    }
    add_point(best);
  }

  FeketeEnsemble ens;
  ens.weighted = weighted;
  ens.method = FeketeMethod::GreedyLeja;

  if (options.exchange) {
    const double wexp = double(n - 1);
    std::vector<double> row_new;
    bool converged = false;
    for (std::size_t pass = 0; pass < options.max_passes; ++pass) {
      ++ens.exchange_passes;
      bool improved = false;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t p = sel[i];
        log_distances_to(pool, p, row);
        const double base = S[p] + wexp * lw(p);
        std::size_t best = P;
        double best_val = kNegInf;
        for (std::size_t c = 0; c < P; ++c) {
          if (in_set[c]) continue;
          const double v = S[c] - row[c] + wexp * lw(c);
          if (best == P || v > best_val) {
            best = c;
            best_val = v;
          }
        }
        if (best == P || !(best_val > base + 1e-12 * (1.0 + std::abs(base)))) continue;
        log_distances_to(pool, best, row_new);
        for (std::size_t k = 0; k < P; ++k) S[k] += row_new[k] - row[k];
        in_set[p] = 0;
        in_set[best] = 1;
        sel[i] = best;
        improved = true;
      }
      if (!improved) {
        converged = true;
        break;
      }
    }
    if (converged) ens.method = FeketeMethod::ExactExchange;
  }

  ens.points.reserve(n);
  std::vector<double> sel_lw;
  for (std::size_t idx : sel) {
    ens.points.push_back(pool[idx]);
    if (weighted) {
      sel_lw.push_back(log_weights[idx]);
      ens.weight_values.push_back(std::exp(log_weights[idx]));
    }
  }
  ens.log_vandermonde = log_vandermonde_of(ens.points, sel_lw);
  return ens;
}

namespace {

// Fekete points of a segment or an arc crowd toward the endpoints with
// spacing O(1/n^2); a uniform pool is too coarse there, so those kinds get
// Chebyshev–Lobatto spacing in the curve parameter.
std::vector<Point> unweighted_pool(const SetSpec& set, std::size_t count) {
  auto lobatto = [count](std::size_t k) {
    return 0.5 * (1.0 - std::cos(std::numbers::pi * double(k) / double(count - 1)));
  };
  std::vector<Point> pool;
  if (const auto* s = std::get_if<Segment>(&set.shape)) {
    for (std::size_t k = 0; k < count; ++k) pool.push_back(s->a + (s->b - s->a) * lobatto(k));
    return pool;
  }
  if (const auto* a = std::get_if<CircularArc>(&set.shape)) {
    for (std::size_t k = 0; k < count; ++k)
      pool.push_back(a->center + std::polar(a->radius, a->angle0 + (a->angle1 - a->angle0) * lobatto(k)));
    return pool;
  }
  return boundary_nodes(set, count);
}

}  // namespace

FeketeEnsemble fekete_points(const SetSpec& set, std::size_t n, const std::optional<WeightSpec>& weight,
                             const FeketeOptions& options) {
  validate(set);
  const std::size_t target = std::max(options.pool_factor, min_pool_factor) * n;
  if (weight) {
    check_admissible(set, *weight);
    const WeightedPool pool = candidate_pool(set, *weight, target);
    FeketeEnsemble ens = select_fekete(pool.points, pool.log_weights, n, options);
    return ens;
  }
  return select_fekete(unweighted_pool(set, std::max(set.boundary_samples, target)), {}, n, options);
}

QuadMeasure counting_measure(const FeketeEnsemble& ensemble) {
  if (ensemble.points.empty()) throw Error(ErrorKind::InvalidMeasure, "empty ensemble");
  return QuadMeasure::uniform(ensemble.points);
}

double fekete_polynomial_norm(const FeketeEnsemble& ensemble, const SetSpec& set,
                              const std::optional<WeightSpec>& weight) {
  validate(set);
  const std::size_t n = ensemble.points.size();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "empty ensemble");
  const std::size_t grid_size = std::max<std::size_t>(set.boundary_samples, 32 * n);
  std::vector<Point> grid;
  std::vector<double> grid_lw;
  if (weight) {
    WeightedPool pool = candidate_pool(set, *weight, grid_size);
    grid = std::move(pool.points);
    grid_lw = std::move(pool.log_weights);
  } else {
    grid = boundary_nodes(set, grid_size);
  }
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < grid.size(); ++g) {
    double s = grid_lw.empty() ? 0.0 : double(n) * grid_lw[g];
    for (const Point& a : ensemble.points) s += std::log(std::abs(grid[g] - a));
    best = std::max(best, s);
  }
  return std::exp(best / double(n));
}

double best_single_exchange_gain(const FeketeEnsemble& ensemble, std::span<const Point> pool,
                                 std::span<const double> log_weights) {
  const std::size_t n = ensemble.points.size();
  const bool weighted = !log_weights.empty();
  std::vector<double> own_lw(n, 0.0);
  if (ensemble.weighted)
    for (std::size_t i = 0; i < n; ++i) own_lw[i] = std::log(ensemble.weight_values[i]);
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double base = double(n - 1) * own_lw[i];
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) base += std::log(std::abs(ensemble.points[i] - ensemble.points[j]));
    for (std::size_t c = 0; c < pool.size(); ++c) {
      if (std::find(ensemble.points.begin(), ensemble.points.end(), pool[c]) != ensemble.points.end()) continue;
      double v = weighted ? double(n - 1) * log_weights[c] : 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) v += std::log(std::abs(pool[c] - ensemble.points[j]));
      best = std::max(best, v - base);
    }
  }
  return best;
}

double transfinite_diameter_estimate(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n < 2) throw Error(ErrorKind::InvalidInput, "need at least two points");
  const double v = log_vandermonde_of(points, {});
  return std::exp(2.0 * v / (double(n) * double(n - 1)));
}

}  // namespace potconst
