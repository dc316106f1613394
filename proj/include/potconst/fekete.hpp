#ifndef POTCONST_FEKETE_HPP_
#define POTCONST_FEKETE_HPP_

#include <potconst/geometry.hpp>
#include <potconst/measure.hpp>
#include <potconst/weight.hpp>

#include <optional>
#include <span>
#include <vector>

namespace potconst {

enum class FeketeMethod {
  ExactExchange,  // exchange passes converged: no single swap improves
  GreedyLeja,     // greedy selection only (or pass limit reached)
};

/// Extremal configuration drawn from a finite candidate pool.
struct FeketeEnsemble {
  std::vector<Point> points;
  bool weighted = false;
  std::vector<double> weight_values;  // w(a_i), filled iff weighted
  /// sum_{i<j} log|a_i - a_j| + (n - 1) sum_i log w(a_i)
  double log_vandermonde = 0.0;
  FeketeMethod method = FeketeMethod::GreedyLeja;
  std::size_t exchange_passes = 0;
};

struct FeketeOptions {
  /// Analytic kinds are sampled with at least pool_factor * n candidates.
  std::size_t pool_factor = 16;
  bool exchange = true;
  std::size_t max_passes = 500;
};

/// Smallest admissible pool is min_pool_factor * n candidates.
inline constexpr std::size_t min_pool_factor = 4;

/**
 * n points of the pool maximizing
 *   sum_{i<j} log|a_i - a_j| + (n - 1) sum_i log_weights[i].
 *
 * Greedy (weighted) Leja selection starting at the heaviest candidate,
 * followed by single-point exchange passes until no swap improves the
 * objective. Ties go to the lowest pool index. An empty log_weights span means
 * the unweighted problem.
 *
 * Throws Error(PoolTooSmall) if pool.size() < 4n.
 */
FeketeEnsemble select_fekete(std::span<const Point> pool, std::span<const double> log_weights,
                             std::size_t n, const FeketeOptions& options = {});

/// Fekete points of the set, drawn from its boundary grid (or, when weighted,
/// from candidate_pool). Throws PoolTooSmall or NotAdmissible.
FeketeEnsemble fekete_points(const SetSpec& set, std::size_t n,
                             const std::optional<WeightSpec>& weight = std::nullopt,
                             const FeketeOptions& options = {});

/// Normalized counting measure of the ensemble.
QuadMeasure counting_measure(const FeketeEnsemble& ensemble);

/// n-th root of sup |w^n F_n| over the boundary grid (the support grid too
/// when weighted), where F_n is the monic polynomial with the ensemble as
/// zeros. Unweighted, this is the Chebyshev-norm capacity estimate.
double fekete_polynomial_norm(const FeketeEnsemble& ensemble, const SetSpec& set,
                              const std::optional<WeightSpec>& weight = std::nullopt);

/// Largest objective increase over all swaps of one ensemble point for one
/// pool candidate; <= 0 up to rounding for a converged ensemble.
double best_single_exchange_gain(const FeketeEnsemble& ensemble, std::span<const Point> pool,
                                 std::span<const double> log_weights);

/// Geometric mean of pairwise distances, exp(2 V / (n (n - 1))), with V the
/// unweighted log-Vandermonde of the points.
double transfinite_diameter_estimate(std::span<const Point> points);

}  // namespace potconst

#endif  // POTCONST_FEKETE_HPP_
