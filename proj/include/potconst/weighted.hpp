#ifndef POTCONST_WEIGHTED_HPP_
#define POTCONST_WEIGHTED_HPP_

#include <potconst/constants.hpp>
#include <potconst/geometry.hpp>
#include <potconst/measure.hpp>
#include <potconst/weight.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace potconst {

struct WeightedEquilibrium {
  QuadMeasure mu_w;
  double F_w = 0.0;  // modified Robin constant
  SetSpec support;   // S_w
};

/// 8 log 2 - 3 log 3, the modified Robin constant of w(x) = x on [0, 1].
double lorentz_robin_constant();

/// 2(sqrt 2 - 1): where the two branches of d^w meet for w(x) = x.
inline constexpr double lorentz_switch_point = 0.82842712474619009760;

/**
 * Weighted equilibrium pair (mu_w, F_w).
 *
 * Unit: the unweighted equilibrium measure, F = -log cap.
 * IncompleteLorentz: the density (2/(pi x)) sqrt((x - 1/4)/(1 - x)) on
 *   [1/4, 1] by two Gauss–Jacobi panels split at lorentz_switch_point, each
 *   absorbing its endpoint singularity; F_w = 8 log 2 - 3 log 3.
 * RadialExp: dr dtheta / (2 pi) on the unit disk (Gauss–Legendre in r times
 *   a uniform angle grid), F_w = 1.
 * Tabulated weights throw Error(UnsupportedWeightKind).
 */
WeightedEquilibrium weighted_equilibrium(const SetSpec& set, const WeightSpec& weight, std::size_t n_nodes);

/// d^w(z) = sup over E of w(t)|z - t|. Exact for the analytic weights, grid
/// maximum over the node table for tabulated weights.
double weighted_farthest_distance(const SetSpec& set, const WeightSpec& weight, Point z);

/// C^w = int log d^w dmu_w + F_w. Unit weights delegate to constant_ce.
ConstantReport constant_ce_w(const SetSpec& set, const WeightSpec& weight, std::size_t n_quadrature);

/**
 * C^w(m) = sup over c_k in E of int log max_k w(c_k)|z - c_k| dmu_w + F_w.
 * The tuple ranges over candidate_pool(set, weight), a grid of S_w together
 * with the boundary. Unit weights delegate to constant_ce_m.
 */
ConstantReport constant_ce_wm(const SetSpec& set, const WeightSpec& weight, std::size_t m,
                              std::size_t n_quadrature, std::size_t restarts = 0,
                              std::uint64_t seed = 20080101);

struct RieszSample {
  double radius = 0.0;
  double mass_estimate = 0.0;
};

/// Mean of log max_k w_k|z - p_k| over |z| = r, trapezoid rule in angle.
double circle_average_log_distance(std::span<const Point> points, std::span<const double> weights,
                                   double r, std::size_t n_angles);

/**
 * Mass of the Riesz measure of log max_k w_k|z - p_k| inside |z| < r,
 * estimated by r (L(r + h) - L(r - h)) / (2h), h = 1e-4 r, where L is the
 * circle average. Needs distinct points, positive weights, every radius
 * above max|p_k| + 1 (Error(BadRadii) otherwise) and n_angles >= 512.
 */
std::vector<RieszSample> riesz_mass_check(std::span<const Point> points, std::span<const double> weights,
                                          std::span<const double> radii, std::size_t n_angles = 4096);

}  // namespace potconst

#endif  // POTCONST_WEIGHTED_HPP_
