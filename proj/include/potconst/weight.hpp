#ifndef POTCONST_WEIGHT_HPP_
#define POTCONST_WEIGHT_HPP_

#include <potconst/geometry.hpp>

#include <optional>
#include <vector>

namespace potconst {

enum class WeightKind {
  Unit,               // w = 1
  IncompleteLorentz,  // w(x) = x on [0, 1]
  RadialExp,          // w(z) = exp(-|z|) on the plane, truncated to |z| <= r_trunc
  Tabulated,          // one value per boundary node of the set
};

struct WeightSpec {
  WeightKind kind = WeightKind::Unit;
  std::optional<double> r_trunc;
  std::vector<double> values;
};

/// Checks that the weight is defined on the set: the Lorentz weight lives on
/// the segment [0, 1], the radial weight on a disk centered at the origin with
/// truncation radius at least 4, and tabulated values match the node count.
/// Throws Error(NotAdmissible).
void check_weight_defined(const SetSpec& set, const WeightSpec& weight);

/// check_weight_defined plus positive capacity of {w > 0}.
void check_admissible(const SetSpec& set, const WeightSpec& weight);

/// Pointwise weight; not available for tabulated weights.
double weight_value(const WeightSpec& weight, Point z);

/// Truncation radius in effect for a radial weight on this set.
double truncation_radius(const SetSpec& set, const WeightSpec& weight);

/// sup_E log w.
double sup_log_weight(const SetSpec& set, const WeightSpec& weight);

/// Candidate points with their log-weights, restricted to w > 0.
struct WeightedPool {
  std::vector<Point> points;
  std::vector<double> log_weights;
};

/**
 * Grid over which weighted suprema and extremal configurations are searched.
 *
 * Unit: the boundary nodes of E (at least min_count for analytic kinds).
 * IncompleteLorentz: a uniform grid of (0, 1].
 * RadialExp: a polar grid of the support |z| <= 1 plus the truncation circle.
 * Tabulated: the boundary nodes carrying the table.
 */
WeightedPool candidate_pool(const SetSpec& set, const WeightSpec& weight, std::size_t min_count);

}  // namespace potconst

#endif  // POTCONST_WEIGHT_HPP_
