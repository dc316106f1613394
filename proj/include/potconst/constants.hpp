#ifndef POTCONST_CONSTANTS_HPP_
#define POTCONST_CONSTANTS_HPP_

#include <potconst/equilibrium.hpp>
#include <potconst/geometry.hpp>
#include <potconst/measure.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace potconst {

enum class ConstantMethod { ClosedForm, Quadrature, Optimizer };

struct ConstantReport {
  double value = 0.0;
  double exp_value = 1.0;
  ConstantMethod method = ConstantMethod::ClosedForm;
  std::size_t n_quadrature = 0;
  std::optional<std::size_t> m;
  std::optional<std::vector<Point>> maximizer_tuple;  // present iff Optimizer
  std::size_t restarts = 0;
  double error_hint = 0.0;
  // Raw optimizer result (already minus log cap). For the disk, value is the
  // larger of this and the closed form.
  std::optional<double> optimizer_value;
};

/// Default multistart count for m-tuple searches.
inline std::size_t default_restarts(std::size_t m) { return 8 + m; }

/**
 * C_E = integral of log d_E against mu_E, minus log cap(E).
 *
 * Disk: log 2. Segment: log M_[-1,1] from the one-dimensional integral
 *   log 2 + (2/pi) int_0^{pi/2} log(1 + sin t) dt.
 * Other kinds: quadrature against the equilibrium measure with n nodes;
 * error_hint compares against an n/2 run.
 */
ConstantReport constant_ce(const SetSpec& set, std::size_t n_quadrature);

/// Same number, read as M_E = exp(C_E).
ConstantReport constant_me(const SetSpec& set, std::size_t n_quadrature);

/**
 * C_E(m) = max over boundary m-tuples of
 *   int log max_k |z - c_k| dmu_E(z) - log cap(E),
 * by multistart coordinate ascent on the boundary grid (see
 * maximize_tuple_objective). For the disk the closed form is also evaluated
 * and the larger value reported. restarts = 0 means default_restarts(m).
 */
ConstantReport constant_ce_m(const SetSpec& set, std::size_t m, std::size_t n_quadrature,
                             std::size_t restarts = 0, std::uint64_t seed = 20080101);

/// Both constants from one shared equilibrium quadrature, so that
/// C_E(m) <= C_E holds up to rounding.
struct ConstantLadder {
  ConstantReport c;
  std::vector<ConstantReport> c_m;  // m = 2, 3, ...
};
ConstantLadder constant_ladder(const SetSpec& set, std::size_t max_m, std::size_t n_quadrature,
                               std::uint64_t seed = 20080101);

/// (m/pi) int_0^{pi/m} log(2 cos(t/2)) dt, the disk's m-point constant.
double disk_constant_closed_form(std::size_t m);

/// log of 2^{n-1} prod_{k<=l} (1 + cos((2k-1)pi/2n)) prod_{k<=n-l} (...).
double log_kneser_constant(long l, long n);
double kneser_constant(long l, long n);

/// log of 2^{n-1} prod_{k<=[n/2]} (1 + cos((2k-1)pi/2n))^2.
double log_borwein_constant(long n);

struct DominantSetReport {
  std::vector<Point> set_points;
  bool infinite = false;  // attaining points fill an arc (heuristic)
  std::size_t cardinality = 0;  // meaningful when !infinite
  std::size_t distinct_attaining = 0;
  // certificate[i]: index into set_points attaining d_E at support node i;
  // empty when infinite.
  std::vector<std::size_t> certificate;
};

/// Fraction of support nodes above which distinct attaining points signal an
/// infinite dominant set.
inline constexpr double infinite_dominant_threshold = 0.25;

/**
 * Small set S with d_E(z) = max_{t in S} |z - t| on the support of mu.
 * Collects the attaining points of d_E at every support node, then picks a
 * cover greedily. Flags an infinite dominant set when the attaining points
 * are more numerous than infinite_dominant_threshold times the node count.
 */
DominantSetReport dominant_set(const SetSpec& set, const QuadMeasure& mu);

}  // namespace potconst

#endif  // POTCONST_CONSTANTS_HPP_
