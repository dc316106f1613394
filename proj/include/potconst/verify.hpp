#ifndef POTCONST_VERIFY_HPP_
#define POTCONST_VERIFY_HPP_

#include <potconst/geometry.hpp>
#include <potconst/weight.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace potconst {

/// |P(z)| = prod_k |z - zeros[k]|^{exponents[k]}; empty exponents mean all 1.
struct Factor {
  std::vector<Point> zeros;
  std::vector<double> exponents;
  double degree() const;
};

/// The constants on the right of the chain; c_m for the factor count in use.
struct ChainConstants {
  double c_m = 0.0;
  double c = 0.0;
};

struct FactorizationExperiment {
  std::string set_id;
  WeightSpec weight;
  std::vector<Factor> factors;
  double n_total = 0.0;          // total degree
  std::size_t m = 0;             // number of factors the constant refers to
  double lhs = 0.0;              // sum_j log ||w^{n_j} P_j||
  double log_norm_product = 0.0; // log ||w^n prod P_j||
  double rhs_m = 0.0;            // n c_m + log ||w^n prod P_j||
  double rhs = 0.0;              // n c + log ||w^n prod P_j||
  double ratio_root = 0.0;       // exp((lhs - log ||prod||) / n)
  ChainConstants constants;
  // Partition experiments only: tuple and group index of every Fekete point.
  std::vector<Point> tuple;
  std::vector<std::size_t> groups;
  bool chain_holds = false;
};

/// Slack allowed per unit degree in lhs <= rhs_m <= rhs.
inline constexpr double chain_tolerance_per_degree = 1e-9;

/// Grid used for sup norms of a product of total degree `degree`: at least
/// max(boundary_samples, 16 degree, 2048) boundary nodes (the weighted
/// candidate pool when a non-unit weight is given).
struct NormGrid {
  std::vector<Point> points;
  std::vector<double> log_weights;  // empty when unweighted
};
NormGrid norm_grid(const SetSpec& set, const std::optional<WeightSpec>& weight, double degree);

/**
 * Evaluates every norm by grid supremum and the chain
 *   lhs <= rhs_m <= rhs
 * with the given constants. Factors may carry real exponents (generalized
 * polynomials). Throws EmptyFactor, BadExponent, or ZeroNorm when a norm
 * vanishes on the grid.
 */
FactorizationExperiment evaluate_factorization(const SetSpec& set, const std::optional<WeightSpec>& weight,
                                               std::span<const Factor> factors, const ChainConstants& constants,
                                               std::size_t m);

/// Ordinary polynomials given by their zeros; m is the number of factors.
/// Constants from chain_constants unless given.
FactorizationExperiment product_inequality_check(const SetSpec& set, const std::optional<WeightSpec>& weight,
                                                 std::span<const std::vector<Point>> zeros,
                                                 const std::optional<ChainConstants>& constants = std::nullopt,
                                                 std::size_t n_quadrature = 512);

/// Factors with positive real exponents; n is the sum of exponents.
FactorizationExperiment generalized_polynomial_check(const SetSpec& set, std::span<const Factor> factors,
                                                     const std::optional<ChainConstants>& constants = std::nullopt,
                                                     std::size_t n_quadrature = 512);

/// C_E(m) and C_E (or C^w(m), C^w) from one run. m = 1 gives c_m = 0:
/// with a single factor lhs and log ||prod|| coincide.
/// c_m is capped at c, which it can exceed only by quadrature error.
ChainConstants chain_constants(const SetSpec& set, const std::optional<WeightSpec>& weight, std::size_t m,
                               std::size_t n_quadrature = 512, std::uint64_t seed = 20080101);

/**
 * Sharpness construction: n (weighted) Fekete points are split into groups by
 * which tuple point c_k attains max_k w(c_k)|a - c_k| (ties to the lowest k),
 * each group becomes the zero set of one factor, and the chain is evaluated.
 * Empty groups are dropped. Throws BadM (m < 2 or n < m) or PoolTooSmall.
 */
FactorizationExperiment fekete_partition_experiment(const SetSpec& set, const std::optional<WeightSpec>& weight,
                                                    std::size_t n, std::span<const Point> tuple,
                                                    const ChainConstants& constants);

/// As above, with the tuple and constants from the m-point optimizer.
FactorizationExperiment fekete_partition_experiment(const SetSpec& set, const std::optional<WeightSpec>& weight,
                                                    std::size_t m, std::size_t n,
                                                    std::size_t n_quadrature = 512, std::uint64_t seed = 20080101);

struct CountableDemo {
  double ratio = 0.0;          // prod ||P_j|| / ||prod P_j|| on the truncated set
  std::string ratio_exact;     // reduced fraction
  bool bound_holds = false;    // ratio >= A_n in exact arithmetic
};

/**
 * The countable set {0} U {1} U {1/(2 A_k)}_{k>=2}, truncated after len(A)
 * terms, with factors P_j(x) = x - x_j, j <= n. Arithmetic is exact
 * (rationals). Throws BadSequence unless A is nondecreasing with A_k >= 1
 * and 1 <= n <= len(A).
 */
CountableDemo countable_set_demo(std::span<const double> A, std::size_t n);

/// Seeded random factorization into m factors of total degree n_total (each
/// at least 1). Zeros come from the boundary grid or from interior points
/// obtained by shrinking boundary nodes toward their centroid.
std::vector<std::vector<Point>> random_factorization(const SetSpec& set, std::size_t m, std::size_t n_total,
                                                     std::uint64_t seed);

}  // namespace potconst

#endif  // POTCONST_VERIFY_HPP_
