#ifndef POTCONST_EQUILIBRIUM_HPP_
#define POTCONST_EQUILIBRIUM_HPP_

#include <potconst/fekete.hpp>
#include <potconst/geometry.hpp>
#include <potconst/measure.hpp>

#include <optional>

namespace potconst {

enum class CapacityMethod {
  Analytic,
  FeketeProduct,
  ChebyshevNorm,
  ZeroCapacity,  // finite sets; value is 0
};

struct CapacityEstimate {
  double value = 0.0;
  CapacityMethod method = CapacityMethod::Analytic;
  std::size_t n_used = 0;
  double error_hint = 0.0;
  std::optional<double> chebyshev_norm;  // ||F_n||^(1/n)
  std::optional<double> fekete_product;  // geometric mean of pairwise distances
};

/// Known closed forms: disk r -> r, segment of length L -> L/4, arc of radius
/// r and opening angle a -> r sin(a/4).
std::optional<double> analytic_capacity(const SetSpec& set);

/**
 * Probability measure approximating the equilibrium measure of the set.
 *
 * Disk: n uniform nodes on the circle. Segment: Chebyshev–Gauss nodes of the
 * arcsine density, weights 1/n. Other kinds: counting measure of n Fekete
 * points. Throws Error(ZeroCapacity) for finite point sets.
 */
QuadMeasure equilibrium_measure(const SetSpec& set, std::size_t n_nodes);

/// Analytic value when known, otherwise the Chebyshev-norm estimate of the
/// degree-n Fekete polynomial (with the Fekete product as a second opinion).
/// Finite sets yield value 0 tagged ZeroCapacity.
CapacityEstimate capacity(const SetSpec& set, std::size_t n);

/// Fekete-based estimate regardless of whether a closed form exists.
CapacityEstimate numeric_capacity(const SetSpec& set, std::size_t n);

CapacityEstimate capacity_from_ensemble(const SetSpec& set, const FeketeEnsemble& ensemble);

/// Equilibrium quadrature together with the capacity used to normalize it.
/// For Fekete-based kinds both come from one ensemble.
struct Equilibrium {
  QuadMeasure measure;
  CapacityEstimate cap;
};

Equilibrium equilibrium(const SetSpec& set, std::size_t n_nodes);

/// g(z) = potential(mu_E, z) - log cap(E). Throws Error(ZeroCapacity) if
/// cap.value <= 0.
double green_bound(const SetSpec& set, const QuadMeasure& measure, const CapacityEstimate& cap, Point z);

}  // namespace potconst

#endif  // POTCONST_EQUILIBRIUM_HPP_
