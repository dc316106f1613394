#ifndef POTCONST_MEASURE_HPP_
#define POTCONST_MEASURE_HPP_

#include <potconst/geometry.hpp>

#include <vector>

namespace potconst {

/// Finite weighted node set standing in for a positive Borel measure.
struct QuadMeasure {
  std::vector<Point> nodes;
  std::vector<double> weights;
  double total_mass = 0.0;

  /// Builds the measure and fills total_mass with the compensated weight sum.
  static QuadMeasure from(std::vector<Point> nodes, std::vector<double> weights);

  /// Normalized counting measure on the given points.
  static QuadMeasure uniform(std::vector<Point> nodes);

  std::size_t size() const { return nodes.size(); }
};

/// Throws Error(InvalidMeasure) on mismatched sizes, negative weights or a
/// total_mass that disagrees with the weights.
void validate(const QuadMeasure& measure);

/// Sum of w_i log|z - t_i|; -infinity when z hits a node with positive weight.
double potential(const QuadMeasure& measure, Point z);

/// c * measure.
QuadMeasure scaled(const QuadMeasure& measure, double c);

/// Integral of f against the measure, compensated and in node order.
template <class F>
double integrate(const QuadMeasure& measure, F&& f);

}  // namespace potconst

#include <potconst/quadrature.hpp>

namespace potconst {

template <class F>
double integrate(const QuadMeasure& measure, F&& f) {
  CompensatedSum s;
  for (std::size_t i = 0; i < measure.nodes.size(); ++i)
    if (measure.weights[i] != 0.0) s.add(measure.weights[i] * f(measure.nodes[i]));
  return s.value();
}

}  // namespace potconst

#endif  // POTCONST_MEASURE_HPP_
