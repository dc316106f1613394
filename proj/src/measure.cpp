#include <potconst/error.hpp>
#include <potconst/measure.hpp>

#include <cmath>
#include <limits>

namespace potconst {

QuadMeasure QuadMeasure::from(std::vector<Point> nodes, std::vector<double> weights) {
  QuadMeasure m;
  m.nodes = std::move(nodes);
  m.weights = std::move(weights);
  m.total_mass = compensated_sum(m.weights);
  return m;
}

QuadMeasure QuadMeasure::uniform(std::vector<Point> nodes) {
  const std::size_t n = nodes.size();
  std::vector<double> w(n, n ? 1.0 / double(n) : 0.0);
  QuadMeasure m = from(std::move(nodes), std::move(w));
  if (n) m.total_mass = 1.0;
  return m;
}

void validate(const QuadMeasure& measure) {
  if (measure.nodes.empty()) throw Error(ErrorKind::InvalidMeasure, "measure has no nodes");
  if (measure.nodes.size() != measure.weights.size())
    throw Error(ErrorKind::InvalidMeasure, "node and weight counts differ");
  for (double w : measure.weights)
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error(ErrorKind::InvalidMeasure, "weights must be finite and non-negative");
  const double sum = compensated_sum(measure.weights);
  if (std::abs(sum - measure.total_mass) > 1e-12 * std::max(1.0, std::abs(sum)))
    throw Error(ErrorKind::InvalidMeasure, "total_mass disagrees with the weights");
}

double potential(const QuadMeasure& measure, Point z) {
  CompensatedSum s;
  for (std::size_t i = 0; i < measure.nodes.size(); ++i) {
    const double w = measure.weights[i];
    if (w == 0.0) continue;
    const double r = std::abs(z - measure.nodes[i]);
    if (r == 0.0) return -std::numeric_limits<double>::infinity();
    s.add(w * std::log(r));
  }
  return s.value();
}

QuadMeasure scaled(const QuadMeasure& measure, double c) {
  QuadMeasure out = measure;
  for (double& w : out.weights) w *= c;
  out.total_mass = measure.total_mass * c;
  return out;
}

}  // namespace potconst
