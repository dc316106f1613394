#include <potconst/error.hpp>
#include <potconst/weight.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace potconst {

namespace {

[[noreturn]] void not_admissible(const std::string& msg) { throw Error(ErrorKind::NotAdmissible, msg); }

bool is_unit_interval(const SetSpec& set) {
  const auto* s = std::get_if<Segment>(&set.shape);
  if (!s) return false;
  const Point zero{0.0, 0.0}, one{1.0, 0.0};
  return (s->a == zero && s->b == one) || (s->a == one && s->b == zero);
}

std::size_t analytic_count(const SetSpec& set, std::size_t min_count) {
  return std::max(set.boundary_samples, min_count);
}

}  // namespace

double truncation_radius(const SetSpec& set, const WeightSpec& weight) {
  if (weight.r_trunc) return *weight.r_trunc;
  if (const auto* d = std::get_if<Disk>(&set.shape)) return d->radius;
  return 0.0;
}

void check_weight_defined(const SetSpec& set, const WeightSpec& weight) {
  validate(set);
  switch (weight.kind) {
    case WeightKind::Unit:
      return;
    case WeightKind::IncompleteLorentz:
      if (!is_unit_interval(set)) not_admissible("the weight w(x) = x is defined on the segment [0, 1]");
      return;
    case WeightKind::RadialExp: {
      const auto* d = std::get_if<Disk>(&set.shape);
      if (!d || d->center != Point{0.0, 0.0})
        not_admissible("the radial weight needs a disk centered at the origin");
      const double r = truncation_radius(set, weight);
      if (!(r >= 4.0)) not_admissible("radial weight truncation radius must be at least 4");
      return;
    }
    case WeightKind::Tabulated: {
      const std::size_t n = boundary_nodes(set).size();
      if (weight.values.size() != n) not_admissible("tabulated weight needs one value per boundary node");
      bool positive = false;
      for (double v : weight.values) {
        if (!(v >= 0.0) || !std::isfinite(v)) not_admissible("weights must be finite and non-negative");
        positive = positive || v > 0.0;
      }
      if (!positive) not_admissible("weight vanishes identically");
      return;
    }
  }
}

void check_admissible(const SetSpec& set, const WeightSpec& weight) {
  check_weight_defined(set, weight);
  if (!has_positive_capacity(set)) not_admissible("{w > 0} must have positive capacity");
}

double weight_value(const WeightSpec& weight, Point z) {
  switch (weight.kind) {
    case WeightKind::Unit: return 1.0;
    case WeightKind::IncompleteLorentz: return std::max(z.real(), 0.0);
    case WeightKind::RadialExp: return std::exp(-std::abs(z));
    case WeightKind::Tabulated: break;
  }
  throw Error(ErrorKind::UnsupportedWeightKind, "tabulated weights are only known at their nodes");
}

double sup_log_weight(const SetSpec& set, const WeightSpec& weight) {
  check_weight_defined(set, weight);
  if (weight.kind == WeightKind::Tabulated)
    return std::log(*std::max_element(weight.values.begin(), weight.values.end()));
  // w(1) = 1 for the Lorentz weight, w(0) = 1 for the radial weight.
  return 0.0;
}

WeightedPool candidate_pool(const SetSpec& set, const WeightSpec& weight, std::size_t min_count) {
  check_weight_defined(set, weight);
  WeightedPool pool;
  switch (weight.kind) {
    case WeightKind::Unit:
      pool.points = boundary_nodes(set, analytic_count(set, min_count));
      pool.log_weights.assign(pool.points.size(), 0.0);
      break;
    case WeightKind::IncompleteLorentz: {
      const std::size_t n = analytic_count(set, min_count);
      for (std::size_t k = 1; k <= n; ++k) {
        const double x = double(k) / double(n);
        pool.points.emplace_back(x, 0.0);
        pool.log_weights.push_back(std::log(x));
      }
      break;
    }
    case WeightKind::RadialExp: {
      // Ring k (radius k/rings) carries about 2*pi*k points, so cells have
      // comparable area.
      const std::size_t target = std::max<std::size_t>(min_count, 64);
      const auto rings = std::max<std::size_t>(4, std::size_t(std::ceil(std::sqrt(double(target) / std::numbers::pi))));
      pool.points.emplace_back(0.0, 0.0);
      for (std::size_t k = 1; k <= rings; ++k) {
        const double r = double(k) / double(rings);
        const auto count = std::max<std::size_t>(8, std::size_t(std::ceil(2.0 * std::numbers::pi * double(k))));
        for (std::size_t j = 0; j < count; ++j)
          pool.points.push_back(std::polar(r, 2.0 * std::numbers::pi * double(j) / double(count)));
      }
      const double rt = truncation_radius(set, weight);
      for (std::size_t j = 0; j < set.boundary_samples; ++j)
        pool.points.push_back(std::polar(rt, 2.0 * std::numbers::pi * double(j) / double(set.boundary_samples)));
      for (const Point& p : pool.points) pool.log_weights.push_back(-std::abs(p));
      break;
    }
    case WeightKind::Tabulated: {
      const auto nodes = boundary_nodes(set);
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (weight.values[i] <= 0.0) continue;
        pool.points.push_back(nodes[i]);
        pool.log_weights.push_back(std::log(weight.values[i]));
      }
      break;
    }
  }
  return pool;
}

}  // namespace potconst
