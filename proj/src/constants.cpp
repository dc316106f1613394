#include <potconst/constants.hpp>
#include <potconst/error.hpp>
#include <potconst/quadrature.hpp>
#include <potconst/tuple_search.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace potconst {

namespace {

using std::numbers::pi;

void require_positive_capacity(const SetSpec& set) {
  if (!has_positive_capacity(set))
    throw Error(ErrorKind::ZeroCapacity, "the constant needs a set of positive capacity");
}

void require_nodes(std::size_t n) {
  if (n < 4) throw Error(ErrorKind::InvalidInput, "need at least 4 quadrature nodes");
}

double log_segment_constant() {
  const double I = integrate_adaptive([](double t) { return std::log1p(std::sin(t)); }, 0.0, pi / 2);
  return std::numbers::ln2 + 2.0 / pi * I;
}

double ce_by_quadrature(const SetSpec& set, const Equilibrium& eq) {
  const double avg = integrate(eq.measure, [&](Point z) {
    return std::log(detail::farthest_distance_unchecked(set, z));
  });
  return avg - std::log(eq.cap.value);
}

ConstantReport finish(ConstantReport r) {
  r.exp_value = std::exp(r.value);
  return r;
}

std::optional<double> closed_form_ce(const SetSpec& set) {
  if (std::holds_alternative<Disk>(set.shape)) return std::numbers::ln2;
  if (std::holds_alternative<Segment>(set.shape)) return log_segment_constant();
  return std::nullopt;
}

ConstantReport ce_from(const SetSpec& set, const Equilibrium& eq, std::size_t n) {
  ConstantReport r;
  r.n_quadrature = n;
  if (auto v = closed_form_ce(set)) {
    r.value = *v;
    r.method = ConstantMethod::ClosedForm;
    return finish(r);
  }
  r.method = ConstantMethod::Quadrature;
  r.value = ce_by_quadrature(set, eq);
  const Equilibrium half = equilibrium(set, std::max<std::size_t>(2, n / 2));
  r.error_hint = std::abs(r.value - ce_by_quadrature(set, half));
  return finish(r);
}

ConstantReport ce_m_from(const SetSpec& set, const Equilibrium& eq, std::size_t m, std::size_t n,
                         std::size_t restarts, std::uint64_t seed) {
  if (m < 2) throw Error(ErrorKind::BadM, "m must be at least 2");
  if (restarts == 0) restarts = default_restarts(m);
  const std::vector<Point> grid = boundary_nodes(set);
  TupleSearchOptions opt;
  opt.restarts = restarts;
  opt.seed = seed;
  const TupleSearchResult best = maximize_tuple_objective(eq.measure, grid, {}, m, opt);

  ConstantReport r;
  r.method = ConstantMethod::Optimizer;
  r.n_quadrature = n;
  r.m = m;
  r.restarts = restarts;
  r.maximizer_tuple = best.tuple;
  r.optimizer_value = best.objective - std::log(eq.cap.value);
  r.value = *r.optimizer_value;
  if (std::holds_alternative<Disk>(set.shape)) r.value = std::max(r.value, disk_constant_closed_form(m));

  const Equilibrium half = equilibrium(set, std::max<std::size_t>(2, n / 2));
  const double half_value = tuple_objective(half.measure, best.tuple, {}) - std::log(half.cap.value);
  r.error_hint = std::abs(*r.optimizer_value - half_value);
  return finish(r);
}

}  // namespace

ConstantReport constant_ce(const SetSpec& set, std::size_t n_quadrature) {
  validate(set);
  require_positive_capacity(set);
  require_nodes(n_quadrature);
  if (closed_form_ce(set)) return ce_from(set, Equilibrium{}, n_quadrature);
  return ce_from(set, equilibrium(set, n_quadrature), n_quadrature);
}

ConstantReport constant_me(const SetSpec& set, std::size_t n_quadrature) {
  return constant_ce(set, n_quadrature);
}

ConstantReport constant_ce_m(const SetSpec& set, std::size_t m, std::size_t n_quadrature,
                             std::size_t restarts, std::uint64_t seed) {
  validate(set);
  require_positive_capacity(set);
  require_nodes(n_quadrature);
  if (m < 2) throw Error(ErrorKind::BadM, "m must be at least 2");
  return ce_m_from(set, equilibrium(set, n_quadrature), m, n_quadrature, restarts, seed);
}

ConstantLadder constant_ladder(const SetSpec& set, std::size_t max_m, std::size_t n_quadrature,
                               std::uint64_t seed) {
  validate(set);
  require_positive_capacity(set);
  require_nodes(n_quadrature);
  if (max_m < 2) throw Error(ErrorKind::BadM, "max_m must be at least 2");
  const Equilibrium eq = equilibrium(set, n_quadrature);
  ConstantLadder out;
  out.c = ce_from(set, eq, n_quadrature);
  for (std::size_t m = 2; m <= max_m; ++m)
    out.c_m.push_back(ce_m_from(set, eq, m, n_quadrature, 0, seed));
  return out;
}

double disk_constant_closed_form(std::size_t m) {
  if (m < 2) throw Error(ErrorKind::BadM, "m must be at least 2");
  const double M = double(m);
  const double I = integrate_adaptive([](double t) { return std::log(2.0 * std::cos(0.5 * t)); }, 0.0, pi / M);
  return M / pi * I;
}

double log_kneser_constant(long l, long n) {
  if (n < 1 || l < 0 || l > n) throw Error(ErrorKind::BadDegrees, "need 0 <= l <= n and n >= 1");
  CompensatedSum s;
  s.add(double(n - 1) * std::numbers::ln2);
  auto block = [&](long count) {
    for (long k = 1; k <= count; ++k) s.add(std::log1p(std::cos(double(2 * k - 1) * pi / double(2 * n))));
  };
  block(l);
  block(n - l);
  return s.value();
}

double kneser_constant(long l, long n) { return std::exp(log_kneser_constant(l, n)); }

double log_borwein_constant(long n) {
  if (n < 1) throw Error(ErrorKind::BadDegrees, "need n >= 1");
  CompensatedSum s;
  s.add(double(n - 1) * std::numbers::ln2);
  for (long k = 1; k <= n / 2; ++k)
    s.add(2.0 * std::log1p(std::cos(double(2 * k - 1) * pi / double(2 * n))));
  return s.value();
}

DominantSetReport dominant_set(const SetSpec& set, const QuadMeasure& mu) {
  validate(set);
  validate(mu);
  const double tol = 1e-9 * (1.0 + diameter(set));

  // Distinct attaining points and, per support node, which of them attain.
  std::vector<Point> attaining;
  std::vector<std::vector<std::size_t>> covers;
  auto index_of = [&](Point p) {
    for (std::size_t j = 0; j < attaining.size(); ++j)
      if (std::abs(attaining[j] - p) <= tol) return j;
    attaining.push_back(p);
    return attaining.size() - 1;
  };
  std::size_t support = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu.weights[i] <= 0.0) continue;
    ++support;
    std::vector<std::size_t> c;
    for (Point p : farthest_points(set, mu.nodes[i])) c.push_back(index_of(p));
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    covers.push_back(std::move(c));
  }
  if (support == 0) throw Error(ErrorKind::InvalidMeasure, "measure has no support");

  DominantSetReport rep;
  rep.distinct_attaining = attaining.size();
  if (double(attaining.size()) > infinite_dominant_threshold * double(support)) {
    rep.infinite = true;
    rep.set_points = attaining;
    rep.cardinality = attaining.size();
    return rep;
  }

  // Greedy set cover; ties to the lowest attaining index.
  std::vector<char> covered(covers.size(), 0);
  std::vector<std::size_t> chosen;
  std::size_t remaining = covers.size();
  while (remaining > 0) {
    std::vector<std::size_t> gain(attaining.size(), 0);
    for (std::size_t i = 0; i < covers.size(); ++i)
      if (!covered[i])
        for (std::size_t j : covers[i]) ++gain[j];
    const std::size_t pick = std::size_t(std::max_element(gain.begin(), gain.end()) - gain.begin());
    chosen.push_back(pick);
    for (std::size_t i = 0; i < covers.size(); ++i)
      if (!covered[i] && std::binary_search(covers[i].begin(), covers[i].end(), pick)) {
        covered[i] = 1;
        --remaining;
      }
  }
  for (std::size_t j : chosen) rep.set_points.push_back(attaining[j]);
  rep.cardinality = chosen.size();
  for (const auto& c : covers) {
    std::size_t k = 0;
    while (std::find(c.begin(), c.end(), chosen[k]) == c.end()) ++k;
    rep.certificate.push_back(k);
  }
  return rep;
}

}  // namespace potconst
