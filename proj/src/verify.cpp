#include <potconst/constants.hpp>
#include <potconst/error.hpp>
#include <potconst/fekete.hpp>
#include <potconst/verify.hpp>
#include <potconst/weighted.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace potconst {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool is_weighted(const std::optional<WeightSpec>& weight) {
  return weight && weight->kind != WeightKind::Unit;
}

double log_abs_factor(const Factor& f, Point z) {
  double s = 0.0;
  for (std::size_t k = 0; k < f.zeros.size(); ++k) {
    const double r = f.exponents.empty() ? 1.0 : f.exponents[k];
    s += r * std::log(std::abs(z - f.zeros[k]));
  }
  return s;
}

void check_factors(std::span<const Factor> factors) {
  if (factors.empty()) throw Error(ErrorKind::EmptyFactor, "no factors given");
  for (const Factor& f : factors) {
    if (f.zeros.empty()) throw Error(ErrorKind::EmptyFactor, "factor without zeros");
    if (!f.exponents.empty() && f.exponents.size() != f.zeros.size())
      throw Error(ErrorKind::BadExponent, "one exponent per zero is required");
    for (double r : f.exponents)
      if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorKind::BadExponent, "exponents must be positive");
  }
}

std::vector<Factor> plain_factors(std::span<const std::vector<Point>> zeros) {
  std::vector<Factor> out;
  for (const auto& z : zeros) out.push_back(Factor{z, {}});
  return out;
}

}  // namespace

double Factor::degree() const {
  if (exponents.empty()) return double(zeros.size());
  double s = 0.0;
  for (double r : exponents) s += r;
  return s;
}

NormGrid norm_grid(const SetSpec& set, const std::optional<WeightSpec>& weight, double degree) {
  const auto count = std::max<std::size_t>({set.boundary_samples, std::size_t(std::ceil(16.0 * degree)), 2048});
  NormGrid g;
  if (is_weighted(weight)) {
    WeightedPool pool = candidate_pool(set, *weight, count);
    g.points = std::move(pool.points);
    g.log_weights = std::move(pool.log_weights);
  } else {
    g.points = boundary_nodes(set, count);
  }
  return g;
}

FactorizationExperiment evaluate_factorization(const SetSpec& set, const std::optional<WeightSpec>& weight,
                                               std::span<const Factor> factors, const ChainConstants& constants,
                                               std::size_t m) {
  validate(set);
  check_factors(factors);
  if (weight) check_weight_defined(set, *weight);

  FactorizationExperiment ex;
  ex.set_id = kind_name(set);
  if (weight) ex.weight = *weight;
  ex.factors.assign(factors.begin(), factors.end());
  ex.m = m;
  ex.constants = constants;
  for (const Factor& f : factors) ex.n_total += f.degree();

  const NormGrid grid = norm_grid(set, weight, ex.n_total);
  auto lw = [&](std::size_t g) { return grid.log_weights.empty() ? 0.0 : grid.log_weights[g]; };

  std::vector<double> factor_norm(factors.size(), kNegInf);
  double product_norm = kNegInf;
  for (std::size_t g = 0; g < grid.points.size(); ++g) {
    double total = 0.0;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const double v = log_abs_factor(factors[j], grid.points[g]);
      factor_norm[j] = std::max(factor_norm[j], factors[j].degree() * lw(g) + v);
      total += v;
    }
    product_norm = std::max(product_norm, ex.n_total * lw(g) + total);
  }
  for (double v : factor_norm)
    if (v == kNegInf) throw Error(ErrorKind::ZeroNorm, "a factor vanishes on the whole grid");
  if (product_norm == kNegInf) throw Error(ErrorKind::ZeroNorm, "the product vanishes on the whole grid");

  CompensatedSum lhs;
  for (double v : factor_norm) lhs.add(v);
  ex.lhs = lhs.value();
  ex.log_norm_product = product_norm;
  ex.rhs_m = ex.n_total * constants.c_m + product_norm;
  ex.rhs = ex.n_total * constants.c + product_norm;
  ex.ratio_root = std::exp((ex.lhs - product_norm) / ex.n_total);
  const double tol = chain_tolerance_per_degree * ex.n_total;
  ex.chain_holds = ex.lhs <= ex.rhs_m + tol && ex.rhs_m <= ex.rhs + tol;
  return ex;
}

ChainConstants chain_constants(const SetSpec& set, const std::optional<WeightSpec>& weight, std::size_t m,
                               std::size_t n_quadrature, std::uint64_t seed) {
  if (m < 1) throw Error(ErrorKind::BadM, "need at least one factor");
  ChainConstants c;
  if (is_weighted(weight)) {
    c.c = constant_ce_w(set, *weight, n_quadrature).value;
    c.c_m = m == 1 ? 0.0 : constant_ce_wm(set, *weight, m, n_quadrature, 0, seed).value;
  } else {
    c.c = constant_ce(set, n_quadrature).value;
    c.c_m = m == 1 ? 0.0 : constant_ce_m(set, m, n_quadrature, 0, seed).value;
  }
  // max_k |z - c_k| <= d_E(z) pointwise, so C(m) <= C; an excess is quadrature
  // error (segment: C(m) = C exactly, one side closed form, one quadrature).
  c.c_m = std::min(c.c_m, c.c);
  return c;
}

FactorizationExperiment product_inequality_check(const SetSpec& set, const std::optional<WeightSpec>& weight,
                                                 std::span<const std::vector<Point>> zeros,
                                                 const std::optional<ChainConstants>& constants,
                                                 std::size_t n_quadrature) {
  const std::vector<Factor> factors = plain_factors(zeros);
  check_factors(factors);
  const ChainConstants c = constants ? *constants : chain_constants(set, weight, factors.size(), n_quadrature);
  return evaluate_factorization(set, weight, factors, c, factors.size());
}

FactorizationExperiment generalized_polynomial_check(const SetSpec& set, std::span<const Factor> factors,
                                                     const std::optional<ChainConstants>& constants,
                                                     std::size_t n_quadrature) {
  check_factors(factors);
  const ChainConstants c = constants ? *constants : chain_constants(set, std::nullopt, factors.size(), n_quadrature);
  return evaluate_factorization(set, std::nullopt, factors, c, factors.size());
}

FactorizationExperiment fekete_partition_experiment(const SetSpec& set, const std::optional<WeightSpec>& weight,
                                                    std::size_t n, std::span<const Point> tuple,
                                                    const ChainConstants& constants) {
  const std::size_t m = tuple.size();
  if (m < 2 || n < m) throw Error(ErrorKind::BadM, "need 2 <= m <= n");
  const std::optional<WeightSpec> w = is_weighted(weight) ? weight : std::nullopt;
  // The ratio is sensitive to where the points sit, so a finer pool than the
  // default.
  FeketeOptions fine;
  fine.pool_factor = 64;
  const FeketeEnsemble ens = fekete_points(set, n, w, fine);

  std::vector<double> tuple_w;
  for (Point c : tuple) tuple_w.push_back(w ? weight_value(*w, c) : 1.0);

  std::vector<Factor> groups(m);
  std::vector<std::size_t> group_of;
  for (Point a : ens.points) {
    std::size_t best = 0;
    double best_val = tuple_w[0] * std::abs(a - tuple[0]);
    for (std::size_t k = 1; k < m; ++k) {
      const double v = tuple_w[k] * std::abs(a - tuple[k]);
      if (v > best_val) {
        best_val = v;
        best = k;
      }
    }
    groups[best].zeros.push_back(a);
    group_of.push_back(best);
  }
  std::vector<Factor> nonempty;
  for (auto& g : groups)
    if (!g.zeros.empty()) nonempty.push_back(std::move(g));

  FactorizationExperiment ex = evaluate_factorization(set, w, nonempty, constants, m);
  ex.tuple.assign(tuple.begin(), tuple.end());
  ex.groups = std::move(group_of);
  return ex;
}

FactorizationExperiment fekete_partition_experiment(const SetSpec& set, const std::optional<WeightSpec>& weight,
                                                    std::size_t m, std::size_t n, std::size_t n_quadrature,
                                                    std::uint64_t seed) {
  if (m < 2 || n < m) throw Error(ErrorKind::BadM, "need 2 <= m <= n");
  ChainConstants c;
  std::vector<Point> tuple;
  if (is_weighted(weight)) {
    c.c = constant_ce_w(set, *weight, n_quadrature).value;
    const ConstantReport r = constant_ce_wm(set, *weight, m, n_quadrature, 0, seed);
    c.c_m = r.value;
    tuple = *r.maximizer_tuple;
  } else {
    c.c = constant_ce(set, n_quadrature).value;
    const ConstantReport r = constant_ce_m(set, m, n_quadrature, 0, seed);
    c.c_m = r.value;
    tuple = *r.maximizer_tuple;
  }
  c.c_m = std::min(c.c_m, c.c);
  return fekete_partition_experiment(set, weight, n, tuple, c);
}

CountableDemo countable_set_demo(std::span<const double> A, std::size_t n) {
  using boost::multiprecision::cpp_rational;
  if (A.empty()) throw Error(ErrorKind::BadSequence, "empty sequence");
  if (n < 1 || n > A.size()) throw Error(ErrorKind::BadSequence, "need 1 <= n <= len(A)");
  for (std::size_t k = 0; k < A.size(); ++k) {
    if (!std::isfinite(A[k]) || A[k] < 1.0) throw Error(ErrorKind::BadSequence, "terms must be finite and >= 1");
    if (k > 0 && A[k] < A[k - 1]) throw Error(ErrorKind::BadSequence, "sequence must be nondecreasing");
  }

  // Doubles convert to rationals exactly.
  std::vector<cpp_rational> x{cpp_rational(1)};
  for (std::size_t k = 1; k < A.size(); ++k) x.push_back(cpp_rational(1) / (cpp_rational(2) * cpp_rational(A[k])));
  std::vector<cpp_rational> E = x;
  E.push_back(cpp_rational(0));

  auto absr = [](const cpp_rational& v) { return v < 0 ? cpp_rational(-v) : v; };
  cpp_rational num(1);
  for (std::size_t j = 0; j < n; ++j) {
    cpp_rational norm(0);
    for (const auto& e : E) norm = std::max(norm, absr(e - x[j]));
    num *= norm;
  }
  cpp_rational den(0);
  for (const auto& e : E) {
    cpp_rational p(1);
    for (std::size_t j = 0; j < n; ++j) p *= e - x[j];
    den = std::max(den, absr(p));
  }
  if (den == 0) throw Error(ErrorKind::ZeroNorm, "product vanishes on the truncated set");

  const cpp_rational ratio = num / den;
  CountableDemo out;
  out.ratio = static_cast<double>(ratio);
  out.ratio_exact = ratio.str();
  out.bound_holds = ratio >= cpp_rational(A[n - 1]);
  return out;
}

std::vector<std::vector<Point>> random_factorization(const SetSpec& set, std::size_t m, std::size_t n_total,
                                                     std::uint64_t seed) {
  if (m < 1) throw Error(ErrorKind::BadM, "need at least one factor");
  if (n_total < m) throw Error(ErrorKind::BadM, "total degree must be at least the factor count");
  const std::vector<Point> nodes = boundary_nodes(set);
  Point centroid{0.0, 0.0};
  for (Point p : nodes) centroid += p;
  centroid /= double(nodes.size());

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> degree(m, 1);
  std::uniform_int_distribution<std::size_t> which(0, m - 1);
  for (std::size_t k = m; k < n_total; ++k) ++degree[which(rng)];

  std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<Point>> out(m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < degree[j]; ++k) {
      const Point p = nodes[pick(rng)];
      out[j].push_back(unit(rng) < 0.5 ? p : centroid + unit(rng) * (p - centroid));
    }
  return out;
}

}  // namespace potconst
