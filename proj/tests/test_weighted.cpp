#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <potconst/error.hpp>
#include <potconst/quadrature.hpp>
#include <potconst/weighted.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace potconst;
using std::numbers::pi;

namespace {

const SetSpec unit_interval{Segment{{0, 0}, {1, 0}}};
const SetSpec disk4{Disk{{0, 0}, 4.0}};
const SetSpec disk{Disk{}};
const WeightSpec lorentz{WeightKind::IncompleteLorentz, std::nullopt, {}};
const WeightSpec radial{WeightKind::RadialExp, std::nullopt, {}};
const WeightSpec unit{};

// mpmath, 30 digits.
const double lorentz_cw = 1.03755051747188597;

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidInput;
}

// C^w for w(x) = x by a different route: x = 1/4 + (3/4) sin^2(phi) turns
// the density into (3 / (pi x)) sin^2(phi) dphi, which is smooth.
double lorentz_cw_by_substitution() {
  const double xs = lorentz_switch_point;
  const double phis = std::asin(std::sqrt((xs - 0.25) / 0.75));
  auto f = [](double phi) {
    const double s = std::sin(phi);
    const double x = 0.25 + 0.75 * s * s;
    const double d = x <= lorentz_switch_point ? 1.0 - x : x * x / 4.0;
    return 3.0 / (pi * x) * s * s * std::log(d);
  };
  return integrate_adaptive(f, 0.0, phis) + integrate_adaptive(f, phis, pi / 2) + lorentz_robin_constant();
}

}  // namespace

TEST_CASE("weighted equilibrium pairs") {
  const WeightedEquilibrium L = weighted_equilibrium(unit_interval, lorentz, 64);
  CHECK(std::abs(L.mu_w.total_mass - 1.0) < 1e-10);
  CHECK(L.F_w == doctest::Approx(8 * std::log(2.0) - 3 * std::log(3.0)).epsilon(1e-15));
  for (Point p : L.mu_w.nodes) {
    CHECK(p.real() > 0.25);
    CHECK(p.real() < 1.0);
  }
  const auto* s = std::get_if<Segment>(&L.support.shape);
  REQUIRE(s);
  CHECK(s->a == Point(0.25, 0));
  CHECK(s->b == Point(1, 0));
  // Mean of x against the density, compared with adaptive quadrature.
  const double mean = integrate(L.mu_w, [](Point z) { return z.real(); });
  const double mean_ref = integrate_adaptive([](double phi) {
    const double sn = std::sin(phi);
    return 3.0 / pi * sn * sn;
  }, 0.0, pi / 2);
  CHECK(mean == doctest::Approx(mean_ref).epsilon(1e-13));

  const WeightedEquilibrium R = weighted_equilibrium(disk4, radial, 256);
  CHECK(R.F_w == 1.0);
  CHECK(std::abs(R.mu_w.total_mass - 1.0) < 1e-13);
  for (Point p : R.mu_w.nodes) CHECK(std::abs(p) <= 1.0);

  const WeightedEquilibrium U = weighted_equilibrium(disk, unit, 32);
  CHECK(U.F_w == 0.0);
  CHECK(U.mu_w.nodes == equilibrium_measure(disk, 32).nodes);

  WeightSpec tab{WeightKind::Tabulated, std::nullopt, std::vector<double>(disk.boundary_samples, 1.0)};
  CHECK(kind_of([&] { weighted_equilibrium(disk, tab, 32); }) == ErrorKind::UnsupportedWeightKind);
  CHECK(kind_of([&] { weighted_equilibrium(disk, lorentz, 32); }) == ErrorKind::NotAdmissible);
  CHECK(kind_of([&] { weighted_equilibrium(SetSpec{Disk{{0, 0}, 2.0}}, radial, 32); }) == ErrorKind::NotAdmissible);
}

TEST_CASE("weighted farthest distance") {
  CHECK(weighted_farthest_distance(unit_interval, lorentz, 0.3) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(weighted_farthest_distance(unit_interval, lorentz, 1.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(weighted_farthest_distance(disk4, radial, 0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(weighted_farthest_distance(disk4, radial, Point(0, 2)) == doctest::Approx(2.0));

  // Both branches of the closed form on S_w.
  for (double x = 0.25; x <= 1.0; x += 0.01) {
    const double expect = x <= lorentz_switch_point ? 1 - x : x * x / 4;
    CHECK(weighted_farthest_distance(unit_interval, lorentz, x) == doctest::Approx(expect).epsilon(1e-14));
  }

  // Brute-force grid maximum as the oracle off the real line.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.5, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Point z{u(rng), u(rng)};
    double grid = 0.0;
    for (int k = 0; k <= 200000; ++k) grid = std::max(grid, k / 200000.0 * std::abs(z - k / 200000.0));
    const double exact = weighted_farthest_distance(unit_interval, lorentz, z);
    CHECK(exact >= grid - 1e-14);
    CHECK(exact - grid < 1e-8);
  }
}

TEST_CASE("weighted Lipschitz bound") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Point a{u(rng), u(rng)}, b{u(rng), u(rng)};
    for (auto [set, w] : {std::pair{unit_interval, lorentz}, std::pair{disk4, radial}}) {
      const double da = weighted_farthest_distance(set, w, a), db = weighted_farthest_distance(set, w, b);
      CHECK(std::abs(da - db) <= std::abs(a - b) * std::exp(sup_log_weight(set, w)) + 1e-12);
    }
  }
}

TEST_CASE("weighted constants") {
  const ConstantReport L = constant_ce_w(unit_interval, lorentz, 256);
  CHECK(std::abs(L.value - lorentz_cw) < 1e-6);
  CHECK(std::abs(L.exp_value - 2.8222954) < 1e-5);
  CHECK(std::abs(L.value - lorentz_cw_by_substitution()) < 1e-12);

  const ConstantReport R = constant_ce_w(disk4, radial, 256);
  CHECK(std::abs(R.value - 0.5) < 1e-8);

  CHECK(constant_ce_w(disk, unit, 64).value == doctest::Approx(std::log(2.0)));
}

TEST_CASE("weighted m-point constants") {
  const ConstantReport u2 = constant_ce_wm(disk, unit, 2, 512);
  const ConstantReport d2 = constant_ce_m(disk, 2, 512);
  CHECK(std::abs(u2.value - d2.value) < 1e-3);

  const ConstantReport l2 = constant_ce_wm(unit_interval, lorentz, 2, 256);
  CHECK(l2.value <= lorentz_cw + 1e-3);
  CHECK(l2.maximizer_tuple->size() == 2);
  const ConstantReport l64 = constant_ce_wm(unit_interval, lorentz, 64, 256);
  CHECK(std::abs(l64.value - lorentz_cw) < 5e-3);
  CHECK(l64.value <= lorentz_cw + 1e-6);

  const ConstantReport r3 = constant_ce_wm(disk4, radial, 3, 256, 4);
  CHECK(r3.value <= 0.5 + 1e-3);
  CHECK(r3.value >= 0.0);

  CHECK(kind_of([] { constant_ce_wm(unit_interval, lorentz, 1, 64); }) == ErrorKind::BadM);
}

TEST_CASE("Riesz mass of log d^w") {
  const std::vector<Point> origin{{0, 0}};
  const std::vector<double> one{1.0};
  const std::vector<double> radii{2.0, 10.0, 100.0};
  for (const RieszSample& s : riesz_mass_check(origin, one, radii)) CHECK(std::abs(s.mass_estimate - 1.0) < 1e-6);

  // {-1, 1}: mass inside D_r is 1 - 2/(pi r) + O(r^-2); mpmath value of the
  // finite-difference estimator at r = 100 is 0.9936340177398...
  const std::vector<Point> pm{{-1, 0}, {1, 0}};
  const std::vector<double> w2{1.0, 1.0};
  const std::vector<double> rs{3.0, 10.0, 100.0, 1000.0, 10000.0};
  const auto est = riesz_mass_check(pm, w2, rs);
  CHECK(est[2].mass_estimate == doctest::Approx(0.993634017739862).epsilon(1e-8));
  for (std::size_t k = 0; k < est.size(); ++k) {
    CHECK(est[k].mass_estimate > 0.0);
    CHECK(std::abs(est[k].mass_estimate - (1.0 - 2.0 / (pi * rs[k]))) < 2.0 / (rs[k] * rs[k]));
    if (k > 0) CHECK(est[k].mass_estimate >= est[k - 1].mass_estimate - 1e-9);
  }

  // Far field: L(r) - log r -> sup log w.
  const std::vector<Point> zo{{0, 0}, {1, 0}};
  const std::vector<double> wz{1.0, 0.5};
  CHECK(std::abs(circle_average_log_distance(zo, wz, 1e4, 4096) - std::log(1e4)) < 1e-4);

  CHECK(kind_of([&] { riesz_mass_check(pm, w2, std::vector<double>{1.5}); }) == ErrorKind::BadRadii);
  CHECK(kind_of([&] { riesz_mass_check(pm, w2, radii, 100); }) == ErrorKind::InvalidInput);
}
