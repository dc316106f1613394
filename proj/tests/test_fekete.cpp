#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <potconst/error.hpp>
#include <potconst/fekete.hpp>
#include <potconst/weighted.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace potconst;
using std::numbers::pi;

namespace {

const SetSpec disk{Disk{}};
const SetSpec interval{Segment{}};
const SetSpec unit_interval{Segment{{0, 0}, {1, 0}}};
const WeightSpec lorentz{WeightKind::IncompleteLorentz, std::nullopt, {}};

}  // namespace

TEST_CASE("three Fekete points on the circle match brute force over a 360-node pool") {
  const auto pool = boundary_nodes(disk, 360);
  const FeketeEnsemble ens = select_fekete(pool, {}, 3);

  double best = -1e300;
  std::vector<double> L(360 * 360);
  for (int i = 0; i < 360; ++i)
    for (int j = 0; j < 360; ++j) L[i * 360 + j] = std::log(std::abs(pool[i] - pool[j]));
  for (int i = 0; i < 360; ++i)
    for (int j = i + 1; j < 360; ++j)
      for (int k = j + 1; k < 360; ++k) best = std::max(best, L[i * 360 + j] + L[i * 360 + k] + L[j * 360 + k]);

  CHECK(ens.log_vandermonde == doctest::Approx(best).epsilon(1e-13));
  CHECK(best == doctest::Approx(3.0 * std::log(std::sqrt(3.0))).epsilon(1e-13));
  // Equilateral: all three sides sqrt 3.
  for (int a = 0; a < 3; ++a)
    CHECK(std::abs(ens.points[a] - ens.points[(a + 1) % 3]) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(ens.method == FeketeMethod::ExactExchange);
}

TEST_CASE("weighted Fekete points match brute force on a small pool") {
  const WeightedPool pool = candidate_pool(unit_interval, lorentz, 8);
  REQUIRE(pool.points.size() >= 16);
  const std::size_t n = 4, P = pool.points.size();
  const FeketeEnsemble ens = select_fekete(pool.points, pool.log_weights, n);
  double best = -1e300;
  for (std::size_t a = 0; a < P; ++a)
    for (std::size_t b = a + 1; b < P; ++b)
      for (std::size_t c = b + 1; c < P; ++c)
        for (std::size_t d = c + 1; d < P; ++d) {
          const std::size_t id[] = {a, b, c, d};
          double v = 0.0;
          for (int i = 0; i < 4; ++i) {
            v += double(n - 1) * pool.log_weights[id[i]];
            for (int j = i + 1; j < 4; ++j) v += std::log(std::abs(pool.points[id[i]] - pool.points[id[j]]));
          }
          best = std::max(best, v);
        }
  CHECK(ens.log_vandermonde == doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("segment and weighted examples") {
  const FeketeEnsemble two = fekete_points(interval, 2);
  std::vector<double> xs{two.points[0].real(), two.points[1].real()};
  std::sort(xs.begin(), xs.end());
  CHECK(xs == std::vector<double>{-1.0, 1.0});

  const FeketeEnsemble w2 = fekete_points(unit_interval, 2, lorentz);
  for (Point p : w2.points) {
    CHECK(p.real() >= 0.25 - 1e-12);
    CHECK(p.real() <= 1.0);
  }
  CHECK(w2.weighted);
  CHECK(w2.weight_values.size() == 2);
}

TEST_CASE("exchange passes converge to a local optimum") {
  const SetSpec square{Polygon{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}};
  const FeketeEnsemble ens = fekete_points(square, 24);
  CHECK(ens.method == FeketeMethod::ExactExchange);
  const auto pool = boundary_nodes(square, 16 * 24);
  CHECK(best_single_exchange_gain(ens, pool, {}) <= 1e-9);

  // The greedy start alone is never better.
  FeketeOptions greedy;
  greedy.exchange = false;
  const FeketeEnsemble g = select_fekete(pool, {}, 24, greedy);
  CHECK(g.method == FeketeMethod::GreedyLeja);
  CHECK(g.log_vandermonde <= ens.log_vandermonde + 1e-12);
}

TEST_CASE("counting measure and its potential") {
  const QuadMeasure four = counting_measure(fekete_points(disk, 4));
  for (double w : four.weights) CHECK(w == 0.25);
  const QuadMeasure seg = counting_measure(fekete_points(interval, 2));
  CHECK(std::abs(potential(seg, 0.0)) < 1e-15);
  CHECK(std::abs(potential(counting_measure(fekete_points(disk, 64)), 0.0)) < 1e-3);
}

TEST_CASE("Fekete polynomial norms") {
  CHECK(fekete_polynomial_norm(fekete_points(disk, 8), disk) == doctest::Approx(1.0).epsilon(0.05));
  CHECK(fekete_polynomial_norm(fekete_points(interval, 8), interval) == doctest::Approx(0.5).epsilon(0.05));
  const double target = 27.0 / 256.0;  // exp(-F_w) = 3^3 / 2^8
  CHECK(std::exp(-lorentz_robin_constant()) == doctest::Approx(target).epsilon(1e-14));
  const FeketeEnsemble w = fekete_points(unit_interval, 32, lorentz);
  CHECK(fekete_polynomial_norm(w, unit_interval, lorentz) == doctest::Approx(target).epsilon(0.05));
}

TEST_CASE("pool size and weight checks") {
  const auto small = boundary_nodes(disk, 12);
  CHECK_THROWS_AS(select_fekete(small, {}, 4), Error);
  try {
    select_fekete(small, {}, 4);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoolTooSmall);
  }
  CHECK_NOTHROW(select_fekete(small, {}, 3));
  try {
    fekete_points(disk, 8, lorentz);
    FAIL("expected NotAdmissible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAdmissible);
  }
}

TEST_CASE("transfinite diameter estimate") {
  const FeketeEnsemble ens = fekete_points(disk, 64);
  CHECK(transfinite_diameter_estimate(ens.points) == doctest::Approx(1.0).epsilon(0.1));
  const std::vector<Point> two{{-1, 0}, {1, 0}};
  CHECK(transfinite_diameter_estimate(two) == doctest::Approx(2.0));
}
