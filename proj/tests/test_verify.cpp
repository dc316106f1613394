#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <potconst/constants.hpp>
#include <potconst/error.hpp>
#include <potconst/verify.hpp>
#include <potconst/weighted.hpp>

#include <cmath>
#include <numbers>
#include <set>

using namespace potconst;
using std::numbers::pi;

namespace {

const SetSpec disk{Disk{}};
const SetSpec interval{Segment{}};
const SetSpec unit_interval{Segment{{0, 0}, {1, 0}}};
const WeightSpec lorentz{WeightKind::IncompleteLorentz, std::nullopt, {}};

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidInput;
}

void check_chain(const FactorizationExperiment& e) {
  const double tol = chain_tolerance_per_degree * e.n_total;
  CHECK(e.lhs <= e.rhs_m + tol);
  CHECK(e.rhs_m <= e.rhs + tol);
  CHECK(e.chain_holds);
}

}  // namespace

TEST_CASE("roots of unity split into linear factors") {
  // ||z - w|| = 2 for every factor and ||z^n - 1|| = 2.
  for (std::size_t n : {4u, 8u}) {
    std::vector<std::vector<Point>> zeros;
    for (std::size_t k = 0; k < n; ++k) zeros.push_back({std::polar(1.0, 2 * pi * double(k) / double(n))});
    const ChainConstants c{disk_constant_closed_form(n), std::log(2.0)};
    const FactorizationExperiment e = product_inequality_check(disk, std::nullopt, zeros, c);
    CHECK(e.n_total == double(n));
    CHECK(e.lhs == doctest::Approx(double(n) * std::log(2.0)).epsilon(1e-12));
    CHECK(e.log_norm_product == doctest::Approx(std::log(2.0)).epsilon(1e-9));
    CHECK(e.ratio_root == doctest::Approx(std::pow(2.0, double(n - 1) / double(n))).epsilon(1e-9));
    check_chain(e);
  }
}

TEST_CASE("Chebyshev polynomial T_2 split on the segment attains the Kneser constant") {
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<std::vector<Point>> zeros{{r}, {-r}};
  const FactorizationExperiment e = product_inequality_check(interval, std::nullopt, zeros);
  CHECK(std::exp(e.lhs - e.log_norm_product) == doctest::Approx(kneser_constant(1, 2)).epsilon(1e-9));
  CHECK(e.m == 2);
  check_chain(e);
}

TEST_CASE("chain on assorted sets") {
  const SetSpec square{Polygon{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}};
  for (const SetSpec& s : {disk, interval, square}) {
    const ChainConstants c = chain_constants(s, std::nullopt, 3, 128);
    CHECK(c.c_m <= c.c + 1e-3);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const auto zeros = random_factorization(s, 3, 12, seed);
      REQUIRE(zeros.size() == 3);
      std::size_t total = 0;
      for (const auto& z : zeros) {
        CHECK(!z.empty());
        total += z.size();
      }
      CHECK(total == 12);
      check_chain(product_inequality_check(s, std::nullopt, zeros, c));
    }
  }
  // Same seed, same factorization.
  CHECK(random_factorization(disk, 2, 9, 5) == random_factorization(disk, 2, 9, 5));
}

TEST_CASE("single factor") {
  const ChainConstants c = chain_constants(interval, std::nullopt, 1);
  CHECK(c.c_m == 0.0);
  const std::vector<std::vector<Point>> zeros{{0.1, -0.3, 0.7}};
  const FactorizationExperiment e = product_inequality_check(interval, std::nullopt, zeros);
  CHECK(e.lhs == e.log_norm_product);
  CHECK(e.ratio_root == 1.0);
  check_chain(e);
}

TEST_CASE("Mahler bounds on the disk") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t m = 2 + seed % 4, n = 6 + seed;
    const auto zeros = random_factorization(disk, m, n, seed);
    const ChainConstants c{disk_constant_closed_form(m), std::log(2.0)};
    const FactorizationExperiment e = product_inequality_check(disk, std::nullopt, zeros, c);
    const double gap = e.lhs - e.log_norm_product;
    CHECK(gap <= double(n) * std::log(2.0) + 1e-9 * double(n));
    CHECK(gap <= double(n - 1) * std::log(2.0) + 1e-9 * double(n));
  }
}

TEST_CASE("Fekete partition experiments") {
  const FactorizationExperiment d = fekete_partition_experiment(disk, std::nullopt, 2, 16, 256);
  REQUIRE(d.groups.size() == 16);
  // Groups are disjoint and cover: every point has exactly one label and the
  // factors' degrees add up.
  std::set<std::size_t> labels(d.groups.begin(), d.groups.end());
  double total = 0.0;
  for (const Factor& f : d.factors) total += f.degree();
  CHECK(total == 16.0);
  CHECK(labels.size() == d.factors.size());
  CHECK(d.ratio_root <= std::exp(disk_constant_closed_form(2)) + 1e-6);
  check_chain(d);

  const FactorizationExperiment s = fekete_partition_experiment(interval, std::nullopt, 2, 32, 256);
  CHECK(std::abs(s.ratio_root - 3.2099123) < 0.1);
  // Exact Fekete points (+-1 and the zeros of P'_31) give 3.1180587.
  CHECK(std::abs(s.ratio_root - 3.1180587) < 2e-3);
  // The split is at the midpoint-orthogonal: one group per half.
  CHECK(s.groups.size() == 32);
  REQUIRE(s.factors.size() == 2);
  for (const Factor& f : s.factors) {
    const double side = f.zeros.front().real();
    for (Point z : f.zeros) CHECK(z.real() * side >= 0.0);
  }
  check_chain(s);

  const FactorizationExperiment w = fekete_partition_experiment(unit_interval, lorentz, 2, 32, 256);
  CHECK(w.ratio_root <= 2.8222954);
  check_chain(w);

  CHECK(kind_of([] { fekete_partition_experiment(disk, std::nullopt, 1, 16, 64); }) == ErrorKind::BadM);
  CHECK(kind_of([] { fekete_partition_experiment(disk, std::nullopt, 5, 4, 64); }) == ErrorKind::BadM);
}

TEST_CASE("countable set demo") {
  // E = {0, 1, 1/4, 1/6}: norms 1, 3/4, 5/6 over |0 - 1||0 - 1/4||0 - 1/6| = 1/24.
  const std::vector<double> k{1, 2, 3, 4};
  const CountableDemo three = countable_set_demo(std::span(k).first(3), 3);
  CHECK(three.ratio_exact == "15");
  CHECK(three.bound_holds);
  const CountableDemo four = countable_set_demo(k, 4);
  CHECK(four.ratio >= 4.0);
  CHECK(four.bound_holds);

  const std::vector<double> ones(5, 1.0);
  CHECK(countable_set_demo(ones, 2).ratio >= 1.0);

  const std::vector<double> pow2{2, 4, 8, 16, 32};
  const CountableDemo p = countable_set_demo(pow2, 5);
  CHECK(p.ratio >= 32.0);
  CHECK(p.bound_holds);

  std::vector<double> kk;
  for (int j = 1; j <= 10; ++j) {
    kk.push_back(j);
    CHECK(countable_set_demo(kk, kk.size()).bound_holds);
  }

  const std::vector<double> dec{1, 3, 2};
  CHECK(kind_of([&] { countable_set_demo(dec, 2); }) == ErrorKind::BadSequence);
  const std::vector<double> small{0.5, 1};
  CHECK(kind_of([&] { countable_set_demo(small, 1); }) == ErrorKind::BadSequence);
  CHECK(kind_of([&] { countable_set_demo(k, 5); }) == ErrorKind::BadSequence);
}

TEST_CASE("generalized polynomials") {
  const std::vector<std::vector<Point>> zeros{{0.3, -0.2}, {0.5}};
  const ChainConstants c = chain_constants(interval, std::nullopt, 2, 256);
  const FactorizationExperiment plain = product_inequality_check(interval, std::nullopt, zeros, c);
  const std::vector<Factor> fs{{{0.3, -0.2}, {1.0, 1.0}}, {{0.5}, {}}};
  const FactorizationExperiment gen = generalized_polynomial_check(interval, fs, c);
  CHECK(gen.lhs == plain.lhs);
  CHECK(gen.log_norm_product == plain.log_norm_product);
  CHECK(gen.rhs_m == plain.rhs_m);

  const std::vector<Factor> halves{{{1.0}, {0.5}}, {{-1.0}, {0.5}}};
  const FactorizationExperiment h = generalized_polynomial_check(disk, halves);
  CHECK(h.n_total == 1.0);
  CHECK(h.lhs == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  check_chain(h);

  const std::vector<Factor> one{{{0.0}, {pi}}};
  const FactorizationExperiment o = generalized_polynomial_check(interval, one);
  CHECK(o.lhs == o.log_norm_product);
  CHECK(o.lhs == doctest::Approx(0.0));
  check_chain(o);

  const std::vector<Factor> bad{{{0.0}, {-1.0}}};
  CHECK(kind_of([&] { generalized_polynomial_check(interval, bad); }) == ErrorKind::BadExponent);
  const std::vector<Factor> empty{{{}, {}}};
  CHECK(kind_of([&] { generalized_polynomial_check(interval, empty); }) == ErrorKind::EmptyFactor);
  const std::vector<Factor> none;
  CHECK(kind_of([&] { generalized_polynomial_check(interval, none); }) == ErrorKind::EmptyFactor);

  const SetSpec pts{FinitePoints{{{0, 0}, {1, 0}}}};
  const std::vector<Factor> kill{{{0.0, 1.0}, {}}};
  CHECK(kind_of([&] { generalized_polynomial_check(pts, kill, ChainConstants{0.0, 1.0}); }) == ErrorKind::ZeroNorm);
}
