// Acceptance runner: one PASS/FAIL line per criterion, with the measured
// numbers and wall time. `acceptance --criterion k` runs a single one.
#include <potconst/constants.hpp>
#include <potconst/equilibrium.hpp>
#include <potconst/verify.hpp>
#include <potconst/weighted.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

using namespace potconst;

namespace {

const double ln2 = std::numbers::ln2;
const SetSpec disk{Disk{}};
const SetSpec interval{Segment{}};
const SetSpec unit_interval{Segment{{0, 0}, {1, 0}}};
const SetSpec square{Polygon{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}};
const SetSpec obtuse{Polygon{{{-1, 0}, {1, 0}, {0.2, 0.3}}}};
const WeightSpec lorentz{WeightKind::IncompleteLorentz, std::nullopt, {}};
const WeightSpec radial{WeightKind::RadialExp, std::nullopt, {}};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome c1() {
  const ConstantReport r = constant_me(disk, 1024);
  const bool ok = std::abs(r.value - ln2) < 1e-6 && std::abs(r.exp_value - 2.0) < 1e-6;
  return {ok, fmt("C = %.12f, M = %.12f", r.value, r.exp_value)};
}

Outcome c2() {
  // Quadrature of log d_E = log(1 + |x|) against the arcsine measure, plus
  // the library value.
  const Equilibrium eq = equilibrium(interval, 4096);
  const double q = integrate(eq.measure, [](Point z) { return std::log1p(std::abs(z.real())); }) - std::log(eq.cap.value);
  const ConstantReport r = constant_me(interval, 512);
  const bool ok = std::abs(std::exp(q) - 3.2099123) < 1e-5 && std::abs(r.exp_value - 3.2099123) < 1e-5;
  return {ok, fmt("quadrature M = %.9f, reported M = %.9f (%s)", std::exp(q), r.exp_value,
                  r.method == ConstantMethod::ClosedForm ? "closed form" : "quadrature")};
}

Outcome c3() {
  const double root = std::exp(log_borwein_constant(1000) / 1000.0);
  return {std::abs(root - 3.20991) < 1e-2, fmt("n-th root at n = 1000: %.9f", root)};
}

Outcome c4() {
  bool ok = true;
  std::string d;
  for (std::size_t m = 2; m <= 8; ++m) {
    const ConstantReport r = constant_ce_m(disk, m, 512);
    const double exact = disk_constant_closed_form(m);
    const double opt = *r.optimizer_value;
    ok = ok && std::abs(opt - exact) < 1e-3 && opt < ln2 && r.value < ln2;
    d += fmt("m=%zu: %.6f vs %.6f; ", m, opt, exact);
  }
  return {ok, d};
}

Outcome c5() {
  const ConstantReport r = constant_ce_w(unit_interval, lorentz, 256);
  const WeightedEquilibrium we = weighted_equilibrium(unit_interval, lorentz, 256);
  const double F = 8 * std::log(2.0) - 3 * std::log(3.0);
  const bool ok = std::abs(r.value - 1.037550517) < 1e-6 && std::abs(r.exp_value - 2.8222954) < 1e-5 &&
                  std::abs(we.F_w - F) < 1e-12;
  return {ok, fmt("C^w = %.10f, exp = %.8f, F_w = %.15f", r.value, r.exp_value, we.F_w)};
}

Outcome c6() {
  const ConstantReport r = constant_ce_w(SetSpec{Disk{{0, 0}, 4.0}}, radial, 256);
  return {std::abs(r.value - 0.5) < 1e-8, fmt("C^w = %.12f", r.value)};
}

Outcome c7() {
  const double d = numeric_capacity(disk, 200).value;
  const double s = numeric_capacity(interval, 200).value;
  return {std::abs(d - 1.0) < 0.02 && std::abs(s - 0.5) < 0.01, fmt("disk %.5f, segment %.5f", d, s)};
}

Outcome c8() {
  const SetSpec sets[] = {disk, interval, square, obtuse};
  const std::size_t ms[] = {2, 3, 5};
  std::mt19937_64 rng(8);
  std::size_t count = 0, failures = 0, mahler_failures = 0;
  double worst = -1e300;
  // Constants once per (set, m).
  std::vector<ChainConstants> cache;
  for (const SetSpec& s : sets)
    for (std::size_t m : ms) cache.push_back(chain_constants(s, std::nullopt, m, 256));
  for (std::size_t k = 0; k < 500; ++k) {
    const std::size_t si = k % 4, mi = (k / 4) % 3, key = si * 3 + mi;
    const std::size_t m = ms[mi];
    const std::size_t n = m + rng() % 25;
    const auto zeros = random_factorization(sets[si], m, n, 1000 + k);
    const FactorizationExperiment e = product_inequality_check(sets[si], std::nullopt, zeros, cache[key]);
    ++count;
    const double slack = e.lhs - e.rhs_m;
    worst = std::max(worst, slack / double(n));
    if (!(slack <= chain_tolerance_per_degree * double(n)) || !e.chain_holds) ++failures;
    if (si == 0) {
      const double gap = e.lhs - e.log_norm_product;
      if (gap > double(n) * ln2 + 1e-9 * double(n)) ++mahler_failures;
      if (m <= n && gap > double(n - 1) * ln2 + 1e-9 * double(n)) ++mahler_failures;
    }
  }
  return {failures == 0 && mahler_failures == 0,
          fmt("%zu factorizations, %zu chain violations, %zu Mahler violations, max (lhs - rhs_m)/n = %.4f", count,
              failures, mahler_failures, worst)};
}

Outcome c9() {
  const double target = std::exp(disk_constant_closed_form(2));
  double prev = 0.0;
  bool increasing = true;
  std::string d;
  for (std::size_t n : {16u, 32u, 64u}) {
    const FactorizationExperiment e = fekete_partition_experiment(disk, std::nullopt, 2, n, 512);
    increasing = increasing && e.ratio_root > prev;
    prev = e.ratio_root;
    d += fmt("n=%zu: %.5f; ", n, e.ratio_root);
  }
  d += fmt("target %.5f, gap %.5f", target, target - prev);
  return {increasing && target - prev <= 0.05 && prev <= target + 1e-9, d};
}

Outcome c10() {
  std::vector<double> A;
  bool ok = true;
  for (int n = 1; n <= 10; ++n) {
    A.push_back(n);
    ok = ok && countable_set_demo(A, A.size()).bound_holds;
  }
  const CountableDemo last = countable_set_demo(A, 10);
  return {ok, fmt("all n <= 10 hold; ratio at n = 10 is %s", last.ratio_exact.c_str())};
}

Outcome c11() {
  const std::vector<Point> pts{{-1, 0}, {1, 0}};
  const std::vector<double> w{1.0, 1.0}, r{100.0};
  const double mass = riesz_mass_check(pts, w, r)[0].mass_estimate;
  return {std::abs(mass - 1.0) < 1e-4,
          fmt("mass at r = 100 is %.10f (mass of D_r is 1 - 2/(pi r) + O(r^-2) = %.10f)", mass,
              1.0 - 2.0 / (std::numbers::pi * 100.0))};
}

Outcome c12() {
  bool ok = true;
  std::string d;
  const std::pair<const char*, SetSpec> named[] = {
      {"disk", disk}, {"segment", interval}, {"square", square}, {"obtuse", obtuse}};
  for (const auto& [name, s] : named) {
    const ConstantLadder L = constant_ladder(s, 6, 128);
    bool here = L.c.value >= ln2 - 1e-6;
    for (std::size_t i = 0; i < L.c_m.size(); ++i) {
      here = here && L.c_m[i].value <= L.c.value + 1e-3;
      if (i > 0) here = here && L.c_m[i - 1].value <= L.c_m[i].value + 1e-3;
    }
    d += fmt("%s: C(2) = %.4f, C(6) = %.4f, C = %.4f%s; ", name, L.c_m.front().value, L.c_m.back().value, L.c.value,
             here ? "" : " VIOLATED");
    ok = ok && here;
  }
  return {ok, d};
}

// Wall-time budgets in seconds; criterion 12 shares its budget with 4.
const std::function<Outcome()> criteria[] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};
const double budget[] = {1, 1, 1, 30, 1, 5, 30, 120, 60, 1, 5, 30};

bool run_one(int k) {
  const auto t0 = std::chrono::steady_clock::now();
  const Outcome o = criteria[k - 1]();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < budget[k - 1];
  const bool pass = o.pass && in_time;
  std::printf("criterion %d: %s  %s [%.3f s of %.0f s]%s\n", k, pass ? "PASS" : "FAIL", o.detail.c_str(), secs,
              budget[k - 1], in_time ? "" : " over budget");
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-12)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);
  bool all = true;
  for (int k = 1; k <= 12; ++k)
    if (only == 0 || only == k) all = run_one(k) && all;
  return all ? 0 : 1;
}
