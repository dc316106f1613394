#include <potconst/error.hpp>
#include <potconst/quadrature.hpp>
#include <potconst/tuple_search.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <thread>

namespace potconst {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool lex_less(Point a, Point b) {
  return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

bool lex_less(const std::vector<Point>& a, const std::vector<Point>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](Point x, Point y) { return lex_less(x, y); });
}

// Row-major |grid| x |nodes| table of log w(g) + log|z_i - g|.
struct Table {
  std::size_t rows = 0, cols = 0;
  std::vector<double> data;
  const double* row(std::size_t g) const { return data.data() + g * cols; }
};

std::vector<std::size_t> spread_start(std::span<const Point> grid, std::size_t m) {
  const std::size_t G = grid.size();
  std::size_t a = 0, b = G > 1 ? 1 : 0;
  double best = -1.0;
  for (std::size_t i = 0; i < G; ++i)
    for (std::size_t j = i + 1; j < G; ++j) {
      const double d = std::abs(grid[i] - grid[j]);
      if (d > best) {
        best = d;
        a = i;
        b = j;
      }
    }
  std::vector<std::size_t> out{a};
  if (m > 1) out.push_back(b);
  std::vector<double> mind(G);
  for (std::size_t g = 0; g < G; ++g) {
    mind[g] = std::abs(grid[g] - grid[a]);
    if (m > 1) mind[g] = std::min(mind[g], std::abs(grid[g] - grid[b]));
  }
  while (out.size() < m) {
    std::size_t pick = 0;
    for (std::size_t g = 1; g < G; ++g)
      if (mind[g] > mind[pick]) pick = g;
    out.push_back(pick);
    for (std::size_t g = 0; g < G; ++g) mind[g] = std::min(mind[g], std::abs(grid[g] - grid[pick]));
  }
  return out;
}

std::vector<std::size_t> random_start(std::size_t G, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> out;
  std::uniform_int_distribution<std::size_t> pick(0, G - 1);
  while (out.size() < m) {
    const std::size_t g = pick(rng);
    if (G >= m && std::find(out.begin(), out.end(), g) != out.end()) continue;
    out.push_back(g);
  }
  return out;
}

struct Ascent {
  std::vector<std::size_t> idx;
  double value = kNegInf;
  std::size_t sweeps = 0;
};

Ascent coordinate_ascent(const Table& T, std::span<const double> w, std::vector<std::size_t> idx,
                         std::size_t max_sweeps) {
  const std::size_t n = T.cols;
  const std::size_t m = idx.size();
  std::vector<double> others(n);

  auto objective = [&](const std::vector<std::size_t>& c) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double mx = kNegInf;
      for (std::size_t k : c) mx = std::max(mx, T.row(k)[i]);
      s += w[i] * mx;
    }
    return s;
  };

  Ascent res;
  double current = objective(idx);
  std::size_t sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    bool changed = false;
    for (std::size_t k = 0; k < m; ++k) {
      std::fill(others.begin(), others.end(), kNegInf);
      for (std::size_t j = 0; j < m; ++j) {
        if (j == k) continue;
        const double* r = T.row(idx[j]);
        for (std::size_t i = 0; i < n; ++i) others[i] = std::max(others[i], r[i]);
      }
      std::size_t best_g = idx[k];
      double best_val = kNegInf;
      for (std::size_t g = 0; g < T.rows; ++g) {
        const double* r = T.row(g);
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += w[i] * std::max(others[i], r[i]);
        if (s > best_val) {
          best_val = s;
          best_g = g;
        }
      }
      if (best_g != idx[k] && best_val > current + 1e-14 * (1.0 + std::abs(current))) {
        idx[k] = best_g;
        current = best_val;
        changed = true;
      }
    }
    if (!changed) {
      ++sweep;
      break;
    }
  }
  res.idx = std::move(idx);
  res.value = current;
  res.sweeps = sweep;
  return res;
}

}  // namespace

std::size_t worker_threads() {
  if (const char* env = std::getenv("POTCONST_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return std::size_t(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

double tuple_objective(const QuadMeasure& measure, std::span<const Point> tuple,
                       std::span<const double> tuple_log_weights) {
  if (tuple.empty()) throw Error(ErrorKind::EmptyTuple, "tuple has no points");
  CompensatedSum s;
  for (std::size_t i = 0; i < measure.nodes.size(); ++i) {
    const double w = measure.weights[i];
    if (w == 0.0) continue;
    double mx = kNegInf;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      const double lw = tuple_log_weights.empty() ? 0.0 : tuple_log_weights[k];
      mx = std::max(mx, lw + std::log(std::abs(measure.nodes[i] - tuple[k])));
    }
    s.add(w * mx);
  }
  return s.value();
}

TupleSearchResult maximize_tuple_objective(const QuadMeasure& measure, std::span<const Point> grid,
                                           std::span<const double> grid_log_weights, std::size_t m,
                                           const TupleSearchOptions& options) {
  if (m < 1) throw Error(ErrorKind::BadM, "tuple size must be positive");
  if (grid.empty()) throw Error(ErrorKind::EmptyTuple, "empty candidate grid");
  if (!grid_log_weights.empty() && grid_log_weights.size() != grid.size())
    throw Error(ErrorKind::InvalidInput, "one log-weight per grid point is required");
  validate(measure);

  std::vector<Point> nodes;
  std::vector<double> w;
  for (std::size_t i = 0; i < measure.nodes.size(); ++i)
    if (measure.weights[i] > 0.0) {
      nodes.push_back(measure.nodes[i]);
      w.push_back(measure.weights[i]);
    }

  Table T;
  T.rows = grid.size();
  T.cols = nodes.size();
  T.data.resize(T.rows * T.cols);
  for (std::size_t g = 0; g < T.rows; ++g) {
    const double lw = grid_log_weights.empty() ? 0.0 : grid_log_weights[g];
    double* r = T.data.data() + g * T.cols;
    for (std::size_t i = 0; i < T.cols; ++i) r[i] = lw + std::log(std::abs(nodes[i] - grid[g]));
  }

  const std::size_t restarts = std::max<std::size_t>(1, options.restarts);
  std::vector<Ascent> results(restarts);
  auto run = [&](std::size_t r) {
    auto start = (r == 0) ? spread_start(grid, m)
                          : random_start(grid.size(), m, options.seed + 0x9E3779B97F4A7C15ull * r);
    results[r] = coordinate_ascent(T, w, std::move(start), options.max_sweeps);
  };

  const std::size_t threads = std::min(restarts, worker_threads());
  if (threads <= 1) {
    for (std::size_t r = 0; r < restarts; ++r) run(r);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t r = next++; r < restarts; r = next++) run(r);
      });
    for (auto& th : pool) th.join();
  }

  TupleSearchResult best;
  bool have = false;
  for (const Ascent& a : results) {
    best.sweeps += a.sweeps;
    std::vector<Point> tuple;
    std::vector<double> lws;
    for (std::size_t g : a.idx) tuple.push_back(grid[g]);
    std::vector<std::size_t> order(tuple.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return lex_less(tuple[x], tuple[y]); });
    std::vector<Point> sorted;
    for (std::size_t k : order) {
      sorted.push_back(tuple[k]);
      lws.push_back(grid_log_weights.empty() ? 0.0 : grid_log_weights[a.idx[k]]);
    }
    const double value = tuple_objective(measure, sorted, lws);
    if (!have || value > best.objective || (value == best.objective && lex_less(sorted, best.tuple))) {
      best.objective = value;
      best.tuple = std::move(sorted);
      have = true;
    }
  }
  return best;
}

}  // namespace potconst
