#ifndef POTCONST_TUPLE_SEARCH_HPP_
#define POTCONST_TUPLE_SEARCH_HPP_

#include <potconst/geometry.hpp>
#include <potconst/measure.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace potconst {

struct TupleSearchOptions {
  std::size_t restarts = 10;
  std::uint64_t seed = 20080101;
  std::size_t max_sweeps = 200;
};

struct TupleSearchResult {
  double objective = 0.0;
  std::vector<Point> tuple;  // sorted lexicographically by (re, im)
  std::size_t sweeps = 0;    // total coordinate sweeps over all restarts
};

/**
 * Maximizes
 *   F(c_1..c_m) = sum_i w_i max_k [ log w(c_k) + log|z_i - c_k| ]
 * over m-tuples drawn from `grid`, where (z_i, w_i) is the measure and
 * log w(c) is grid_log_weights (empty: unweighted).
 *
 * Multistart coordinate ascent. Each coordinate update scans the whole grid
 * with the other coordinates fixed. Restart 0 begins at the m grid points of
 * largest mutual spread (greedy max-min from a diameter pair); the rest begin
 * at seeded random tuples. Restarts may run concurrently; the reduction takes
 * the largest objective, ties to the lexicographically smallest tuple.
 */
TupleSearchResult maximize_tuple_objective(const QuadMeasure& measure, std::span<const Point> grid,
                                           std::span<const double> grid_log_weights, std::size_t m,
                                           const TupleSearchOptions& options);

/// Objective above for a given tuple, compensated and in node order.
double tuple_objective(const QuadMeasure& measure, std::span<const Point> tuple,
                       std::span<const double> tuple_log_weights);

/// Worker count for parallel sections: POTCONST_THREADS if set and positive,
/// else the hardware concurrency.
std::size_t worker_threads();

}  // namespace potconst

#endif  // POTCONST_TUPLE_SEARCH_HPP_
