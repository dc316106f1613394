#ifndef POTCONST_QUADRATURE_HPP_
#define POTCONST_QUADRATURE_HPP_

#include <functional>
#include <span>
#include <vector>

namespace potconst {

/// Nodes and weights of a one-dimensional rule on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/**
 * Gauss–Jacobi rule with n nodes for the weight (1 - x)^alpha (1 + x)^beta
 * on [-1, 1], alpha, beta > -1. Nodes are returned in increasing order.
 *
 * Built from the symmetric Jacobi matrix of the three-term recurrence
 * (Golub–Welsch), so it is exact for polynomials of degree 2n - 1.
 */
Rule gauss_jacobi(int n, double alpha, double beta);

inline Rule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

/// Adaptive Gauss–Kronrod (61-point) integration on [a, b]; stops when the
/// error estimate falls below rel_tol times the L1 norm of f.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-14);

/// Neumaier-compensated running sum; order-deterministic.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  static double abs(double x) { return x < 0 ? -x : x; }
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double compensated_sum(std::span<const double> xs);

}  // namespace potconst

#endif  // POTCONST_QUADRATURE_HPP_
