#include <potconst/error.hpp>
#include <potconst/quadrature.hpp>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace potconst {

Rule gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "Gauss-Jacobi rule needs n >= 1");
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw Error(ErrorKind::InvalidInput, "Gauss-Jacobi exponents must exceed -1");

  const double ab = alpha + beta;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    // k = 0 with alpha + beta = 0 would divide 0 by 0.
    diag(k) = (k == 0) ? (beta - alpha) / (ab + 2.0) : (beta * beta - alpha * alpha) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    // At k = 1 the factor (k + ab) / (s - 1) is identically 1; cancelling it
    // avoids 0/0 when alpha + beta = -1.
    const double num = k == 1 ? 4.0 * (1.0 + alpha) * (1.0 + beta)
                              : 4.0 * k * (k + alpha) * (k + beta) * (k + ab);
    const double den = k == 1 ? s * s * (s + 1.0) : s * s * (s + 1.0) * (s - 1.0);
    sub(k - 1) = std::sqrt(num / den);
  }

  // Zeroth moment of the weight.
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                              std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));

  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = mu0;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::InvalidInput, "Gauss-Jacobi eigenproblem did not converge");
  for (int k = 0; k < n; ++k) {
    rule.nodes[k] = solver.eigenvalues()(k);
    const double v0 = solver.eigenvectors()(0, k);
    rule.weights[k] = mu0 * v0 * v0;
  }
  return rule;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol) {
  double err = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, rel_tol, &err);
}

double compensated_sum(std::span<const double> xs) {
  CompensatedSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

}  // namespace potconst
