#include "wehrl/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace wehrl {
namespace {

// Golub–Welsch for weight (1-t)^a (1+t)^b on [-1, 1].
GaussRule jacobi_symmetric_interval(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("Gauss rule needs at least one node");
  if (a <= -1.0 || b <= -1.0) throw std::invalid_argument("Jacobi exponents must exceed -1");
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  const double ab = a + b;
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag[k] = (k == 0) ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    double beta_k;
    if (k == 1)
      beta_k = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    else
      beta_k = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    sub[k - 1] = std::sqrt(beta_k);
  }
  GaussRule rule;
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                              std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
  if (n == 1) {
    rule.nodes = Eigen::VectorXd::Constant(1, diag[0]);
    rule.weights = Eigen::VectorXd::Constant(1, mu0);
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Golub-Welsch eigensolve failed");
  rule.nodes = solver.eigenvalues();
  rule.weights = mu0 * solver.eigenvectors().row(0).transpose().array().square();
  return rule;
}

}  // namespace

GaussRule gauss_jacobi01(int n, double alpha, double beta) {
  // x = (1+t)/2: x^alpha (1-x)^beta dx = 2^{-(alpha+beta+1)} (1+t)^alpha (1-t)^beta dt
  GaussRule r = jacobi_symmetric_interval(n, beta, alpha);
  r.nodes = (r.nodes.array() + 1.0) * 0.5;
  r.weights *= std::pow(2.0, -(alpha + beta + 1.0));
  return r;
}

GaussRule gauss_legendre(int n) { return jacobi_symmetric_interval(n, 0.0, 0.0); }

}  // namespace wehrl
