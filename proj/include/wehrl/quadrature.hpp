#pragma once

#include <Eigen/Core>

namespace wehrl {

struct GaussRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;

  template <typename F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (Eigen::Index i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

/// n-point Gauss rule for ∫₀¹ f(x) x^alpha (1-x)^beta dx (Golub–Welsch).
/// Exact for polynomials of degree <= 2n-1. Requires alpha, beta > -1.
GaussRule gauss_jacobi01(int n, double alpha, double beta);

/// Gauss–Legendre on [-1, 1].
GaussRule gauss_legendre(int n);

}  // namespace wehrl
